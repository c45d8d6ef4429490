"""Characters of rank-one even lattice algebras and their involution orbifolds.

The lattice is Z*alpha with <alpha, alpha> = 2k.  Irreducible modules of
the fixed-point subalgebra under the alpha -> -alpha involution fall into
the classical families

    plus, minus            the two eigenparts of the lattice algebra,
    coset(j), j != 0, k    the dual-lattice coset modules,
    half+, half-           the eigenparts of the j = k (half) coset,
    T1+/-, T2+/-           the eigenparts of the two twisted sectors,

``2k + 7`` labels in all (coset(j) is kept for every j in (-k, k), so the
j <-> -j symmetry is part of the data rather than quotiented away).

Characters carry the global q^(-1/24) shift of central charge 1.  Closed
forms: the coset character is the coset theta sum times the Heisenberg
(Fock) character; the plus/minus split adds or subtracts the graded trace
of the involution, which is supported on the Fock factor alone; the
half-coset split carries no trace correction because the involution pairs
the coset points freely; the twisted characters are built from the two
half-integer-moded Fock products with ground-state exponent 1/16.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qseries import EXACT, QSeries, partition_series, product_form

C_SHIFT = Fraction(-1, 24)  # the q^(-c/24) prefactor at c = 1


# ----------------------------------------------------------------------
# exact quantum dimensions a * sqrt(radicand)

@dataclass(frozen=True)
class QDim:
    """Exact nonnegative real of the form integer * sqrt(radicand)."""

    integer: int
    radicand: int = 1

    def __post_init__(self):
        if self.integer < 0 or self.radicand < 1:
            raise ValueError("quantum dimensions are nonnegative")
        # pull square factors out of the radicand
        r, a = self.radicand, self.integer
        d = 1
        while d * d <= r:
            while r % (d * d) == 0 and d > 1:
                r //= d * d
                a *= d
            d += 1
        object.__setattr__(self, "integer", a)
        object.__setattr__(self, "radicand", r)

    def squared(self) -> int:
        return self.integer * self.integer * self.radicand

    def value(self) -> float:
        return self.integer * math.sqrt(self.radicand)

    def scaled(self, m: int) -> "QDim":
        return QDim(self.integer * m, self.radicand)

    def __str__(self):
        if self.radicand == 1:
            return str(self.integer)
        if self.integer == 1:
            return f"sqrt({self.radicand})"
        return f"{self.integer}*sqrt({self.radicand})"


# ----------------------------------------------------------------------
# module labels

@dataclass(frozen=True)
class LatticeLabel:
    kind: str  # "coset" | "plus" | "minus" | "half" | "twisted"
    j: int = 0
    s: int = 1
    parity: int = 1

    @staticmethod
    def coset(j: int) -> "LatticeLabel":
        return LatticeLabel("coset", j=j)

    @staticmethod
    def plus() -> "LatticeLabel":
        return LatticeLabel("plus")

    @staticmethod
    def minus() -> "LatticeLabel":
        return LatticeLabel("minus")

    @staticmethod
    def half(parity: int) -> "LatticeLabel":
        return LatticeLabel("half", parity=parity)

    @staticmethod
    def twisted(s: int, parity: int) -> "LatticeLabel":
        if s not in (1, 2) or parity not in (1, -1):
            raise ValueError("twisted sector is s in {1,2} with parity +-1")
        return LatticeLabel("twisted", s=s, parity=parity)

    def __str__(self):
        sg = "+" if self.parity == 1 else "-"
        return {
            "coset": f"coset{self.j}",
            "plus": "plus",
            "minus": "minus",
            "half": f"half{sg}",
            "twisted": f"T{self.s}{sg}",
        }[self.kind]


def labels_for(k: int) -> tuple[LatticeLabel, ...]:
    """All 2k+7 catalogued labels for the charge-2k lattice."""
    out = [LatticeLabel.coset(j) for j in range(-k + 1, k)]
    out += [LatticeLabel.plus(), LatticeLabel.minus()]
    out += [LatticeLabel.half(+1), LatticeLabel.half(-1)]
    out += [LatticeLabel.twisted(s, p) for s in (1, 2) for p in (1, -1)]
    return tuple(out)


def _validate(k: int, label: LatticeLabel):
    if k < 1:
        raise ValueError("lattice charge k must be >= 1")
    if label.kind == "coset" and not (-k < label.j <= k):
        # j is 2k-periodic; accept anything but document the canonical range
        pass


# ----------------------------------------------------------------------
# building blocks

@lru_cache(maxsize=None)
def theta_coset(k: int, j: int, trunc: int) -> QSeries:
    """Coset theta sum_m q^{k(m + j/2k)^2} = sum_m q^{(2km+j)^2/4k}.

    Exponents live on ``j0^2/4k + Z`` where j0 folds j into [0, k]; the
    series is invariant under j -> -j and j -> j + 2k.  ``trunc`` counts
    integer steps above the leading exponent.
    """
    if k < 1:
        raise ValueError("lattice charge k must be >= 1")
    j0 = j % (2 * k)
    if j0 > k:
        j0 = 2 * k - j0
    base = Fraction(j0 * j0, 4 * k)
    coeffs = [0] * (trunc + 1)
    m = 0
    while True:
        hit = False
        for mm in ({m, -m} if m else {0}):
            step = k * mm * mm + mm * j0  # (2k mm + j0)^2/4k - j0^2/4k
            if 0 <= step <= trunc:
                coeffs[step] += 1
                hit = True
        if not hit and k * m * m - m * j0 > trunc:
            break
        m += 1
    return QSeries(base, 1, tuple(Fraction(c) for c in coeffs), EXACT)


@lru_cache(maxsize=None)
def fock_char(trunc: int, kind: str = EXACT) -> QSeries:
    """Graded dimension of the rank-one Heisenberg Fock space, prod (1-q^n)^-1."""
    return partition_series(trunc, kind)


@lru_cache(maxsize=None)
def fock_sign_trace(trunc: int, kind: str = EXACT) -> QSeries:
    """Graded trace of the mode-negation involution on the Fock space,
    prod (1+q^n)^-1."""
    return product_form([(1, 1, -1)], trunc, kind)


@lru_cache(maxsize=None)
def twisted_fock(trunc: int, sign: int, kind: str = EXACT) -> QSeries:
    """Half-integer-moded Fock product prod (1 - sign*q^(n-1/2))^-1 on the
    1/2 grid (``trunc`` counts half-integer steps)."""
    return product_form([(1, -sign, -1, True)], trunc, kind)


# ----------------------------------------------------------------------
# characters

@lru_cache(maxsize=None)
def char_module(k: int, label: LatticeLabel, trunc: int) -> QSeries:
    """Exact character of the labelled module, including the q^(-1/24) shift.

    ``trunc`` counts steps on the module's natural grid: integers for the
    untwisted families, half-integers for the twisted sectors.
    """
    _validate(k, label)
    if label.kind == "coset":
        theta = theta_coset(k, label.j, trunc)
        return (fock_char(trunc) * theta).shifted(C_SHIFT)
    if label.kind in ("plus", "minus"):
        full = (fock_char(trunc) * theta_coset(k, 0, trunc)).shifted(C_SHIFT)
        trace = fock_sign_trace(trunc).shifted(C_SHIFT)
        s = 1 if label.kind == "plus" else -1
        return (full + trace.scaled(s)).scaled(Fraction(1, 2))
    if label.kind == "half":
        # the involution pairs the coset points e^x <-> e^-x with no fixed
        # vector, so its graded trace vanishes and both eigenparts carry
        # exactly half the coefficients
        full = (fock_char(trunc) * theta_coset(k, k, trunc)).shifted(C_SHIFT)
        return full.scaled(Fraction(1, 2))
    if label.kind == "twisted":
        plus = twisted_fock(trunc, +1)
        minus = twisted_fock(trunc, -1)
        s = label.parity
        comb = (plus + minus.scaled(s)).scaled(Fraction(1, 2))
        return comb.shifted(Fraction(1, 16) + C_SHIFT)
    raise ValueError(f"unknown label {label!r}")


def conformal_weight(k: int, label: LatticeLabel, trunc: int = 64) -> Fraction:
    """Lowest exponent of the character plus 1/24."""
    return char_module(k, label, trunc).min_exponent() - C_SHIFT


def weight_formula(k: int, label: LatticeLabel) -> Fraction:
    """Catalogued conformal weights of the classical families."""
    if label.kind == "coset":
        j0 = label.j % (2 * k)
        if j0 > k:
            j0 = 2 * k - j0
        return Fraction(j0 * j0, 4 * k)
    if label.kind == "plus":
        return Fraction(0)
    if label.kind == "minus":
        return Fraction(1)
    if label.kind == "half":
        return Fraction(k, 4)
    if label.kind == "twisted":
        return Fraction(1, 16) if label.parity == 1 else Fraction(9, 16)
    raise ValueError(f"unknown label {label!r}")


def qdim_formula(k: int, label: LatticeLabel, twisted_value: str = "sqrt") -> QDim:
    """Quantum dimensions of the orbifold-module families over the
    fixed-point algebra.

    The twisted-sector value is sqrt(k): it is the unique choice closing
    the global-dimension identity glob = 4 * (2k) (see the verify report
    for the discrepancy flag against the tabulated value k).  Pass
    ``twisted_value="tabulated"`` to get the uncorrected k instead.
    """
    if label.kind == "coset":
        j0 = label.j % (2 * k)
        if j0 > k:
            j0 = 2 * k - j0
        if j0 == 0 or j0 == k:
            raise ValueError("coset 0 and the half coset are not single labels here")
        return QDim(2)
    if label.kind in ("plus", "minus", "half"):
        return QDim(1)
    if label.kind == "twisted":
        if twisted_value == "sqrt":
            return QDim(1, k)
        if twisted_value == "tabulated":
            return QDim(k)
        raise ValueError("twisted_value must be 'sqrt' or 'tabulated'")
    raise ValueError(f"unknown label {label!r}")


def irreducible_labels(k: int) -> tuple[LatticeLabel, ...]:
    """The k+7 irreducibles of the fixed-point algebra: cosets are taken
    once per pair {j, -j}, and coset 0 / coset k appear only through their
    split eigenparts."""
    out = [LatticeLabel.plus(), LatticeLabel.minus()]
    out += [LatticeLabel.coset(j) for j in range(1, k)]
    out += [LatticeLabel.half(+1), LatticeLabel.half(-1)]
    out += [LatticeLabel.twisted(s, p) for s in (1, 2) for p in (1, -1)]
    return tuple(out)


def glob_plus_orbifold(k: int, twisted_value: str = "sqrt") -> int:
    """Sum of squared quantum dimensions over the k+7 irreducibles of the
    fixed-point algebra."""
    return sum(
        qdim_formula(k, lab, twisted_value).squared() for lab in irreducible_labels(k)
    )


# ----------------------------------------------------------------------
# identities

def char_vl2(trunc: int) -> QSeries:
    """Character of the charge-2 lattice algebra itself (k = 1, full lattice)."""
    return (fock_char(trunc) * theta_coset(1, 0, trunc)).shifted(C_SHIFT)


def char_vl2_half(trunc: int) -> QSeries:
    """Character of its second irreducible, the half-lattice coset (k = 1)."""
    return (fock_char(trunc) * theta_coset(1, 1, trunc)).shifted(C_SHIFT)


def coset_sum_identity(T: int, trunc: int = 200):
    """Coefficientwise check that the charge-2 lattice character refines into
    the T cosets of the index-T sublattice (charge 2*T^2):

        ch V = sum_{i=0}^{T-1} ch V_{coset 2iT of the k=T^2 lattice}

    Returns ``(ok, first_failing_exponent or None, detail)``.  The companion
    refinement of the half module (cosets 2iT - T) is checked as well.
    """
    k = T * T
    lhs = char_vl2(trunc)
    rhs = None
    for i in range(T):
        term = (fock_char(trunc) * theta_coset(k, 2 * i * T, trunc)).shifted(C_SHIFT)
        rhs = term if rhs is None else rhs + term
    ok, bad = lhs.agrees_with(rhs)
    if not ok:
        return False, bad, f"T={T}: integer-sector refinement fails at exponent {bad}"
    lhs_h = char_vl2_half(trunc)
    rhs_h = None
    for i in range(T):
        term = (fock_char(trunc) * theta_coset(k, 2 * i * T - T, trunc)).shifted(C_SHIFT)
        rhs_h = term if rhs_h is None else rhs_h + term
    ok, bad = lhs_h.agrees_with(rhs_h)
    if not ok:
        return False, bad, f"T={T}: half-sector refinement fails at exponent {bad}"
    return True, None, f"T={T}: both coset refinements hold through exponent {lhs.end_exponent}"


def dual_refinement_identity(k: int, trunc: int = 50):
    """Sum over all 2k cosets equals the full dual-lattice theta
    sum_m q^(m^2/4k), on the 1/4k grid."""
    total = None
    for j in range(-k + 1, k + 1):
        t = theta_coset(k, j, trunc).rescaled(4 * k)
        total = t if total is None else total + t
    # direct dual-lattice enumeration
    end = total.end_exponent
    coeffs = [0] * (int(end * 4 * k) + 1)
    m = 0
    while Fraction(m * m, 4 * k) <= end:
        coeffs[m * m] += 1 if m == 0 else 2
        m += 1
    dual = QSeries(Fraction(0), 4 * k, tuple(Fraction(c) for c in coeffs), EXACT)
    ok, bad = total.agrees_with(dual)
    return ok, bad, f"k={k}: dual refinement {'holds' if ok else f'fails at {bad}'}"
