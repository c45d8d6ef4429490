"""Truncated q-series arithmetic with fractional exponents.

A series is a coefficient vector on the exponent grid ``offset + n/denom``
for ``n = 0 .. trunc``.  Coefficients beyond ``trunc`` are unknown,
coefficients below ``offset`` (or off the grid) are zero.  Binary
operations rescale both operands to the lcm grid and keep the tightest
truncation both sides support, so a result never claims coefficients it
cannot know.

Two coefficient payloads are supported and never mixed silently:

* ``EXACT``  -- arbitrary-precision rationals (``fractions.Fraction``),
  used for every identity check;
* ``FLOAT``  -- double-precision complex, used for boundary evaluation
  and for group-trace averages that are rounded back to integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Sequence

import numpy as np

EXACT = "exact"
FLOAT = "float"

_TWO_PI = 2.0 * math.pi


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {x!r}")


@dataclass(frozen=True)
class QSeries:
    """Formal series sum_n coeffs[n] * q^(offset + n/denom).

    ``offset`` is the grid origin; freshly built characters place their
    leading exponent there, but arithmetic may leave cancelled zeros at
    the front (``min_exponent`` always returns the leading *nonzero*
    exponent).  ``trunc = len(coeffs) - 1`` is the inclusive truncation
    index.
    """

    offset: Fraction
    denom: int
    coeffs: tuple
    kind: str = EXACT

    def __post_init__(self):
        if self.denom < 1:
            raise ValueError("denom must be a positive integer")
        if self.kind not in (EXACT, FLOAT):
            raise ValueError(f"unknown payload kind {self.kind!r}")
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")
        object.__setattr__(self, "offset", _as_fraction(self.offset))
        if self.kind == EXACT:
            object.__setattr__(
                self, "coeffs", tuple(_as_fraction(c) for c in self.coeffs)
            )
        else:
            object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    # ------------------------------------------------------------------
    # basic structure

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @property
    def end_exponent(self) -> Fraction:
        """Largest exponent whose coefficient is known."""
        return self.offset + Fraction(self.trunc, self.denom)

    def exponent(self, n: int) -> Fraction:
        return self.offset + Fraction(n, self.denom)

    def items(self) -> Iterator[tuple[Fraction, object]]:
        """(exponent, coefficient) pairs for the nonzero coefficients."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                yield self.exponent(n), c

    def coefficient(self, e) -> object:
        """Coefficient of q^e; zero below/off the grid, error past trunc."""
        e = Fraction(e)
        if e > self.end_exponent:
            raise ValueError(f"exponent {e} is beyond the truncation range")
        step = (e - self.offset) * self.denom
        if step < 0 or step.denominator != 1:
            return Fraction(0) if self.kind == EXACT else 0j
        return self.coeffs[int(step)]

    def min_exponent(self) -> Fraction:
        """Smallest exponent with nonzero coefficient; error if none."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return self.exponent(n)
        raise ValueError("zero series has no leading exponent")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # ------------------------------------------------------------------
    # reshaping

    def rescaled(self, new_denom: int) -> "QSeries":
        """Same series on a finer grid (new_denom must be a multiple)."""
        if new_denom == self.denom:
            return self
        if new_denom % self.denom:
            raise ValueError("can only rescale to a multiple of the denom")
        f = new_denom // self.denom
        zero = Fraction(0) if self.kind == EXACT else 0j
        coeffs = [zero] * (self.trunc * f + 1)
        for n, c in enumerate(self.coeffs):
            coeffs[n * f] = c
        return QSeries(self.offset, new_denom, tuple(coeffs), self.kind)

    def truncated(self, new_trunc: int) -> "QSeries":
        if new_trunc > self.trunc:
            raise ValueError("cannot extend a series beyond its known range")
        return QSeries(self.offset, self.denom, self.coeffs[: new_trunc + 1], self.kind)

    def trimmed(self) -> "QSeries":
        """Drop exactly-zero leading coefficients (end exponent unchanged)."""
        i = 0
        while i < self.trunc and self.coeffs[i] == 0:
            i += 1
        if i == 0:
            return self
        return QSeries(self.exponent(i), self.denom, self.coeffs[i:], self.kind)

    def to_float(self) -> "QSeries":
        if self.kind == FLOAT:
            return self
        return QSeries(
            self.offset, self.denom, tuple(float(c) for c in self.coeffs), FLOAT
        )

    # ------------------------------------------------------------------
    # arithmetic

    def _require_same_kind(self, other: "QSeries"):
        if self.kind != other.kind:
            raise ValueError(
                f"payload kinds differ ({self.kind} vs {other.kind}); "
                "convert explicitly before mixing"
            )

    def __neg__(self) -> "QSeries":
        return self.scaled(-1)

    def scaled(self, c) -> "QSeries":
        if self.kind == EXACT:
            c = _as_fraction(c)
            return QSeries(
                self.offset, self.denom, tuple(c * x for x in self.coeffs), EXACT
            )
        c = complex(c)
        return QSeries(
            self.offset, self.denom, tuple(c * x for x in self.coeffs), FLOAT
        )

    def shifted(self, e) -> "QSeries":
        """Multiply by q^e (pure offset shift)."""
        return QSeries(self.offset + Fraction(e), self.denom, self.coeffs, self.kind)

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        self._require_same_kind(other)
        L = math.lcm(self.denom, other.denom)
        a, b = self.rescaled(L), other.rescaled(L)
        gap = (a.offset - b.offset) * L
        if gap.denominator != 1:
            raise ValueError("exponent grids are incompatible for addition")
        offset = min(a.offset, b.offset)
        end = min(a.end_exponent, b.end_exponent)
        if end < offset:
            raise ValueError("truncation underflow: summands share no valid range")
        n = int((end - offset) * L)
        zero = Fraction(0) if self.kind == EXACT else 0j
        coeffs = [zero] * (n + 1)
        for s in (a, b):
            base = int((s.offset - offset) * L)
            for i, c in enumerate(s.coeffs):
                if base + i > n:
                    break
                coeffs[base + i] += c
        out = QSeries(offset, L, tuple(coeffs), self.kind)
        return out.trimmed() if self.kind == EXACT else out

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction, float, complex)):
            return self.scaled(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._require_same_kind(other)
        L = math.lcm(self.denom, other.denom)
        a, b = self.rescaled(L), other.rescaled(L)
        t = min(a.trunc, b.trunc)
        ca, cb = a.coeffs[: t + 1], b.coeffs[: t + 1]
        if self.kind == FLOAT:
            conv = np.convolve(np.asarray(ca, dtype=complex), np.asarray(cb, dtype=complex))
            coeffs = tuple(conv[: t + 1])
        else:
            acc = [Fraction(0)] * (t + 1)
            # iterate the sparser operand on the outside
            if sum(1 for c in ca if c) > sum(1 for c in cb if c):
                ca, cb = cb, ca
            for i, ai in enumerate(ca):
                if ai:
                    for j in range(min(len(cb), t + 1 - i)):
                        if cb[j]:
                            acc[i + j] += ai * cb[j]
            coeffs = tuple(acc)
        return QSeries(a.offset + b.offset, L, coeffs, self.kind)

    __rmul__ = __mul__

    def inv(self) -> "QSeries":
        """Multiplicative inverse up to trunc; leading coefficient must be nonzero."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ValueError("series with zero leading coefficient has no inverse")
        n = self.trunc
        if self.kind == EXACT:
            inv0 = Fraction(1) / a0
            out = [inv0] + [Fraction(0)] * n
        else:
            inv0 = 1.0 / a0
            out = [inv0] + [0j] * n
        support = [i for i, c in enumerate(self.coeffs) if i and c != 0]
        for m in range(1, n + 1):
            s = 0
            for i in support:
                if i > m:
                    break
                s += self.coeffs[i] * out[m - i]
            if s:
                out[m] = -inv0 * s
        return QSeries(-self.offset, self.denom, tuple(out), self.kind)

    # ------------------------------------------------------------------
    # evaluation and comparison

    def eval_at(self, y: float) -> complex:
        """Evaluate at tau = iy, i.e. q = exp(-2*pi*y), y > 0.

        The dropped tail is bounded by
        ``exp(-2*pi*y*(end_exponent + 1/denom)) * sum of |tail coefficients|``;
        for the partition-type coefficients appearing here the tail is
        negligible once ``trunc/denom`` exceeds roughly ``1/(6 y^2)``.
        """
        if y <= 0:
            raise ValueError("evaluation point must satisfy y > 0")
        c = np.asarray(self.coeffs, dtype=complex)
        e = float(self.offset) + np.arange(len(c)) / self.denom
        return complex(np.sum(c * np.exp(-_TWO_PI * y * e)))

    def agrees_with(self, other: "QSeries", through=None):
        """Coefficientwise comparison over the common valid range.

        Returns ``(True, None)`` or ``(False, first_differing_exponent)``.
        ``through`` caps the compared range at a given exponent.
        """
        end = min(self.end_exponent, other.end_exponent)
        if through is not None:
            end = min(end, Fraction(through))
        mine = {e: c for e, c in self.items() if e <= end}
        theirs = {e: c for e, c in other.items() if e <= end}
        for e in sorted(set(mine) | set(theirs)):
            if mine.get(e, 0) != theirs.get(e, 0):
                return False, e
        return True, None


# ----------------------------------------------------------------------
# constructors

def from_terms(terms: dict, end, denom: int = 1, kind: str = EXACT) -> QSeries:
    """Series with the given exponent -> coefficient map, known zero elsewhere
    through exponent ``end``."""
    if not terms:
        zero = Fraction(0) if kind == EXACT else 0j
        return QSeries(Fraction(0), denom, (zero,) * (int(Fraction(end) * denom) + 1), kind)
    exps = sorted(Fraction(e) for e in terms)
    offset = exps[0]
    end = Fraction(end)
    if end < offset:
        raise ValueError("end exponent below the leading term")
    n = (end - offset) * denom
    if n.denominator != 1:
        raise ValueError("end exponent is off the grid")
    zero = Fraction(0) if kind == EXACT else 0j
    coeffs = [zero] * (int(n) + 1)
    for e, c in terms.items():
        step = (Fraction(e) - offset) * denom
        if step.denominator != 1:
            raise ValueError(f"exponent {e} is off the 1/{denom} grid")
        coeffs[int(step)] = Fraction(c) if kind == EXACT else complex(c)
    return QSeries(offset, denom, tuple(coeffs), kind)


def one(trunc: int, denom: int = 1, kind: str = EXACT) -> QSeries:
    """The constant series 1, known zero through the given trunc."""
    zero = Fraction(0) if kind == EXACT else 0j
    unit = Fraction(1) if kind == EXACT else 1.0 + 0j
    return QSeries(Fraction(0), denom, (unit,) + (zero,) * trunc, kind)


# ----------------------------------------------------------------------
# product forms

def _apply_factor_exact(coeffs: list, g: int, sign: int, power: int):
    n = len(coeffs)
    if power == 1:
        for i in range(n - 1, g - 1, -1):
            if coeffs[i - g]:
                coeffs[i] += sign * coeffs[i - g]
    else:
        s = -sign
        for i in range(g, n):
            if coeffs[i - g]:
                coeffs[i] += s * coeffs[i - g]


def _apply_factor_float(coeffs: np.ndarray, g: int, sign: int, power: int):
    if power == 1:
        coeffs[g:] += sign * coeffs[:-g].copy()
        return
    # division: c[i] += (-sign) * c[i-g] with updated values, i.e. a signed
    # cumulative sum along each residue class mod g
    s = -sign
    for r in range(g):
        sl = coeffs[r::g]
        if s == 1:
            np.cumsum(sl, out=sl)
        else:
            alt = np.empty(len(sl))
            alt[::2] = 1.0
            alt[1::2] = -1.0
            sl *= alt
            np.cumsum(sl, out=sl)
            sl *= alt


def product_form(factors: Iterable, trunc: int, kind: str = EXACT) -> QSeries:
    """Product over n >= 1 of ``(1 + sign*q^(e_n))^power`` per factor family.

    Each factor is ``(step, sign, power)`` or ``(step, sign, power, half)``;
    the exponents are ``e_n = n*step`` or, with ``half`` set,
    ``e_n = (n - 1/2)*step``.  ``trunc`` counts grid steps; the grid denom
    is the lcm forced by the steps.
    """
    fams = []
    denom = 1
    for f in factors:
        step, sign, power = f[0], f[1], f[2]
        half = bool(f[3]) if len(f) > 3 else False
        step = Fraction(step)
        if step == 0:
            raise ValueError("factor family with zero exponent step")
        if sign not in (1, -1) or power not in (1, -1):
            raise ValueError("sign and power must be +1 or -1")
        unit = step / 2 if half else step
        denom = math.lcm(denom, unit.denominator)
        fams.append((step, sign, power, half))
    if kind == EXACT:
        coeffs = [Fraction(0)] * (trunc + 1)
        coeffs[0] = Fraction(1)
    else:
        coeffs = np.zeros(trunc + 1)
        coeffs[0] = 1.0
    for step, sign, power, half in fams:
        n = 1
        while True:
            e = (Fraction(2 * n - 1, 2) if half else Fraction(n)) * step
            g = e * denom
            if g <= 0:
                raise ValueError("factor exponents must be positive")
            if g > trunc:
                break
            if kind == EXACT:
                _apply_factor_exact(coeffs, int(g), sign, power)
            else:
                _apply_factor_float(coeffs, int(g), sign, power)
            n += 1
    if kind == FLOAT:
        coeffs = tuple(complex(c) for c in coeffs)
    else:
        coeffs = tuple(coeffs)
    return QSeries(Fraction(0), denom, coeffs, kind)


def partition_series(trunc: int, kind: str = EXACT) -> QSeries:
    """The partition generating function prod (1-q^n)^(-1), via the
    pentagonal-number recurrence (fast path for deep truncations)."""
    p = [0] * (trunc + 1)
    p[0] = 1
    for n in range(1, trunc + 1):
        s = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sgn = 1 if k % 2 else -1
            s += sgn * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                s += sgn * p[n - g2]
            k += 1
        p[n] = s
    if kind == FLOAT:
        return QSeries(Fraction(0), 1, tuple(float(x) for x in p), FLOAT)
    return QSeries(Fraction(0), 1, tuple(p), EXACT)


# ----------------------------------------------------------------------
# operation-style wrappers

def series_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def series_inv(a: QSeries) -> QSeries:
    return a.inv()


def eval_at(a: QSeries, y: float) -> complex:
    return a.eval_at(y)


def min_exponent(a: QSeries) -> Fraction:
    return a.min_exponent()
