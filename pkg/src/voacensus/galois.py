"""Graded group traces on the half-lattice module and isotypic characters.

Every finite rotation acting on the charge-2 lattice algebra is conjugate
to a torus rotation e^{2 pi i u(0)} about the lattice axis, which fixes
the Heisenberg factor pointwise and scales e^{m alpha} by e^{i m theta}.
Its graded trace on the module M(1) (x) C[(m/2) alpha] therefore splits
into an integer-m and a half-integer-m theta sum against the common Fock
factor:

    tr = q^(-1/24) P(q) * sum_m e^(i m theta) q^(m^2),   m in Z or Z + 1/2.

A lift to the binary cover carries theta in [0, 4 pi); the two lifts of a
rotation differ by 2 pi, which fixes the integer sector and negates the
half-integer sector.  Averaging these traces against an irreducible
character of the cover extracts the isotypic multiplicity character

    ch V_chi = (1/|G|) sum_classes |c| conj(chi(c)) tr(theta_c),

whose coefficients must round to nonnegative integers; the rounding
tolerance is a hard failure bound, since a wrong table or angle shows up
as a residual many orders of magnitude above float noise.

Truncation depths here count integer exponent units.  At depth <= 200 the
accumulated float error stays below 1e-9, far inside the 1e-6 budget.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .groups import GroupData, group_data
from .lattice import C_SHIFT, char_vl2, char_vl2_half, fock_char
from .qseries import EXACT, FLOAT, QSeries

INTEGER = "integer"
HALF = "half"

HALF_OFFSET = Fraction(1, 4)  # lowest weight of the half-lattice coset

_TOL_DEFAULT = 1e-6


def _theta_exponents(sector: str, depth: int):
    """(grid_step, value) pairs for q^(m^2) in the requested sector,
    relative to the sector's base exponent (0 or 1/4)."""
    if sector == INTEGER:
        ms = []
        m = 0
        while m * m <= depth:
            ms.append(m)
            m += 1
        return [(m * m, m) for m in ms]
    if sector == HALF:
        # m = j + 1/2, m^2 = 1/4 + j^2 + j
        ms = []
        j = 0
        while j * j + j <= depth:
            ms.append(j)
            j += 1
        return [(j * j + j, j) for j in ms]
    raise ValueError(f"unknown sector {sector!r}")


@lru_cache(maxsize=None)
def twisted_trace(angle: Fraction, sector: str, depth: int) -> QSeries:
    """Graded trace of a rotation by ``angle``*pi on one charge sector of the
    half-lattice module, as a complex-float series on the integer grid.

    ``sector`` selects integer or half-integer lattice charge; ``angle`` is
    taken mod 2 on the integer sector and mod 4 on the half sector.  The
    result has offset -1/24 (integer) or 1/4 - 1/24 (half).
    """
    angle = Fraction(angle)
    theta = float(angle) * math.pi
    acc = np.zeros(depth + 1, dtype=complex)
    if sector == INTEGER:
        for step, m in _theta_exponents(INTEGER, depth):
            acc[step] += 1.0 if m == 0 else 2.0 * math.cos(m * theta)
        base = Fraction(0)
    else:
        for step, j in _theta_exponents(HALF, depth):
            acc[step] += 2.0 * math.cos((j + 0.5) * theta)
        base = HALF_OFFSET
    fock = np.asarray(fock_char(depth, FLOAT).coeffs, dtype=complex)
    coeffs = np.convolve(acc, fock)[: depth + 1]
    return QSeries(base + C_SHIFT, 1, tuple(coeffs), FLOAT)


def round_to_exact(series: QSeries, tol: float = _TOL_DEFAULT) -> QSeries:
    """Round a float series to integer coefficients, failing hard if any
    residual exceeds ``tol`` (a wrong table or angle, not float noise)."""
    out = []
    worst = 0.0
    for c in series.coeffs:
        c = complex(c)
        n = round(c.real)
        worst = max(worst, abs(c.imag), abs(c.real - n))
        out.append(Fraction(n))
    if worst > tol:
        raise ValueError(
            f"rounding residual {worst:.3e} exceeds tolerance {tol:.1e}"
        )
    return QSeries(series.offset, series.denom, tuple(out), EXACT).trimmed()


def _class_weights(group: GroupData, irrep_label: str):
    chi = group.irrep(irrep_label)
    return [
        (c.angle, c.size * chi.row[i].conjugate() / group.order)
        for i, c in enumerate(group.classes)
    ]


@lru_cache(maxsize=None)
def isotypic_character(cover_name: str, irrep_label: str, depth: int = 50,
                       tol: float = _TOL_DEFAULT) -> QSeries:
    """Exact multiplicity character of one cover irrep inside the
    half-lattice module (both charge sectors).

    Non-faithful irreps pick out a piece of the integer sector, faithful
    ones a piece of the half sector; the other sector cancels between the
    two lifts of each rotation.  Coefficients are rounded to integers and
    returned exact.
    """
    cover = group_data(cover_name)
    if cover.covers is None:
        raise ValueError(f"{cover_name} is not a binary cover")
    pieces = []
    for sector in (INTEGER, HALF):
        acc = None
        for angle, w in _class_weights(cover, irrep_label):
            if w == 0:
                continue
            term = twisted_trace(angle, sector, depth).scaled(w)
            acc = term if acc is None else acc + term
        pieces.append(round_to_exact(acc, tol))
    nonzero = [p for p in pieces if not p.is_zero()]
    if len(nonzero) == 1:
        return nonzero[0]
    if not nonzero:
        return pieces[0]
    # cannot happen for an irreducible character (the center acts by a sign),
    # but keep the sum correct if it ever does
    return pieces[0].rescaled(4) + pieces[1].rescaled(4)


@lru_cache(maxsize=None)
def base_isotypic_character(group_name: str, irrep_label: str, depth: int = 50,
                            tol: float = _TOL_DEFAULT) -> QSeries:
    """Multiplicity character of a base-group irrep inside the charge-2
    lattice algebra (integer sector only).  Independent cross-check route:
    it uses the SO(3) table of the base group rather than the cover table.
    """
    group = group_data(group_name)
    acc = None
    for angle, w in _class_weights(group, irrep_label):
        if w == 0:
            continue
        term = twisted_trace(angle, INTEGER, depth).scaled(w)
        acc = term if acc is None else acc + term
    return round_to_exact(acc, tol)


def fixed_point_character(group_name: str, depth: int = 50) -> QSeries:
    """Character of the fixed-point subalgebra inside the charge-2 lattice
    algebra: the trivial-isotypic piece of the base group action."""
    return base_isotypic_character(group_name, "1a", depth)


# ----------------------------------------------------------------------
# structural checks

def regular_decomposition_check(cover_name: str, depth: int = 50):
    """sum_chi dim(chi) * ch V_chi must reproduce the full half-lattice
    character, exactly, after rounding.  Returns (ok, first_bad, detail)."""
    cover = group_data(cover_name)
    total = None
    for r in cover.irreps:
        piece = isotypic_character(cover_name, r.label, depth).scaled(r.dim)
        total = piece if total is None else total.rescaled(4) + piece.rescaled(4)
    target = (char_vl2(depth) + char_vl2_half(depth).rescaled(4))
    ok, bad = total.agrees_with(target)
    detail = (
        f"{cover_name}: regular decomposition "
        + ("holds" if ok else f"fails at exponent {bad}")
        + f" through exponent {min(total.end_exponent, target.end_exponent)}"
    )
    return ok, bad, detail


def isotypic_nonnegative_integral(cover_name: str, depth: int = 50):
    """All isotypic pieces have nonnegative integer coefficients, the
    trivial piece has constant term 1, every other piece constant term 0."""
    cover = group_data(cover_name)
    problems = []
    for r in cover.irreps:
        piece = isotypic_character(cover_name, r.label, depth)
        for e, c in piece.items():
            if c < 0 or c.denominator != 1:
                problems.append(f"{r.label}: coefficient {c} at {e}")
                break
        lead = piece.coefficient(C_SHIFT) if piece.offset <= C_SHIFT else 0
        want = 1 if r.label == "1a" else 0
        if lead != want:
            problems.append(f"{r.label}: vacuum coefficient {lead} != {want}")
    return (not problems), problems
