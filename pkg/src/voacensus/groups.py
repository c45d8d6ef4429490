"""Conjugacy-class and character data for the rotation groups of the build.

Thirteen groups are stored: the cyclic, Klein and dihedral subgroups of
SO(3) that fix the lattice frames (Z3, Z5, K4, S3 = D3, D4, D5), the three
polyhedral groups (A4, S4, A5), and their binary covers inside SU(2)
(cover_A4, cover_S4, cover_A5).

Every class carries its rotation angle as a rational multiple of pi: in
[0, 2) for SO(3) groups and [0, 4) for the covers, where the two lifts of
a rotation differ by a full turn (angle + 2pi) and the extra turn acts by
-1 on half-integer spins.  The tables are embedded literals; they are not
computed from group multiplication but are certified by the invariants in
``validate``: class sizes sum to the order, irrep dimension squares sum to
the order, row and column orthogonality hold to 1e-9, and cover classes
double-cover the base classes angle by angle.

cover_S4 is the SU(2) preimage of the octahedral rotation group (the
binary octahedral group).  The symmetric group on four letters has a
second, non-isomorphic double cover with the same irrep dimension multiset
{1,1,2,2,2,3,3,4}; every check in this package is insensitive to the
choice, and the stored table is the SU(2) one because the angle data is
what the trace engine consumes.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

F = Fraction

# recurring irrationalities of the tables
SQ2 = math.sqrt(2.0)
PHI = (1.0 + math.sqrt(5.0)) / 2.0  # 2*cos(pi/5)
PSI = 1.0 - PHI  # its algebraic conjugate (1 - sqrt(5))/2
W3 = cmath.exp(2j * cmath.pi / 3)
W3B = W3.conjugate()


@dataclass(frozen=True)
class ConjugacyClass:
    label: str
    size: int
    angle: Fraction  # rotation angle as a multiple of pi


@dataclass(frozen=True)
class Irrep:
    label: str
    dim: int
    row: tuple  # character values aligned with the class list


@dataclass(frozen=True)
class GroupData:
    name: str
    order: int
    classes: tuple
    irreps: tuple
    covers: str | None = None  # base group for the binary covers
    note: str = ""

    def class_sizes(self):
        return [c.size for c in self.classes]

    def irrep(self, label: str) -> Irrep:
        for r in self.irreps:
            if r.label == label:
                return r
        raise KeyError(f"{self.name} has no irrep {label!r}")

    def irrep_dims(self):
        return sorted(r.dim for r in self.irreps)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "covers": self.covers,
            "classes": [
                {
                    "label": c.label,
                    "size": c.size,
                    "angle_over_pi": [c.angle.numerator, c.angle.denominator],
                }
                for c in self.classes
            ],
            "irreps": [
                {
                    "label": r.label,
                    "dim": r.dim,
                    "characters": [[z.real, z.imag] for z in map(complex, r.row)],
                }
                for r in self.irreps
            ],
        }


# ----------------------------------------------------------------------
# table construction helpers (literal rows, light assembly only)

def _grp(name, classes, irreps, covers=None, note=""):
    order = sum(s for _, s, _ in classes)
    return GroupData(
        name=name,
        order=order,
        classes=tuple(ConjugacyClass(l, s, F(a)) for l, s, a in classes),
        irreps=tuple(
            Irrep(l, int(round(abs(complex(row[0])))), tuple(complex(x) for x in row))
            for l, row in irreps
        ),
        covers=covers,
        note=note,
    )


def _cyclic(name, n):
    w = cmath.exp(2j * cmath.pi / n)
    classes = [(f"g{j}" if j else "e", 1, F(2 * j, n)) for j in range(n)]
    irreps = [(f"1{chr(ord('a') + r)}", [w ** (r * j) for j in range(n)]) for r in range(n)]
    return _grp(name, classes, irreps)


def _build_all() -> dict:
    groups = {}

    groups["Z3"] = _cyclic("Z3", 3)
    groups["Z5"] = _cyclic("Z5", 5)

    # Klein four group: three half-turns about orthogonal axes
    groups["K4"] = _grp(
        "K4",
        [("e", 1, 0), ("t1", 1, 1), ("t2", 1, 1), ("t3", 1, 1)],
        [
            ("1a", [1, 1, 1, 1]),
            ("1b", [1, 1, -1, -1]),
            ("1c", [1, -1, 1, -1]),
            ("1d", [1, -1, -1, 1]),
        ],
    )

    s3 = _grp(
        "S3",
        [("e", 1, 0), ("r", 2, F(2, 3)), ("s", 3, 1)],
        [("1a", [1, 1, 1]), ("1b", [1, 1, -1]), ("2a", [2, -1, 0])],
    )
    groups["S3"] = s3
    groups["D3"] = _grp(
        "D3",
        [("e", 1, 0), ("r", 2, F(2, 3)), ("s", 3, 1)],
        [("1a", [1, 1, 1]), ("1b", [1, 1, -1]), ("2a", [2, -1, 0])],
        note="same table as S3; kept under its dihedral name",
    )

    groups["D4"] = _grp(
        "D4",
        [("e", 1, 0), ("r2", 1, 1), ("r", 2, F(1, 2)), ("s", 2, 1), ("sr", 2, 1)],
        [
            ("1a", [1, 1, 1, 1, 1]),
            ("1b", [1, 1, 1, -1, -1]),
            ("1c", [1, 1, -1, 1, -1]),
            ("1d", [1, 1, -1, -1, 1]),
            ("2a", [2, -2, 0, 0, 0]),
        ],
    )

    groups["D5"] = _grp(
        "D5",
        [("e", 1, 0), ("r", 2, F(2, 5)), ("r2", 2, F(4, 5)), ("s", 5, 1)],
        [
            ("1a", [1, 1, 1, 1]),
            ("1b", [1, 1, 1, -1]),
            ("2a", [2, PHI - 1, -PHI, 0]),
            ("2b", [2, -PHI, PHI - 1, 0]),
        ],
    )

    groups["A4"] = _grp(
        "A4",
        [("e", 1, 0), ("t", 3, 1), ("c3a", 4, F(2, 3)), ("c3b", 4, F(4, 3))],
        [
            ("1a", [1, 1, 1, 1]),
            ("1b", [1, 1, W3, W3B]),
            ("1c", [1, 1, W3B, W3]),
            ("3a", [3, -1, 0, 0]),
        ],
    )

    groups["S4"] = _grp(
        "S4",
        [
            ("e", 1, 0),
            ("t2", 6, 1),       # transpositions: half turns through edge midpoints
            ("t22", 3, 1),      # double transpositions: half turns through face axes
            ("c3", 8, F(2, 3)),
            ("c4", 6, F(1, 2)),
        ],
        [
            ("1a", [1, 1, 1, 1, 1]),
            ("1b", [1, -1, 1, 1, -1]),
            ("2a", [2, 0, 2, -1, 0]),
            ("3a", [3, 1, -1, 0, -1]),
            ("3b", [3, -1, -1, 0, 1]),  # the rotation representation
        ],
    )

    groups["A5"] = _grp(
        "A5",
        [
            ("e", 1, 0),
            ("t22", 15, 1),
            ("c3", 20, F(2, 3)),
            ("c5a", 12, F(2, 5)),
            ("c5b", 12, F(4, 5)),
        ],
        [
            ("1a", [1, 1, 1, 1, 1]),
            ("3a", [3, -1, 0, PHI, PSI]),  # the rotation representation
            ("3b", [3, -1, 0, PSI, PHI]),
            ("4a", [4, 0, 1, -1, -1]),
            ("5a", [5, 1, -1, 0, 0]),
        ],
    )

    # binary tetrahedral group (SU(2) preimage of A4)
    groups["cover_A4"] = _grp(
        "cover_A4",
        [
            ("e", 1, 0),
            ("z", 1, 2),
            ("s4", 6, 1),
            ("c6a", 4, F(2, 3)),
            ("c3b", 4, F(4, 3)),
            ("c3a", 4, F(8, 3)),
            ("c6b", 4, F(10, 3)),
        ],
        [
            ("1a", [1, 1, 1, 1, 1, 1, 1]),
            ("1b", [1, 1, 1, W3, W3B, W3, W3B]),
            ("1c", [1, 1, 1, W3B, W3, W3B, W3]),
            ("2a", [2, -2, 0, 1, -1, -1, 1]),  # fundamental spin character 2cos(angle/2)
            ("2b", [2, -2, 0, W3, -W3B, -W3, W3B]),
            ("2c", [2, -2, 0, W3B, -W3, -W3B, W3]),
            ("3a", [3, 3, -1, 0, 0, 0, 0]),
        ],
        covers="A4",
    )

    # binary octahedral group (SU(2) preimage of S4)
    groups["cover_S4"] = _grp(
        "cover_S4",
        [
            ("e", 1, 0),
            ("z", 1, 2),
            ("s4", 6, 1),       # lifts of the double transpositions
            ("t2", 12, 1),      # lifts of the transpositions (single class)
            ("c8a", 6, F(1, 2)),
            ("c8b", 6, F(5, 2)),
            ("c6", 8, F(2, 3)),
            ("c3", 8, F(8, 3)),
        ],
        [
            ("1a", [1, 1, 1, 1, 1, 1, 1, 1]),
            ("1b", [1, 1, 1, -1, -1, -1, 1, 1]),
            ("2a", [2, 2, 2, 0, 0, 0, -1, -1]),
            ("2b", [2, -2, 0, 0, SQ2, -SQ2, 1, -1]),   # spin 1/2
            ("2c", [2, -2, 0, 0, -SQ2, SQ2, 1, -1]),   # spin 1/2 twisted by 1b
            ("3a", [3, 3, -1, 1, -1, -1, 0, 0]),
            ("3b", [3, 3, -1, -1, 1, 1, 0, 0]),        # the rotation representation
            ("4a", [4, -4, 0, 0, 0, 0, -1, 1]),        # spin 3/2
        ],
        covers="S4",
        note=(
            "SU(2) preimage (binary octahedral); the other double cover of the "
            "symmetric group shares the irrep dimension multiset"
        ),
    )

    # binary icosahedral group (SU(2) preimage of A5)
    groups["cover_A5"] = _grp(
        "cover_A5",
        [
            ("e", 1, 0),
            ("z", 1, 2),
            ("s4", 30, 1),
            ("c6", 20, F(2, 3)),
            ("c3", 20, F(8, 3)),
            ("c10a", 12, F(2, 5)),
            ("c5a", 12, F(12, 5)),
            ("c5b", 12, F(4, 5)),
            ("c10b", 12, F(14, 5)),
        ],
        [
            ("1a", [1, 1, 1, 1, 1, 1, 1, 1, 1]),
            ("2a", [2, -2, 0, 1, -1, PHI, -PHI, PHI - 1, 1 - PHI]),  # spin 1/2
            ("2b", [2, -2, 0, 1, -1, 1 - PHI, PHI - 1, -PHI, PHI]),
            ("3a", [3, 3, -1, 0, 0, PHI, PHI, PSI, PSI]),  # the rotation representation
            ("3b", [3, 3, -1, 0, 0, PSI, PSI, PHI, PHI]),
            ("4a", [4, 4, 0, 1, 1, -1, -1, -1, -1]),
            ("4b", [4, -4, 0, -1, 1, 1, -1, -1, 1]),      # spin 3/2
            ("5a", [5, 5, 1, -1, -1, 0, 0, 0, 0]),
            ("6a", [6, -6, 0, 0, 0, -1, 1, 1, -1]),       # spin 5/2
        ],
        covers="A5",
    )

    return groups


_GROUPS = _build_all()

GROUP_NAMES = tuple(sorted(_GROUPS))


@lru_cache(maxsize=None)
def group_data(name: str) -> GroupData:
    """Return the stored (and validated) table for one of the 13 groups."""
    if name not in _GROUPS:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(GROUP_NAMES)}")
    g = _GROUPS[name]
    validate(g)
    return g


# ----------------------------------------------------------------------
# self-certification

def validate(g: GroupData, tol: float = 1e-9):
    """Raise ValueError unless the table passes all structural invariants."""
    sizes = g.class_sizes()
    if sum(sizes) != g.order:
        raise ValueError(f"{g.name}: class sizes sum to {sum(sizes)} != {g.order}")
    if sum(r.dim * r.dim for r in g.irreps) != g.order:
        raise ValueError(f"{g.name}: sum of squared irrep dims misses the order")
    if len(g.irreps) != len(g.classes):
        raise ValueError(f"{g.name}: {len(g.irreps)} irreps vs {len(g.classes)} classes")
    if g.classes[0].size != 1 or g.classes[0].angle != 0:
        raise ValueError(f"{g.name}: first class must be the identity at angle 0")
    span = 4 if g.covers else 2
    for c in g.classes:
        if not (0 <= c.angle < span):
            raise ValueError(f"{g.name}: class {c.label} angle {c.angle} out of range")
    # row orthonormality under the class-weighted inner product
    for a in g.irreps:
        for b in g.irreps:
            ip = sum(
                s * x * y.conjugate() for s, x, y in zip(sizes, a.row, b.row)
            ) / g.order
            want = 1.0 if a is b else 0.0
            if abs(ip - want) > tol:
                raise ValueError(
                    f"{g.name}: <{a.label},{b.label}> = {ip} != {want}"
                )
    # column orthogonality: sum_chi chi(c) conj(chi(c')) = |G|/|c| * delta
    for i, ci in enumerate(g.classes):
        for j, cj in enumerate(g.classes):
            ip = sum(r.row[i] * r.row[j].conjugate() for r in g.irreps)
            want = g.order / ci.size if i == j else 0.0
            if abs(ip - want) > tol:
                raise ValueError(
                    f"{g.name}: column product ({ci.label},{cj.label}) = {ip} != {want}"
                )
    if g.covers:
        _validate_cover(g, _GROUPS[g.covers])


def _validate_cover(cover: GroupData, base: GroupData):
    """Angle-doubling bookkeeping: reducing cover angles mod 2pi maps the
    cover classes onto the base classes with total fiber size 2|c|."""
    if cover.order != 2 * base.order:
        raise ValueError(f"{cover.name}: order is not twice {base.name}")

    def by_angle(classes, reduce_mod2):
        acc = {}
        for c in classes:
            a = c.angle % 2 if reduce_mod2 else c.angle
            acc[a] = acc.get(a, 0) + c.size
        return acc

    down = by_angle(cover.classes, True)
    up = by_angle(base.classes, False)
    if set(down) != set(up):
        raise ValueError(f"{cover.name}: reduced angle set differs from {base.name}")
    for a, s in up.items():
        if down[a] != 2 * s:
            raise ValueError(
                f"{cover.name}: fiber over angle {a}*pi has size {down[a]} != {2 * s}"
            )


# ----------------------------------------------------------------------
# subgroup facts used by the census bookkeeping

@dataclass(frozen=True)
class SubgroupFact:
    """Centralizer/normalizer of a small subgroup inside the icosahedral group."""

    subgroup: str
    centralizer: str
    normalizer: str

    @property
    def conjugates(self) -> int:
        """Number of conjugate copies, [A5 : normalizer]."""
        return group_data("A5").order // group_data(self.normalizer).order


def normalizer_centralizer_facts() -> tuple[SubgroupFact, ...]:
    """The six facts consumed by the census and index-rule logic: inside the
    icosahedral group, the Klein four group, the 3-cycle subgroup and the
    5-cycle subgroup are self-centralizing, with normalizers A4, S3, D5."""
    return (
        SubgroupFact("K4", "K4", "A4"),
        SubgroupFact("Z3", "Z3", "S3"),
        SubgroupFact("Z5", "Z5", "D5"),
    )


def export_json(name: str) -> str:
    return json.dumps(group_data(name).to_json(), indent=2, sort_keys=True)
