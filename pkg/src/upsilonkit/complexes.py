"""Bifiltered chain complexes over F2[U, U^-1] of the kind knots produce.

A complex is presented combinatorially: finitely many base generators, each
carrying an integer bifiltration position (A, j) and an integer homological
(Maslov) grading M, together with differential arrows x -> U^m y.  The U
action shifts (A, j) by (-1, -1) and M by -2, so the full module is the free
F2[U, U^-1]-module on the base generators and every homologically graded
piece is a finite F2 vector space (one lattice generator per base generator
of matching Maslov parity).

"Knot-type" means the total homology is a single U-tower: H_0 = F2 (and hence
H_d = F2 for all even d by U-periodicity) and H_1 = 0.  That is the shape the
invariants in this package evaluate on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from .exact import F2Matrix, F2Space


@dataclass(frozen=True, order=True)
class BaseGenerator:
    """A named generator at bifiltration (alexander, algebraic), grading maslov."""

    name: str
    alexander: int
    algebraic: int
    maslov: int

    @property
    def pos(self) -> tuple[int, int]:
        return (self.alexander, self.algebraic)


@dataclass(frozen=True, order=True)
class LatticeGenerator:
    """U^upower times a base generator: one F2 basis element of a graded piece."""

    base: BaseGenerator
    upower: int

    @property
    def alexander(self) -> int:
        return self.base.alexander - self.upower

    @property
    def algebraic(self) -> int:
        return self.base.algebraic - self.upower

    @property
    def maslov(self) -> int:
        return self.base.maslov - 2 * self.upower

    @property
    def pos(self) -> tuple[int, int]:
        return (self.alexander, self.algebraic)

    def __str__(self) -> str:
        if self.upower == 0:
            return self.base.name
        return f"U^{self.upower}·{self.base.name}"


@dataclass(frozen=True)
class Chain:
    """A formal F2 sum of lattice generators; + is symmetric difference."""

    gens: frozenset[LatticeGenerator]

    def __add__(self, other: "Chain") -> "Chain":
        return Chain(self.gens ^ other.gens)

    def __iter__(self):
        return iter(sorted(self.gens))

    def __len__(self) -> int:
        return len(self.gens)

    def __bool__(self) -> bool:
        return bool(self.gens)


@dataclass(frozen=True)
class KnotComplex:
    """A combinatorial presentation: base generators plus arrows x -> U^m y.

    Arrows are stored as (source name, target name, upower) with multiplicity
    reduced mod 2.  Construction enforces structural sanity (unique names,
    arrow endpoints exist); the homological conditions are checked by
    `validate_complex`, so that files describing broken complexes can still be
    loaded and reported on.
    """

    generators: tuple[BaseGenerator, ...]
    arrows: tuple[tuple[str, str, int], ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        known = set(names)
        seen: set[tuple[str, str, int]] = set()
        for arrow in self.arrows:
            src, dst, m = arrow
            if src not in known or dst not in known:
                raise ValueError(f"arrow endpoint not a generator: {arrow}")
            if not isinstance(m, int):
                raise ValueError(f"arrow U-power must be an integer: {arrow}")
            seen ^= {(src, dst, m)}  # F2 coefficients: equal arrows cancel
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "arrows", tuple(sorted(seen)))

    @property
    def by_name(self) -> dict[str, BaseGenerator]:
        return {g.name: g for g in self.generators}

    def arrows_from(self, name: str) -> list[tuple[str, int]]:
        return [(dst, m) for src, dst, m in self.arrows if src == name]


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.problems


def maslov_slice(k: KnotComplex, d: int) -> tuple[LatticeGenerator, ...]:
    """All lattice generators of Maslov grading d, in generator order.

    Each base generator of matching Maslov parity contributes exactly one:
    U^((M-d)/2) of it.  Slices repeat with period two up to a U shift.
    """
    out = []
    for g in k.generators:
        if (g.maslov - d) % 2 == 0:
            out.append(LatticeGenerator(g, (g.maslov - d) // 2))
    return tuple(out)


def boundary_matrix(k: KnotComplex, d: int) -> F2Matrix:
    """The differential from the grading-d slice to the grading-(d-1) slice.

    Rows are indexed by the (d-1)-slice, columns by the d-slice.  Requires
    every arrow to drop Maslov grading by exactly one (raise otherwise; run
    `validate_complex` first on untrusted input).
    """
    src_slice = maslov_slice(k, d)
    dst_slice = maslov_slice(k, d - 1)
    dst_index = {(lg.base.name, lg.upower): i for i, lg in enumerate(dst_slice)}
    arrows_by_src: dict[str, list[tuple[str, int]]] = {}
    for src, dst, m in k.arrows:
        arrows_by_src.setdefault(src, []).append((dst, m))
    rows = [0] * len(dst_slice)
    for j, lg in enumerate(src_slice):
        for dst, m in arrows_by_src.get(lg.base.name, ()):
            key = (dst, lg.upower + m)
            if key not in dst_index:
                raise ValueError(
                    f"arrow {lg.base.name} -> U^{m}·{dst} does not drop Maslov grading by 1"
                )
            rows[dst_index[key]] ^= 1 << j
    return F2Matrix(len(dst_slice), len(src_slice), rows)


def validate_complex(k: KnotComplex) -> ValidationReport:
    """Check the knot-type conditions and report every violation found.

    Checks, in order: arrow grading and filtration legality (an arrow
    x -> U^m y must have M(y) - 2m = M(x) - 1 and position of U^m y
    coordinatewise <= position of x); d^2 = 0 over the ring; homology a
    single U-tower (dim H_0 = 1 and dim H_1 = 0, which by U-periodicity of
    the slices pins every grading).
    """
    problems: list[str] = []
    by_name = k.by_name
    for src, dst, m in k.arrows:
        x, y = by_name[src], by_name[dst]
        if y.maslov - 2 * m != x.maslov - 1:
            problems.append(f"arrow {src} -> U^{m}·{dst} violates the Maslov convention")
        if y.alexander - m > x.alexander or y.algebraic - m > x.algebraic:
            problems.append(f"arrow {src} -> U^{m}·{dst} increases the filtration")

    # d^2 = 0, tracked per (final target, total U-power): exact over the ring.
    arrows_by_src: dict[str, list[tuple[str, int]]] = {}
    for src, dst, m in k.arrows:
        arrows_by_src.setdefault(src, []).append((dst, m))
    for g in k.generators:
        acc: set[tuple[str, int]] = set()
        for mid, m1 in arrows_by_src.get(g.name, ()):
            for dst, m2 in arrows_by_src.get(mid, ()):
                acc ^= {(dst, m1 + m2)}
        if acc:
            terms = ", ".join(f"U^{m}·{dst}" for dst, m in sorted(acc))
            problems.append(f"d^2({g.name}) = {terms} != 0")

    if problems:
        return ValidationReport(tuple(problems))

    n0 = len(maslov_slice(k, 0))
    n1 = len(maslov_slice(k, 1))
    r0 = boundary_matrix(k, 0).rank()
    r1 = boundary_matrix(k, 1).rank()
    # By periodicity the grading-2 differential is the grading-0 matrix, so
    # dim H_0 = n0 - r0 - r1 and dim H_1 = n1 - r1 - r0.
    h0 = n0 - r0 - r1
    h1 = n1 - r1 - r0
    if h0 != 1:
        problems.append(f"dim H_0 = {h0}, expected 1 (not a single U-tower)")
    if h1 != 0:
        problems.append(f"dim H_1 = {h1}, expected 0")
    return ValidationReport(tuple(problems))


def representative_cycle(k: KnotComplex) -> Chain:
    """A degree-0 cycle generating H_0 (any representative of the U-tower top).

    Found by taking a nullspace basis of the degree-0 differential and picking
    a member that is not a boundary; one exists whenever the complex is
    knot-type.
    """
    slice0 = maslov_slice(k, 0)
    d0 = boundary_matrix(k, 0)
    d1 = boundary_matrix(k, 1)
    boundaries = F2Space()
    for j in range(d1.ncols):
        boundaries.add(_column(d1, j))
    for z in d0.nullspace():
        if not boundaries.contains(z):
            return Chain(frozenset(slice0[i] for i in _bits(z)))
    raise ValueError("complex has no degree-0 homology generator (not knot-type)")


def _column(m: F2Matrix, j: int) -> int:
    col = 0
    for i, row in enumerate(m.rows):
        if (row >> j) & 1:
            col |= 1 << i
    return col


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def tensor(k1: KnotComplex, k2: KnotComplex) -> KnotComplex:
    """Tensor product over F2[U, U^-1]; models the connected sum.

    Generators are pairs (named "a*b"), positions and gradings add, and the
    differential obeys the Leibniz rule.
    """
    gens = []
    for g1 in k1.generators:
        for g2 in k2.generators:
            gens.append(
                BaseGenerator(
                    f"{g1.name}*{g2.name}",
                    g1.alexander + g2.alexander,
                    g1.algebraic + g2.algebraic,
                    g1.maslov + g2.maslov,
                )
            )
    arrows = []
    for g1 in k1.generators:
        for g2 in k2.generators:
            src = f"{g1.name}*{g2.name}"
            for dst, m in k1.arrows_from(g1.name):
                arrows.append((src, f"{dst}*{g2.name}", m))
            for dst, m in k2.arrows_from(g2.name):
                arrows.append((src, f"{g1.name}*{dst}", m))
    return KnotComplex(tuple(gens), tuple(arrows))


def mirror(k: KnotComplex) -> KnotComplex:
    """The dual complex (mirror knot): negate (A, j, M), reverse all arrows.

    Reversing an arrow keeps its U-power; the grading and filtration
    conventions are preserved by the sign flips.
    """
    gens = tuple(
        BaseGenerator(g.name, -g.alexander, -g.algebraic, -g.maslov) for g in k.generators
    )
    arrows = tuple((dst, src, m) for src, dst, m in k.arrows)
    return KnotComplex(gens, arrows)


def add_box(k: KnotComplex, corner: tuple[int, int], maslov: int) -> KnotComplex:
    """Direct-sum a four-generator acyclic square with north-east corner here.

    The square has generators a at the corner (grading `maslov`), b and c one
    step west/south (grading maslov-1), d at the south-west (maslov-2), with
    da = b + c and db = dc = d.  It is acyclic, so every invariant computed by
    this package is unchanged — the stable-equivalence move the tests exercise.
    """
    a_col, j_col = corner
    existing = {g.name for g in k.generators}
    n = 0
    while any(f"box{n}{s}" in existing for s in "abcd"):
        n += 1
    a = BaseGenerator(f"box{n}a", a_col, j_col, maslov)
    b = BaseGenerator(f"box{n}b", a_col - 1, j_col, maslov - 1)
    c = BaseGenerator(f"box{n}c", a_col, j_col - 1, maslov - 1)
    d = BaseGenerator(f"box{n}d", a_col - 1, j_col - 1, maslov - 2)
    arrows = k.arrows + (
        (a.name, b.name, 0),
        (a.name, c.name, 0),
        (b.name, d.name, 0),
        (c.name, d.name, 0),
    )
    return KnotComplex(k.generators + (a, b, c, d), arrows)


def to_json_dict(k: KnotComplex) -> dict:
    return {
        "generators": [
            {"id": g.name, "A": g.alexander, "j": g.algebraic, "M": g.maslov}
            for g in k.generators
        ],
        "arrows": [[src, dst, m] for src, dst, m in k.arrows],
    }


def from_json_dict(data: dict) -> KnotComplex:
    if not isinstance(data, dict) or "generators" not in data:
        raise ValueError("complex JSON must be an object with a 'generators' list")
    gens = []
    for entry in data["generators"]:
        try:
            gens.append(
                BaseGenerator(str(entry["id"]), int(entry["A"]), int(entry["j"]), int(entry["M"]))
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"bad generator entry {entry!r}: {exc}") from None
    arrows = []
    for entry in data.get("arrows", []):
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise ValueError(f"bad arrow entry {entry!r}: expected [src, dst, upower]")
        arrows.append((str(entry[0]), str(entry[1]), int(entry[2])))
    return KnotComplex(tuple(gens), tuple(arrows))


def save_complex(k: KnotComplex, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(to_json_dict(k), fh, indent=1)


def load_complex(path: str) -> KnotComplex:
    with open(path) as fh:
        return from_json_dict(json.load(fh))
