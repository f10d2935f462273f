"""South-west regions of the (A, j) plane and exact piecewise-linear functions.

A *south-west region* is closed under decreasing either coordinate.  We work
with the finite-presentation fragment: unions of finite intersections of
half-planes {alpha*A + beta*j <= c} with alpha, beta >= 0 not both zero
(disjunctive normal form).  Half-planes are normalized so alpha + beta = 1,
which makes the diagonal translate C_t = C + t*(1,1) act by c -> c + t and
gives the *entering time* of a point p (least t with p in C_t) the closed
form alpha*A(p) + beta*j(p) - c.  Entering time of a union is the min over
atoms, of an intersection the max over half-planes.

`PLFunction` is an exact continuous piecewise-linear function on a rational
interval, stored by its breakpoints; invariant curves (upsilon as a function
of t) live here.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction

from .exact import Rational


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise ValueError(f"expected an exact rational, got {x!r}")


@dataclass(frozen=True, order=True)
class HalfPlane:
    """{(A, j) : alpha*A + beta*j <= c}, normalized to alpha + beta = 1."""

    alpha: Fraction
    beta: Fraction
    c: Fraction

    def entering_time(self, p: tuple[Rational, Rational]) -> Fraction:
        return self.alpha * _rat(p[0]) + self.beta * _rat(p[1]) - self.c


def make_halfplane(alpha, beta, c) -> "SouthWestRegion":
    """The single-half-plane region {alpha*A + beta*j <= c}.

    Requires alpha, beta >= 0 and alpha + beta > 0 (otherwise the set is not
    a south-west region).
    """
    alpha, beta, c = _rat(alpha), _rat(beta), _rat(c)
    if alpha < 0 or beta < 0:
        raise ValueError(f"half-plane coefficients must be non-negative: {alpha}, {beta}")
    total = alpha + beta
    if total == 0:
        raise ValueError("half-plane coefficients must not both be zero")
    hp = HalfPlane(alpha / total, beta / total, c / total)
    return SouthWestRegion(((hp,),))


@dataclass(frozen=True)
class SouthWestRegion:
    """A union of intersections of normalized half-planes (DNF atoms)."""

    atoms: tuple[tuple[HalfPlane, ...], ...]

    def __post_init__(self):
        atoms = tuple(sorted({tuple(sorted(set(atom))) for atom in self.atoms}))
        if not atoms or any(not atom for atom in atoms):
            raise ValueError("region needs at least one half-plane per atom")
        object.__setattr__(self, "atoms", atoms)


def union(r1: SouthWestRegion, r2: SouthWestRegion) -> SouthWestRegion:
    return SouthWestRegion(r1.atoms + r2.atoms)


def intersect(r1: SouthWestRegion, r2: SouthWestRegion) -> SouthWestRegion:
    return SouthWestRegion(tuple(a1 + a2 for a1 in r1.atoms for a2 in r2.atoms))


def translate(r: SouthWestRegion, t) -> SouthWestRegion:
    """The diagonal translate C_t = C + t*(1, 1)."""
    t = _rat(t)
    return SouthWestRegion(
        tuple(
            tuple(HalfPlane(hp.alpha, hp.beta, hp.c + t) for hp in atom)
            for atom in r.atoms
        )
    )


def entering_time(r: SouthWestRegion, p: tuple[Rational, Rational]) -> Fraction:
    """Least t such that p lies in C_t (finite for every p: min of maxes)."""
    return min(max(hp.entering_time(p) for hp in atom) for atom in r.atoms)


def contains(r: SouthWestRegion, p: tuple[Rational, Rational], t) -> bool:
    """Is p in the translate C_t?  Equivalent to entering_time(r, p) <= t."""
    return entering_time(r, p) <= _rat(t)


def truncate(r: SouthWestRegion, x) -> SouthWestRegion:
    """Cut the region at Alexander coordinate x: r intersected with {A <= x}."""
    return intersect(r, make_halfplane(1, 0, x))


def upsilon_halfplane(t) -> SouthWestRegion:
    """The half-plane {(t/2)A + (1 - t/2)j <= 0} underlying the knot-level
    upsilon function at parameter t in [0, 2]."""
    t = _rat(t)
    if not 0 <= t <= 2:
        raise ValueError(f"upsilon parameter must be in [0, 2], got {t}")
    return make_halfplane(t / 2, 1 - t / 2, 0)


def v_region(s) -> SouthWestRegion:
    """{A <= s} ∩ {j <= 0}: the hook region whose upsilon gives V(s)."""
    return intersect(make_halfplane(1, 0, s), make_halfplane(0, 1, 0))


# ---------------------------------------------------------------------------
# Exact piecewise-linear functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PLFunction:
    """Continuous piecewise-linear function given by breakpoints (t, value).

    Canonical form: t strictly increasing, no interior breakpoint where the
    slope does not change.  Equality of canonical forms is equality of
    functions.
    """

    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        pts = [(_rat(t), _rat(v)) for t, v in self.points]
        if len(pts) < 2:
            raise ValueError("a PL function needs at least two breakpoints")
        for (t1, _), (t2, _) in zip(pts, pts[1:]):
            if t1 >= t2:
                raise ValueError("breakpoint abscissae must be strictly increasing")
        canon = [pts[0]]
        for i in range(1, len(pts) - 1):
            (t0, v0), (t1, v1), (t2, v2) = canon[-1], pts[i], pts[i + 1]
            if (v1 - v0) * (t2 - t1) != (v2 - v1) * (t1 - t0):
                canon.append(pts[i])
        canon.append(pts[-1])
        object.__setattr__(self, "points", tuple(canon))

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return (self.points[0][0], self.points[-1][0])

    def __call__(self, t) -> Fraction:
        return pl_eval(self, t)


def pl_eval(f: PLFunction, t) -> Fraction:
    t = _rat(t)
    lo, hi = f.domain
    if not lo <= t <= hi:
        raise ValueError(f"argument {t} outside the domain [{lo}, {hi}]")
    ts = [p[0] for p in f.points]
    i = bisect.bisect_right(ts, t) - 1
    if i == len(ts) - 1:
        return f.points[-1][1]
    (t0, v0), (t1, v1) = f.points[i], f.points[i + 1]
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0)


def pl_add(f: PLFunction, g: PLFunction) -> PLFunction:
    if f.domain != g.domain:
        raise ValueError("cannot add PL functions on different domains")
    ts = sorted({p[0] for p in f.points} | {p[0] for p in g.points})
    return PLFunction(tuple((t, pl_eval(f, t) + pl_eval(g, t)) for t in ts))


def pl_negate_scale(f: PLFunction, c) -> PLFunction:
    """The function c * f (use c = -1 for negation)."""
    c = _rat(c)
    if c == 0:
        return PLFunction(((f.points[0][0], Fraction(0)), (f.points[-1][0], Fraction(0))))
    return PLFunction(tuple((t, c * v) for t, v in f.points))


def pl_singular_points(f: PLFunction) -> list[tuple[Fraction, Fraction]]:
    """Interior breakpoints with their derivative jumps (right minus left slope).

    Canonical form guarantees every listed jump is nonzero.
    """
    out = []
    for (t0, v0), (t1, v1), (t2, v2) in zip(f.points, f.points[1:], f.points[2:]):
        jump = (v2 - v1) / (t2 - t1) - (v1 - v0) / (t1 - t0)
        out.append((t1, jump))
    return out


def pl_constant(value, domain=(Fraction(0), Fraction(2))) -> PLFunction:
    return PLFunction(((_rat(domain[0]), _rat(value)), (_rat(domain[1]), _rat(value))))


# ---------------------------------------------------------------------------
# Region DSL:  H(t) | Q(s) | hp(a,b,c) | trunc(R, x) | R & R | R | R | (R)
# ---------------------------------------------------------------------------


class RegionParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _RegionParser:
    """Hand-rolled LL(1) recursive descent; & binds tighter than |."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> SouthWestRegion:
        region = self.union_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise RegionParseError(f"unexpected trailing input {self.text[self.pos:]!r}", self.pos)
        return region

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise RegionParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def union_expr(self) -> SouthWestRegion:
        region = self.intersect_expr()
        while self.peek() == "|":
            self.pos += 1
            region = union(region, self.intersect_expr())
        return region

    def intersect_expr(self) -> SouthWestRegion:
        region = self.atom()
        while self.peek() == "&":
            self.pos += 1
            region = intersect(region, self.atom())
        return region

    def atom(self) -> SouthWestRegion:
        self.skip_ws()
        if self.peek() == "(":
            self.pos += 1
            region = self.union_expr()
            self.expect(")")
            return region
        start = self.pos
        name = ""
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            name += self.text[self.pos]
            self.pos += 1
        if not name:
            raise RegionParseError("expected a region term", self.pos)
        try:
            if name == "H":
                self.expect("(")
                t = self.rational()
                self.expect(")")
                return upsilon_halfplane(t)
            if name == "Q":
                self.expect("(")
                s = self.rational()
                self.expect(")")
                return v_region(s)
            if name == "hp":
                self.expect("(")
                a = self.rational()
                self.expect(",")
                b = self.rational()
                self.expect(",")
                c = self.rational()
                self.expect(")")
                return make_halfplane(a, b, c)
            if name == "trunc":
                self.expect("(")
                region = self.union_expr()
                self.expect(",")
                x = self.rational()
                self.expect(")")
                return truncate(region, x)
        except ValueError as exc:
            if isinstance(exc, RegionParseError):
                raise
            raise RegionParseError(str(exc), start) from None
        raise RegionParseError(f"unknown region term {name!r}", start)

    def rational(self) -> Fraction:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
        token = self.text[start:self.pos]
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise RegionParseError(f"malformed rational {token!r}", start) from None


def parse_region(text: str) -> SouthWestRegion:
    """Parse the region DSL; raises RegionParseError with a position on failure."""
    return _RegionParser(text).parse()
