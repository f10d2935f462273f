"""Invariant engines over knot-type complexes.

The central quantity is the region invariant: for a south-west region C and a
knot-type complex, the least diagonal translation t such that some degree-0
cycle representing the generator of H_0 is supported on lattice generators
inside C_t.  Everything else is built from it:

* the knot-level upsilon function Upsilon(t) = -2 * (region invariant of the
  half-plane {(t/2)A + (1-t/2)j <= 0}), an exact piecewise-linear function;
* V(s) = -2 * (region invariant of {A <= s} & {j <= 0}), the surgery
  correction-term input, plus nu+ and the d-invariant formula;
* secondary invariants: at a breaking point (a kink of Upsilon with positive
  derivative jump) the perturbed regions C+ and C- each carry a distinguished
  set of "exceptional" generating cycles, and the secondary invariant is the
  least extra translation of a third region C needed to make an exceptional
  cycle of C+ homologous to one of C-; scaling by -2 relative to the kink
  value gives the Kim-Livingston invariant;
* eta: the least Alexander-direction truncation width at which the region
  invariant is already achieved.

All minimization happens over finite rational candidate sets (entering times
of lattice generators), with monotone feasibility tests solved by F2 linear
algebra, so every value is exact.  `brute_force_upsilon` and
`brute_force_secondary` recompute the same quantities by enumerating entire
cycle cosets; they share no solver code with the engines and serve as
independent oracles in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .complexes import (
    KnotComplex,
    LatticeGenerator,
    boundary_matrix,
    maslov_slice,
    representative_cycle,
)
from .exact import F2Matrix, F2Space, Rational
from .regions import (
    PLFunction,
    SouthWestRegion,
    entering_time,
    pl_singular_points,
    upsilon_halfplane,
    v_region,
)


class GuardExceeded(Exception):
    """A brute-force oracle refused to enumerate: dimension guard exceeded."""


class NoObstructionType:
    """Secondary invariants return this when the exceptional cycle sets
    already intersect (no extra translation is needed, hence no obstruction)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NoObstruction"


NO_OBSTRUCTION = NoObstructionType()

SecondaryValue = Fraction | NoObstructionType


@dataclass(frozen=True)
class BreakingPoint:
    """A kink of the knot-level upsilon function with positive derivative jump.

    i_minus/i_plus are filled for staircases: the least and greatest corner
    index realizing the envelope minimum at t.
    """

    t: Fraction
    jump: Fraction
    i_minus: int | None = None
    i_plus: int | None = None


# ---------------------------------------------------------------------------
# Engine data: the degree-0/1 slices and differential of a complex, cached
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Engine:
    slice0: tuple[LatticeGenerator, ...]
    slice1: tuple[LatticeGenerator, ...]
    d1_rows: tuple[int, ...]  # rows over slice0, columns over slice1
    d1_cols: tuple[int, ...]  # the same matrix by columns (slice0 masks)
    z_ref: int  # a reference generating cycle, as a slice0 mask
    pos0: tuple[tuple[int, int], ...]
    pos1: tuple[tuple[int, int], ...]


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@lru_cache(maxsize=None)
def _engine(k: KnotComplex) -> _Engine:
    slice0 = maslov_slice(k, 0)
    slice1 = maslov_slice(k, 1)
    d1 = boundary_matrix(k, 1)
    index0 = {lg: i for i, lg in enumerate(slice0)}
    z_ref = 0
    for lg in representative_cycle(k):
        z_ref |= 1 << index0[lg]
    cols = []
    for j in range(d1.ncols):
        col = 0
        for i, row in enumerate(d1.rows):
            if (row >> j) & 1:
                col |= 1 << i
        cols.append(col)
    return _Engine(
        slice0=slice0,
        slice1=slice1,
        d1_rows=tuple(d1.rows),
        d1_cols=tuple(cols),
        z_ref=z_ref,
        pos0=tuple(lg.pos for lg in slice0),
        pos1=tuple(lg.pos for lg in slice1),
    )


def _surjective(eng: _Engine, inside_mask: int) -> bool:
    """Is some cycle of the coset z_ref + im(d1) supported inside the mask?

    Equivalent to solvability of (d1 x) = z_ref on the rows outside the mask.
    """
    rows = []
    b = 0
    for i in range(len(eng.slice0)):
        if not (inside_mask >> i) & 1:
            if (eng.z_ref >> i) & 1:
                b |= 1 << len(rows)
            rows.append(eng.d1_rows[i])
    return F2Matrix(len(rows), len(eng.slice1), rows).solve(b) is not None


def _inside_mask(times: list[Fraction], t: Fraction) -> int:
    mask = 0
    for i, time in enumerate(times):
        if time <= t:
            mask |= 1 << i
    return mask


def _d1_apply(eng: _Engine, x: int) -> int:
    out = 0
    for j in _bits(x):
        out ^= eng.d1_cols[j]
    return out


def h0_surjective(k: KnotComplex, r: SouthWestRegion, t) -> bool:
    """True iff a degree-0 generating cycle lives inside the translate C_t."""
    eng = _engine(k)
    times = [entering_time(r, p) for p in eng.pos0]
    return _surjective(eng, _inside_mask(times, Fraction(t)))


@lru_cache(maxsize=None)
def upsilon_region(k: KnotComplex, r: SouthWestRegion) -> Fraction:
    """The least t at which C_t supports a generating cycle.

    The minimum over cycles of the max entering time of their support is
    attained in the finite set of slice-0 entering times; feasibility is
    monotone in t, so binary search over the sorted candidates suffices.
    """
    eng = _engine(k)
    times = [entering_time(r, p) for p in eng.pos0]
    cands = sorted(set(times))
    if not cands or not _surjective(eng, _inside_mask(times, cands[-1])):
        raise ValueError("no generating cycle at the full translate; complex not knot-type?")
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _surjective(eng, _inside_mask(times, cands[mid])):
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]


def upsilon_at(k: KnotComplex, t) -> Fraction:
    """The knot-level upsilon value at one parameter: -2 * region invariant."""
    return -2 * upsilon_region(k, upsilon_halfplane(t))


@lru_cache(maxsize=None)
def _candidate_ts(k: KnotComplex) -> tuple[Fraction, ...]:
    """Candidate kink locations of t -> upsilon: every t in (0,2) where two
    generator lines (t/2)A + (1-t/2)j cross, plus the endpoints."""
    eng = _engine(k)
    lines = {(a - j, j) for a, j in eng.pos0}  # L(t) = j + (t/2)(A - j)
    cands = {Fraction(0), Fraction(2)}
    for (d1, j1), (d2, j2) in combinations(lines, 2):
        if d1 != d2:
            t = Fraction(2 * (j2 - j1), d1 - d2)
            if 0 < t < 2:
                cands.add(t)
    return tuple(sorted(cands))


@lru_cache(maxsize=None)
def upsilon_function(k: KnotComplex) -> PLFunction:
    """The exact knot-level upsilon function on [0, 2].

    Between consecutive candidate kinks no two generator lines cross, so the
    engine value is linear there; this is re-verified at every segment
    midpoint before the curve is assembled.
    """
    ts = _candidate_ts(k)
    vals = [upsilon_region(k, upsilon_halfplane(t)) for t in ts]
    for (t0, v0), (t1, v1) in zip(zip(ts, vals), zip(ts[1:], vals[1:])):
        vm = upsilon_region(k, upsilon_halfplane((t0 + t1) / 2))
        if 2 * vm != v0 + v1:
            raise AssertionError(
                f"upsilon not linear on [{t0}, {t1}]: candidate kink set incomplete"
            )
    return PLFunction(tuple((t, -2 * v) for t, v in zip(ts, vals)))


def breaking_points(k: KnotComplex) -> list[BreakingPoint]:
    """Kinks of the knot-level upsilon function with positive derivative jump.

    (The engine-level envelope is a min of lines, so its kinks have negative
    jumps; the -2 scaling makes the knot-level jumps positive exactly there.)
    """
    return [
        BreakingPoint(t, jump)
        for t, jump in pl_singular_points(upsilon_function(k))
        if jump > 0
    ]


# ---------------------------------------------------------------------------
# Staircase closed forms (independent of the homology engine)
# ---------------------------------------------------------------------------


def check_jumps(jumps) -> tuple[int, ...]:
    """Validate a staircase jump sequence (a_1, ..., a_2k).

    Entries are positive integers; the odd-indexed and even-indexed entries
    must have equal sums (the staircase starts at (g, 0) and ends at (0, g),
    so the total is 2g).  The empty sequence is the unknot.
    """
    jumps = tuple(jumps)
    if len(jumps) % 2:
        raise ValueError("jump sequence must have even length")
    if any(not isinstance(a, int) or a < 1 for a in jumps):
        raise ValueError("jumps must be positive integers")
    if sum(jumps[0::2]) != sum(jumps[1::2]):
        raise ValueError("jump sequence must balance: sum of odd-indexed entries "
                         "must equal sum of even-indexed entries")
    return jumps


def staircase_corners(jumps) -> tuple[tuple[int, int], ...]:
    """The degree-0 corner positions (n_i, m_i), i = 0..k.

    n_i = g - (a_2 + a_4 + ... + a_2i) with n_0 = g = sum of even-indexed
    jumps, and m_i = a_1 + a_3 + ... + a_{2i-1} with m_0 = 0.
    """
    jumps = check_jumps(jumps)
    g = sum(jumps[1::2])
    corners = [(g, 0)]
    n, m = g, 0
    for i in range(0, len(jumps), 2):
        m += jumps[i]
        n -= jumps[i + 1]
        corners.append((n, m))
    return tuple(corners)


def _corner_envelope(corners) -> PLFunction:
    """min_i [(t/2) n_i + (1 - t/2) m_i] on [0, 2], exactly."""

    def line(i, t):
        n, m = corners[i]
        return Fraction(t) * n / 2 + (1 - Fraction(t) / 2) * m

    cands = {Fraction(0), Fraction(2)}
    for (n1, m1), (n2, m2) in combinations(set(corners), 2):
        if n1 - m1 != n2 - m2:
            t = Fraction(2 * (m2 - m1), (n1 - m1) - (n2 - m2))
            if 0 < t < 2:
                cands.add(t)
    ts = sorted(cands)
    return PLFunction(
        tuple((t, min(line(i, t) for i in range(len(corners)))) for t in ts)
    )


def staircase_upsilon(jumps) -> PLFunction:
    """Knot-level upsilon of a staircase by the direct min-of-lines formula."""
    envelope = _corner_envelope(staircase_corners(jumps))
    return PLFunction(tuple((t, -2 * v) for t, v in envelope.points))


def staircase_vk(jumps, s: int) -> Fraction:
    """V(s) of a staircase: -2 * min over corners of max(n_i - s, m_i)."""
    corners = staircase_corners(jumps)
    return Fraction(-2 * min(max(n - s, m) for n, m in corners))


def staircase_breaking_points(jumps) -> list[BreakingPoint]:
    """Breaking points of a staircase, with the extreme minimizing indices."""
    corners = staircase_corners(jumps)

    def line(i, t):
        n, m = corners[i]
        return t * n / 2 + (1 - t / 2) * m

    out = []
    for t, jump in pl_singular_points(_corner_envelope(corners)):
        vals = [line(i, t) for i in range(len(corners))]
        mn = min(vals)
        mins = [i for i, v in enumerate(vals) if v == mn]
        i_minus, i_plus = mins[0], mins[-1]
        knot_jump = -2 * jump
        if knot_jump > 0:
            out.append(BreakingPoint(t, knot_jump, i_minus, i_plus))
    return out


def staircase_kl(jumps, t_star, s) -> Fraction:
    """The secondary invariant of a staircase at a breaking point, closed form.

    With i_minus/i_plus the extreme corner indices realizing the envelope
    minimum at t_star, the connecting degree-1 chain is y_{i_minus} + ... +
    y_{i_plus - 1} (y_j sits at (n_j, m_{j+1})), and the value is
    -2 * (max_{i_minus <= j < i_plus} [(s/2) n_j + (1 - s/2) m_{j+1}]
          - envelope minimum at t_star).
    """
    t_star, s = Fraction(t_star), Fraction(s)
    corners = staircase_corners(jumps)
    vals = [Fraction(t_star) * n / 2 + (1 - Fraction(t_star) / 2) * m for n, m in corners]
    mn = min(vals)
    mins = [i for i, v in enumerate(vals) if v == mn]
    if len(mins) < 2 or not 0 < t_star < 2:
        raise ValueError(f"t = {t_star} is not a breaking point of this staircase")
    i_minus, i_plus = mins[0], mins[-1]
    peak = max(
        Fraction(s) * corners[j][0] / 2 + (1 - Fraction(s) / 2) * corners[j + 1][1]
        for j in range(i_minus, i_plus)
    )
    return -2 * (peak - mn)


# ---------------------------------------------------------------------------
# V, nu+, d-invariants
# ---------------------------------------------------------------------------


def vk(k: KnotComplex, s: int) -> Fraction:
    """V(s) = -2 * region invariant of {A <= s} & {j <= 0}.

    Note the sign convention: V(0) of the positive trefoil is -2 here, i.e.
    -2 times the non-negative local h/V invariants common elsewhere.
    """
    if not isinstance(s, int):
        raise ValueError("V takes an integer parameter")
    return -2 * upsilon_region(k, v_region(s))


def _max_alexander(k: KnotComplex) -> int:
    eng = _engine(k)
    return max(a for a, _ in eng.pos0)


def nu_plus(k: KnotComplex) -> int:
    """The least s >= 0 with V(s) = 0 (V stabilizes at 0 above the genus)."""
    bound = max(0, _max_alexander(k)) + 1
    for s in range(bound + 1):
        if vk(k, s) == 0:
            return s
    raise ValueError("V(s) did not vanish up to the Alexander range; not knot-type?")


def d_invariant(k: KnotComplex, q: int, m: int) -> Fraction:
    """Correction term of q-surgery in the spin-c structure indexed by m:
    ((q - 2m)^2 - q) / (4q) + V(m), valid for large surgeries.
    """
    if q < 1:
        raise ValueError(f"surgery coefficient must be a positive integer, got {q}")
    g = max(0, _max_alexander(k))
    if q < 2 * g - 1:
        raise ValueError(f"need q >= 2g - 1 = {2 * g - 1} (large surgery), got {q}")
    if not -q <= 2 * m < q:
        raise ValueError(f"spin-c index must satisfy -q/2 <= m < q/2, got m={m}")
    return Fraction((q - 2 * m) ** 2 - q, 4 * q) + vk(k, m)


# ---------------------------------------------------------------------------
# Secondary invariants
# ---------------------------------------------------------------------------


def _restricted_cycle(eng: _Engine, allowed_mask: int) -> int:
    """A generating cycle supported inside the mask (exists iff surjective)."""
    rows = []
    b = 0
    for i in range(len(eng.slice0)):
        if not (allowed_mask >> i) & 1:
            if (eng.z_ref >> i) & 1:
                b |= 1 << len(rows)
            rows.append(eng.d1_rows[i])
    x = F2Matrix(len(rows), len(eng.slice1), rows).solve(b)
    if x is None:
        raise ValueError("no generating cycle inside the region at its own invariant")
    z = eng.z_ref ^ _d1_apply(eng, x)
    if z & ~allowed_mask:
        raise AssertionError("restricted cycle escaped its support constraint")
    return z


def _boundaries_within(eng: _Engine, allowed_mask: int) -> list[int]:
    """A basis of the boundaries supported inside the mask (B_0 ∩ span(S))."""
    outside_rows = [
        eng.d1_rows[i] for i in range(len(eng.slice0)) if not (allowed_mask >> i) & 1
    ]
    mat = F2Matrix(len(outside_rows), len(eng.slice1), outside_rows)
    out = []
    for y in mat.nullspace():
        v = _d1_apply(eng, y)
        if v:
            out.append(v)
    return out


def secondary(
    k: KnotComplex,
    cplus: SouthWestRegion,
    cminus: SouthWestRegion,
    c: SouthWestRegion,
) -> SecondaryValue:
    """Least t making an exceptional cycle of C+ homologous to one of C-.

    With gamma± the region invariants of C±, the exceptional cycles of C± are
    the generating cycles supported in C±_{gamma±} — an affine coset
    z0± + V± where V± is the space of boundaries supported there.  If the two
    cosets intersect (z0+ + z0- in V+ + V-) there is no obstruction.
    Otherwise the answer is the least entering time t of a degree-1 lattice
    generator into C such that z0+ + z0- becomes a boundary of a degree-1
    chain supported in C+_{gamma+} ∪ C-_{gamma-} ∪ C_t; feasibility is
    monotone in t and always holds at the largest candidate, where the
    allowed chains span all of B_0.
    """
    eng = _engine(k)
    gp = upsilon_region(k, cplus)
    gm = upsilon_region(k, cminus)
    times_p = [entering_time(cplus, p) for p in eng.pos0]
    times_m = [entering_time(cminus, p) for p in eng.pos0]
    mask_p = _inside_mask(times_p, gp)
    mask_m = _inside_mask(times_m, gm)
    zp = _restricted_cycle(eng, mask_p)
    zm = _restricted_cycle(eng, mask_m)
    vplus = _boundaries_within(eng, mask_p)
    vminus = _boundaries_within(eng, mask_m)
    target = zp ^ zm
    if F2Space(vplus + vminus).contains(target):
        return NO_OBSTRUCTION

    n1 = len(eng.slice1)
    base = [
        entering_time(cplus, eng.pos1[j]) <= gp or entering_time(cminus, eng.pos1[j]) <= gm
        for j in range(n1)
    ]
    times_c = [entering_time(c, p) for p in eng.pos1]

    def feasible(t: Fraction) -> bool:
        space = F2Space(vplus + vminus)
        for j in range(n1):
            if base[j] or times_c[j] <= t:
                space.add(eng.d1_cols[j])
        return space.contains(target)

    cands = sorted(set(times_c))
    if not cands or not feasible(cands[-1]):
        raise AssertionError("secondary invariant: homologous at no candidate translate")
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]


def _kl_delta(k: KnotComplex, t_star: Fraction) -> Fraction:
    """Perturbation width at t_star: half the gap to the nearest other
    candidate kink or interval endpoint (so no kink sits strictly between
    t_star - delta and t_star + delta)."""
    cands = set(_candidate_ts(k)) | {Fraction(0), Fraction(2)}
    return min(abs(t_star - c) for c in cands if c != t_star) / 2


def kim_livingston(k: KnotComplex, t_star, s) -> SecondaryValue:
    """The secondary invariant at a breaking point t_star, evaluated against
    the half-plane family at parameter s:
    -2 * (secondary(H_{t_star+delta}, H_{t_star-delta}, H_s) - kink value).

    delta is computed, not "small enough": half the gap from t_star to the
    nearest other candidate kink (or endpoint), and the result is re-computed
    at delta/2 and asserted stable.  At a parameter that is not a breaking
    point the computation still returns NoObstruction when the exceptional
    cycle sets of the two perturbed half-planes intersect; a finite value
    there is an error, since the invariant is only defined at breaking points.
    """
    t_star, s = Fraction(t_star), Fraction(s)
    if not 0 < t_star < 2:
        raise ValueError(f"t_star must lie in (0, 2), got {t_star}")
    if not 0 <= s <= 2:
        raise ValueError(f"s must lie in [0, 2], got {s}")
    delta = _kl_delta(k, t_star)

    def run(d: Fraction) -> SecondaryValue:
        return secondary(
            k,
            upsilon_halfplane(t_star + d),
            upsilon_halfplane(t_star - d),
            upsilon_halfplane(s),
        )

    first = run(delta)
    again = run(delta / 2)
    if isinstance(first, NoObstructionType) or isinstance(again, NoObstructionType):
        if first is not again:
            raise AssertionError("secondary invariant unstable under delta halving")
        return NO_OBSTRUCTION
    if first != again:
        raise AssertionError("secondary invariant unstable under delta halving")
    if t_star not in {bp.t for bp in breaking_points(k)}:
        raise ValueError(f"t = {t_star} is not a breaking point")
    return -2 * (first - upsilon_region(k, upsilon_halfplane(t_star)))


def kim_livingston_oracle(k: KnotComplex, t_star, s, guard: int = 20) -> SecondaryValue:
    """Brute-force route to kim_livingston: the same perturbation width, but
    both the secondary invariant and the kink value come from the enumerating
    oracles.  No stability or breaking-point checks (single-shot oracle)."""
    t_star, s = Fraction(t_star), Fraction(s)
    if not 0 < t_star < 2:
        raise ValueError(f"t_star must lie in (0, 2), got {t_star}")
    if not 0 <= s <= 2:
        raise ValueError(f"s must lie in [0, 2], got {s}")
    delta = _kl_delta(k, t_star)
    res = brute_force_secondary(
        k,
        upsilon_halfplane(t_star + delta),
        upsilon_halfplane(t_star - delta),
        upsilon_halfplane(s),
        guard,
    )
    if isinstance(res, NoObstructionType):
        return NO_OBSTRUCTION
    return -2 * (res - brute_force_upsilon(k, upsilon_halfplane(t_star), guard))


# ---------------------------------------------------------------------------
# eta: Alexander-direction truncation
# ---------------------------------------------------------------------------


def eta(k: KnotComplex, c: SouthWestRegion) -> Fraction:
    """Least x such that truncating C at Alexander coordinate x does not
    change its region invariant.

    Truncation composes with translation, so the test at width x is: does
    C_gamma ∩ {A <= x + gamma} still support a generating cycle?  The answer
    is monotone in x and the minimum is attained at some A(g) - gamma.
    """
    eng = _engine(k)
    gamma = upsilon_region(k, c)
    times = [entering_time(c, p) for p in eng.pos0]

    def feasible(x: Fraction) -> bool:
        mask = 0
        for i, (a, _) in enumerate(eng.pos0):
            if times[i] <= gamma and a - x <= gamma:
                mask |= 1 << i
        return _surjective(eng, mask)

    cands = sorted({Fraction(a) - gamma for a, _ in eng.pos0})
    if not feasible(cands[-1]):
        raise AssertionError("eta: no generating cycle below the largest truncation")
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]


# ---------------------------------------------------------------------------
# Brute-force oracles (independent enumeration; no solver shared with above)
# ---------------------------------------------------------------------------


def _coset_basis(eng: _Engine, guard: int, what: str) -> list[int]:
    basis = []
    space = F2Space()
    for col in eng.d1_cols:
        if space.add(col):
            basis.append(col)
    if len(basis) > guard:
        raise GuardExceeded(
            f"{what}: boundary space dimension {len(basis)} exceeds guard {guard}; "
            "use the main engine"
        )
    return basis


def _enumerate_coset(eng: _Engine, basis: list[int]):
    """Every generating cycle: z_ref + each element of span(basis), Gray-coded."""
    z = eng.z_ref
    yield z
    gray_prev = 0
    for i in range(1, 1 << len(basis)):
        gray = i ^ (i >> 1)
        z ^= basis[(gray ^ gray_prev).bit_length() - 1]
        gray_prev = gray
        yield z


def brute_force_upsilon(k: KnotComplex, r: SouthWestRegion, guard: int = 20) -> Fraction:
    """Region invariant by enumerating every generating cycle.

    Minimum over the coset z_ref + B_0 of the maximal entering time over the
    support.  Exponential in dim B_0 (guarded); exact; shares no code path
    with the solver engine.
    """
    eng = _engine(k)
    basis = _coset_basis(eng, guard, "brute_force_upsilon")
    times = [entering_time(r, p) for p in eng.pos0]
    best = None
    for z in _enumerate_coset(eng, basis):
        value = max(times[i] for i in _bits(z))
        if best is None or value < best:
            best = value
    return best


def brute_force_secondary(
    k: KnotComplex,
    cplus: SouthWestRegion,
    cminus: SouthWestRegion,
    c: SouthWestRegion,
    guard: int = 20,
) -> SecondaryValue:
    """Secondary invariant by enumerating cycle pairs and degree-1 subsets.

    Lists the exceptional cycles of C+ and C- by filtering the full generating
    coset; reports NoObstruction on overlap; otherwise scans the candidate
    translates in increasing order and, at each, enumerates every subset of
    the allowed degree-1 generators, comparing boundaries against all pair
    sums.  Exact and exponential (guarded).
    """
    eng = _engine(k)
    basis = _coset_basis(eng, guard, "brute_force_secondary")
    gp = brute_force_upsilon(k, cplus, guard)
    gm = brute_force_upsilon(k, cminus, guard)
    times_p = [entering_time(cplus, p) for p in eng.pos0]
    times_m = [entering_time(cminus, p) for p in eng.pos0]
    mask_p = _inside_mask(times_p, gp)
    mask_m = _inside_mask(times_m, gm)
    zplus = []
    zminus = []
    for z in _enumerate_coset(eng, basis):
        if z & ~mask_p == 0:
            zplus.append(z)
        if z & ~mask_m == 0:
            zminus.append(z)
    if set(zplus) & set(zminus):
        return NO_OBSTRUCTION
    targets = {a ^ b for a in zplus for b in zminus}

    n1 = len(eng.slice1)
    base = [
        entering_time(cplus, eng.pos1[j]) <= gp or entering_time(cminus, eng.pos1[j]) <= gm
        for j in range(n1)
    ]
    times_c = [entering_time(c, p) for p in eng.pos1]
    for t in sorted(set(times_c)):
        allowed = [j for j in range(n1) if base[j] or times_c[j] <= t]
        if len(allowed) > guard:
            raise GuardExceeded(
                f"brute_force_secondary: {len(allowed)} allowed degree-1 generators "
                f"exceed guard {guard}; use the main engine"
            )
        bound = 0
        gray_prev = 0
        for i in range(1, 1 << len(allowed)):
            gray = i ^ (i >> 1)
            bound ^= eng.d1_cols[allowed[(gray ^ gray_prev).bit_length() - 1]]
            gray_prev = gray
            if bound in targets:
                return t
    raise AssertionError("brute_force_secondary: no candidate translate worked")
