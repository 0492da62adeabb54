"""Exact arithmetic on semilinear subsets of Z.

A :class:`ZSet` describes a set of integers as a finite union of three kinds
of components:

* sporadic points,
* rays ``start + step*k (k >= 0)`` going up, or ``start - step*k`` going down,
* full progressions ``residue + step*Z``.

Every constructor canonicalises.  The canonical form is the unique
decomposition of an eventually-periodic set into

* its largest "line part" (the union of residue classes that are entirely
  contained in the set, written with the minimal period),
* per direction, rays with the minimal eventual period of what remains,
  each ray starting at the lowest (resp. highest) point of its solid run,
* the finitely many leftover points, sorted.

Because the form is unique, ``==`` on ZSets is set equality, which is what
the closure fixpoints in :mod:`zsubdirect.subdirect` rely on.

The second half of the module classifies finitely generated subsemigroups
of Z into the four possible shapes ({0}, a subgroup dZ, a numerical-type
set inside dN0, or the mirror image inside -dN0) with exact conductor and
gap data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import EmptyGenerators, StructureViolation, WindowTooSmall

UP = 1
DOWN = -1

# case tags for subsemigroups of Z
ZERO = "zero"
GROUP = "group"
POS_NUMERICAL = "pos_numerical"
NEG_NUMERICAL = "neg_numerical"


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@dataclass(frozen=True)
class ZSet:
    """Canonical semilinear subset of Z.  Build via :func:`zset` or the factories."""

    sporadic: tuple[int, ...] = ()
    rays: tuple[tuple[int, int, int], ...] = ()  # (start, step, UP/DOWN)
    lines: tuple[tuple[int, int], ...] = ()      # (residue, step), 0 <= residue < step

    # -- factories ---------------------------------------------------------

    @staticmethod
    def empty() -> "ZSet":
        return _EMPTY

    @staticmethod
    def of(*points: int) -> "ZSet":
        return zset(points=points)

    @staticmethod
    def integers() -> "ZSet":
        return _ALL

    @staticmethod
    def ray(start: int, step: int, direction: int) -> "ZSet":
        return zset(rays=[(start, step, direction)])

    @staticmethod
    def line(step: int, residue: int = 0) -> "ZSet":
        return zset(lines=[(residue, step)])

    # -- queries -----------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not (self.sporadic or self.rays or self.lines)

    @property
    def is_finite(self) -> bool:
        return not (self.rays or self.lines)

    def __contains__(self, n: int) -> bool:
        if n in self.sporadic:
            return True
        for start, step, direction in self.rays:
            if direction == UP:
                if n >= start and (n - start) % step == 0:
                    return True
            elif n <= start and (start - n) % step == 0:
                return True
        for residue, step in self.lines:
            if n % step == residue:
                return True
        return False

    def min_element(self) -> int | None:
        """Smallest member, or None when empty or unbounded below."""
        if self.is_empty or self.lines:
            return None
        if any(direction == DOWN for _, _, direction in self.rays):
            return None
        return min(list(self.sporadic) + [s for s, _, _ in self.rays])

    def max_element(self) -> int | None:
        if self.is_empty or self.lines:
            return None
        if any(direction == UP for _, _, direction in self.rays):
            return None
        return max(list(self.sporadic) + [s for s, _, _ in self.rays])

    def window(self, lo: int, hi: int) -> list[int]:
        """Sorted members n with lo <= n <= hi."""
        out = {p for p in self.sporadic if lo <= p <= hi}
        for start, step, direction in self.rays:
            if direction == UP:
                first = start if start >= lo else start + (-(start - lo) // step) * step
                out.update(range(max(first, lo), hi + 1, step))
            else:
                last = start if start <= hi else start - (-(hi - start) // step) * step
                out.update(range(min(last, hi), lo - 1, -step))
        for residue, step in self.lines:
            first = lo + (residue - lo) % step
            out.update(range(first, hi + 1, step))
        return sorted(out)

    def _abs_bound(self) -> int:
        vals = [abs(p) for p in self.sporadic]
        vals += [abs(s) for s, _, _ in self.rays]
        vals += [step for _, step in self.lines]
        return max(vals, default=0)

    # -- algebra -----------------------------------------------------------

    def shift(self, k: int) -> "ZSet":
        """Translate by k.  Canonical form is translation-equivariant."""
        if self.is_empty or k == 0:
            return self
        return ZSet(
            tuple(p + k for p in self.sporadic),
            tuple(sorted((s + k, step, d) for s, step, d in self.rays)),
            tuple(sorted(((r + k) % step, step) for r, step in self.lines)),
        )

    def negate(self) -> "ZSet":
        """Mirror through 0.  Canonical form is mirror-equivariant."""
        if self.is_empty:
            return self
        return ZSet(
            tuple(sorted(-p for p in self.sporadic)),
            tuple(sorted((-s, step, -d) for s, step, d in self.rays)),
            tuple(sorted(((-r) % step, step) for r, step in self.lines)),
        )

    def __or__(self, other: "ZSet") -> "ZSet":
        return zset_union([self, other])

    def __add__(self, other: "ZSet") -> "ZSet":
        return zset_sum(self, other)

    def __le__(self, other: "ZSet") -> bool:
        """Subset test, exact: A <= B iff A | B == B."""
        return (self | other) == other

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "sporadic": list(self.sporadic),
            "rays": [
                {"r": s, "d": step, "dir": "+" if d == UP else "-"}
                for s, step, d in self.rays
            ],
            "lines": [{"r": r, "d": step} for r, step in self.lines],
        }

    @staticmethod
    def from_json(obj: dict) -> "ZSet":
        return zset(
            points=obj.get("sporadic", ()),
            rays=[
                (r["r"], r["d"], UP if r.get("dir", "+") == "+" else DOWN)
                for r in obj.get("rays", ())
            ],
            lines=[(l["r"], l["d"]) for l in obj.get("lines", ())],
        )


def zset(points=(), rays=(), lines=()) -> ZSet:
    """Build a canonical ZSet from arbitrary (possibly overlapping) components."""
    return _canonicalize(points, rays, lines)


def zset_member(a: ZSet, n: int) -> bool:
    return n in a


def _canonicalize(points, rays, lines) -> ZSet:
    pts = set(points)
    rr = set()
    for start, step, direction in rays:
        if step <= 0:
            raise ValueError("ray step must be positive")
        rr.add((start, step, UP if direction >= 0 else DOWN))
    ll = set()
    for residue, step in lines:
        if step <= 0:
            raise ValueError("line step must be positive")
        ll.add((residue % step, step))

    if not rr and not ll:
        return ZSet(tuple(sorted(pts)), (), ())

    period = 1
    for _, step, _ in rr:
        period = math.lcm(period, step)
    for _, step in ll:
        period = math.lcm(period, step)
    offsets = [abs(p) for p in pts] + [abs(s) for s, _, _ in rr] + [s for _, s in ll]
    high = max(offsets, default=0) + 2 * period

    def member(n: int) -> bool:
        if n in pts:
            return True
        for start, step, direction in rr:
            if direction == UP:
                if n >= start and (n - start) % step == 0:
                    return True
            elif n <= start and (start - n) % step == 0:
                return True
        return any(n % step == residue for residue, step in ll)

    def covered(c: int, direction: int) -> bool:
        if any(c % step == residue for residue, step in ll):
            return True
        return any(
            d == direction and c % step == start % step for start, step, d in rr
        )

    up_res = {c for c in range(period) if covered(c, UP)}
    down_res = {c for c in range(period) if covered(c, DOWN)}

    # line part: residue classes mod `period` entirely inside the set
    full = set()
    for c in up_res & down_res:
        first = -high + (c + high) % period
        if all(member(n) for n in range(first, high + 1, period)):
            full.add(c)

    out_lines: tuple[tuple[int, int], ...] = ()
    if full:
        for d in _divisors(period):
            if {(c + d) % period for c in full} == full:
                out_lines = tuple((c, d) for c in sorted({c % d for c in full}))
                break

    def member2(n: int) -> bool:
        return n % period not in full and member(n)

    def _min_shift_period(res: set[int]) -> int:
        for d in _divisors(period):
            if {(c + d) % period for c in res} == res:
                return d
        raise AssertionError("period is always a shift period")

    out_rays: list[tuple[int, int, int]] = []
    up2 = up_res - full
    if up2:
        p_up = _min_shift_period(up2)
        for c in sorted({c % p_up for c in up2}):
            b = high + (c - high) % p_up
            floor = -high - 2 * period - p_up
            while member2(b - p_up):
                b -= p_up
                if b < floor:
                    raise AssertionError("upward ray start walk did not terminate")
            out_rays.append((b, p_up, UP))
    down2 = down_res - full
    if down2:
        p_down = _min_shift_period(down2)
        for c in sorted({c % p_down for c in down2}):
            b = -high - (-high - c) % p_down
            ceiling = high + 2 * period + p_down
            while member2(b + p_down):
                b += p_down
                if b > ceiling:
                    raise AssertionError("downward ray start walk did not terminate")
            out_rays.append((b, p_down, DOWN))

    def in_rays(n: int) -> bool:
        for start, step, d in out_rays:
            if d == UP and n >= start and (n - start) % step == 0:
                return True
            if d == DOWN and n <= start and (start - n) % step == 0:
                return True
        return False

    margin = high + period
    spor = tuple(
        n for n in range(-margin, margin + 1) if member2(n) and not in_rays(n)
    )
    return ZSet(spor, tuple(sorted(out_rays)), out_lines)


_EMPTY = ZSet()
_ALL = ZSet((), (), ((0, 1),))


# ---------------------------------------------------------------------------
# Minkowski sum and union
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _monoid_pair(d1: int, d2: int):
    """The monoid {d1*k + d2*m : k,m >= 0} as (points below tail, tail start, gcd)."""
    g = math.gcd(d1, d2)
    a, b = d1 // g, d2 // g
    bound = a * b + max(a, b) + 1
    reach = bytearray(bound + 1)
    reach[0] = 1
    for i in range(1, bound + 1):
        if (i >= a and reach[i - a]) or (i >= b and reach[i - b]):
            reach[i] = 1
    c = bound
    while c > 0 and reach[c - 1]:
        c -= 1
    pts = tuple(i * g for i in range(c) if reach[i])
    return pts, c * g, g


def zset_sum(a: ZSet, b: ZSet) -> ZSet:
    """Exact Minkowski sum {x + y : x in a, y in b}."""
    if a.is_empty or b.is_empty:
        return _EMPTY
    pts: list[int] = [x + y for x in a.sporadic for y in b.sporadic]
    rays: list[tuple[int, int, int]] = []
    lines: list[tuple[int, int]] = []
    for x in a.sporadic:
        rays.extend((start + x, step, d) for start, step, d in b.rays)
        lines.extend((residue + x, step) for residue, step in b.lines)
    for y in b.sporadic:
        rays.extend((start + y, step, d) for start, step, d in a.rays)
        lines.extend((residue + y, step) for residue, step in a.lines)
    for s1, d1, dir1 in a.rays:
        for s2, d2, dir2 in b.rays:
            if dir1 == dir2:
                rel_pts, tail, g = _monoid_pair(d1, d2)
                base = s1 + s2
                if dir1 == UP:
                    pts.extend(base + t for t in rel_pts)
                    rays.append((base + tail, g, UP))
                else:
                    pts.extend(base - t for t in rel_pts)
                    rays.append((base - tail, g, DOWN))
            else:
                # opposite rays reach every multiple of the gcd
                lines.append((s1 + s2, math.gcd(d1, d2)))
        for residue, step in b.lines:
            lines.append((s1 + residue, math.gcd(d1, step)))
    for residue, step in a.lines:
        for s2, d2, _ in b.rays:
            lines.append((residue + s2, math.gcd(step, d2)))
        for r2, p2 in b.lines:
            lines.append((residue + r2, math.gcd(step, p2)))
    return _canonicalize(pts, rays, lines)


def zset_union(zsets) -> ZSet:
    pts: list[int] = []
    rays: list[tuple[int, int, int]] = []
    lines: list[tuple[int, int]] = []
    for z in zsets:
        pts.extend(z.sporadic)
        rays.extend(z.rays)
        lines.extend(z.lines)
    return _canonicalize(pts, rays, lines)


def finite_difference(a: ZSet, b: ZSet) -> tuple[int, ...] | None:
    """a minus b as an explicit tuple, or None when the difference is infinite."""
    if a.is_empty:
        return ()
    period = 1
    for _, step, _ in a.rays + b.rays:
        period = math.lcm(period, step)
    for _, step in a.lines + b.lines:
        period = math.lcm(period, step)

    def covers(z: ZSet, c: int, direction: int) -> bool:
        if any(c % step == residue for residue, step in z.lines):
            return True
        return any(
            d == direction and c % step == start % step for start, step, d in z.rays
        )

    for c in range(period):
        if covers(a, c, UP) and not covers(b, c, UP):
            return None
        if covers(a, c, DOWN) and not covers(b, c, DOWN):
            return None
    h = max(a._abs_bound(), b._abs_bound()) + period
    return tuple(n for n in range(-h, h + 1) if n in a and n not in b)


# ---------------------------------------------------------------------------
# Additive closure of a ZSet
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _monoid_value(gens: tuple[int, ...]) -> ZSet:
    """The monoid <gens> together with 0, as a ZSet."""
    nonzero = [g for g in gens if g]
    if not nonzero:
        return ZSet.of(0)
    if any(g > 0 for g in nonzero) and any(g < 0 for g in nonzero):
        return ZSet.line(math.gcd(*nonzero))
    cls = classify_int_subsemigroup(tuple(nonzero))
    return cls.value | ZSet.of(0)


@lru_cache(maxsize=None)
def additive_closure(z: ZSet) -> ZSet:
    """Smallest addition-closed superset of z, computed exactly.

    Sums that use a ray or line component k times contribute the component
    offset k times plus arbitrary non-negative multiples of its step, so
    the closure decomposes over the nonempty subsets of the infinite
    components, each subset contributing a shifted monoid value.
    """
    if z.is_empty:
        return z
    atoms: list[tuple[int, tuple[int, ...]]] = []
    for start, step, direction in z.rays:
        atoms.append((start, (step,) if direction == UP else (-step,)))
    for residue, step in z.lines:
        atoms.append((residue, (step, -step)))
    if len(atoms) > 12:
        raise StructureViolation("too many infinite components to close")
    base = list(z.sporadic)
    pieces: list[ZSet] = []
    if base:
        pieces.append(classify_int_subsemigroup(tuple(base)).value)
    for mask in range(1, 1 << len(atoms)):
        chosen = [atoms[i] for i in range(len(atoms)) if mask >> i & 1]
        sigma = sum(off for off, _ in chosen)
        gens = set(base)
        for off, steps in chosen:
            gens.add(off)
            gens.update(steps)
        pieces.append(_monoid_value(tuple(sorted(gens))).shift(sigma))
    return zset_union(pieces)


def monoid_closure(z: ZSet) -> ZSet:
    """additive_closure(z) together with 0 (the 'use zero or more times' closure)."""
    if z.is_empty:
        return ZSet.of(0)
    return additive_closure(z) | ZSet.of(0)


# ---------------------------------------------------------------------------
# Classification of finitely generated subsemigroups of Z
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntSubsemigroupClass:
    """A finitely generated subsemigroup of Z with its case data.

    case is one of ZERO, GROUP, POS_NUMERICAL, NEG_NUMERICAL.  For the
    numerical cases `step` is the gcd of the nonzero members, `conductor`
    the threshold |n| past which every multiple of the step belongs, and
    `gaps` the finitely many multiples of the step that are missing.
    """

    case: str
    step: int
    conductor: int
    gaps: tuple[int, ...]
    value: ZSet
    generators: tuple[int, ...]


def _reach_array(scaled: list[int]):
    """DP reachability table for a gcd-1 set of positive generators."""
    s1 = scaled[0]
    s2 = scaled[1] if len(scaled) > 1 else scaled[0]
    smax = scaled[-1]
    limit = max((s1 - 1) * (smax - 1), s1 * s2) + smax + 1
    gen_set = set(scaled)
    reach = bytearray(limit + 1)
    for i in range(1, limit + 1):
        if i in gen_set:
            reach[i] = 1
            continue
        for a in scaled:
            if i > a and reach[i - a]:
                reach[i] = 1
                break
    return reach, limit


def _minimal_gens_scaled(reach, conductor: int, smallest: int) -> list[int]:
    # every member above conductor + smallest splits off the smallest member
    hi = min(len(reach) - 1, conductor + smallest)
    members = [m for m in range(1, hi + 1) if reach[m]]
    out = []
    for m in members:
        if not any(reach[m - a] for a in members if 0 < a < m):
            out.append(m)
    return out


def _classify_nonneg(gen_set: frozenset[int]) -> IntSubsemigroupClass:
    nonzero = sorted(g for g in gen_set if g)
    d = math.gcd(*nonzero)
    scaled = sorted({g // d for g in nonzero})
    reach, limit = _reach_array(scaled)
    if 0 in gen_set:
        reach[0] = 1
    c = limit
    while c > 0 and reach[c - 1]:
        c -= 1
    value = zset(
        points=[d * m for m in range(c) if reach[m]],
        rays=[(d * c, d, UP)],
    )
    gaps = tuple(d * m for m in range(c) if not reach[m])
    gens = [d * m for m in _minimal_gens_scaled(reach, c, scaled[0])]
    if 0 in gen_set:
        gens.append(0)
    return IntSubsemigroupClass(
        POS_NUMERICAL, d, d * c, gaps, value, tuple(sorted(gens))
    )


def classify_int_subsemigroup(gens) -> IntSubsemigroupClass:
    """Exact additive closure of a finite generator set, with its case.

    Exactly one of the four cases applies: the closure is {0}, a full
    subgroup dZ (mixed signs), or a numerical-type set of one sign.
    """
    gen_set = frozenset(int(g) for g in gens)
    if not gen_set:
        raise EmptyGenerators("no generators given")
    pos = any(g > 0 for g in gen_set)
    neg = any(g < 0 for g in gen_set)
    if not pos and not neg:
        return IntSubsemigroupClass(ZERO, 0, 0, (), ZSet.of(0), (0,))
    if pos and neg:
        d = math.gcd(*(g for g in gen_set if g))
        return IntSubsemigroupClass(
            GROUP, d, 0, (), ZSet.line(d), (-d, d)
        )
    if pos:
        return _classify_nonneg(gen_set)
    mirror = _classify_nonneg(frozenset(-g for g in gen_set))
    return IntSubsemigroupClass(
        NEG_NUMERICAL,
        mirror.step,
        mirror.conductor,
        tuple(sorted(-g for g in mirror.gaps)),
        mirror.value.negate(),
        tuple(sorted(-g for g in mirror.generators)),
    )


def classify_closed_zset(z: ZSet) -> IntSubsemigroupClass:
    """Classify a ZSet known to be closed under addition.

    Raises StructureViolation when z cannot be an addition-closed set,
    which callers use to detect corrupted fiber descriptions.
    """
    if z == ZSet.of(0):
        return IntSubsemigroupClass(ZERO, 0, 0, (), z, (0,))
    if z.lines:
        if z.sporadic or z.rays or len(z.lines) != 1 or z.lines[0][0] != 0:
            raise StructureViolation("closed set with lines must be a subgroup dZ")
        d = z.lines[0][1]
        return IntSubsemigroupClass(GROUP, d, 0, (), z, (-d, d))
    if not z.rays:
        raise StructureViolation("a finite addition-closed set can only be {0}")
    directions = {d for _, _, d in z.rays}
    if directions == {UP}:
        lo = z.min_element()
        if lo is None or lo < 0:
            raise StructureViolation("upward-closed subsemigroup must be non-negative")
        hi = max(s for s, _, _ in z.rays) + lo + max(step for _, step, _ in z.rays)
        cls = classify_int_subsemigroup(tuple(z.window(0, hi)))
        if cls.value != z:
            raise StructureViolation("set is not closed under addition")
        return cls
    if directions == {DOWN}:
        mirror = classify_closed_zset(z.negate())
        return IntSubsemigroupClass(
            NEG_NUMERICAL,
            mirror.step,
            mirror.conductor,
            tuple(sorted(-g for g in mirror.gaps)),
            z,
            tuple(sorted(-g for g in mirror.generators)),
        )
    raise StructureViolation("closed set unbounded both ways must be a subgroup")


def minimal_generators(cls: IntSubsemigroupClass) -> tuple[int, ...]:
    """Irredundant generating set, recomputed from the value."""
    return classify_closed_zset(cls.value).generators


def windowed_int_closure(gens, window: int) -> frozenset[int]:
    """Brute-force oracle: all sums of generators reachable without any
    partial sum leaving [-window, window].

    Sound everywhere; complete on the whole window when the generators
    share a sign, and complete for |n| <= window - max|gen| otherwise.
    """
    gen_list = sorted({int(g) for g in gens})
    if not gen_list:
        raise EmptyGenerators("no generators given")
    if any(abs(g) > window for g in gen_list):
        raise WindowTooSmall(f"generator outside [-{window}, {window}]")
    reached = set(gen_list)
    frontier = list(gen_list)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gen_list:
                y = x + g
                if -window <= y <= window and y not in reached:
                    reached.add(y)
                    fresh.append(y)
        frontier = fresh
    return frozenset(reached)
