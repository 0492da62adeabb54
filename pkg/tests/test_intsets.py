import pytest
from hypothesis import given
from hypothesis import strategies as st

from zsubdirect.errors import EmptyGenerators, StructureViolation, WindowTooSmall
from zsubdirect.intsets import (
    DOWN,
    GROUP,
    NEG_NUMERICAL,
    POS_NUMERICAL,
    UP,
    ZERO,
    ZSet,
    additive_closure,
    classify_closed_zset,
    classify_int_subsemigroup,
    finite_difference,
    minimal_generators,
    windowed_int_closure,
    zset,
    zset_member,
    zset_sum,
    zset_union,
)

points = st.lists(st.integers(-25, 25), max_size=5)
rays = st.lists(
    st.tuples(st.integers(-20, 20), st.integers(1, 6), st.sampled_from((UP, DOWN))),
    max_size=3,
)
lines = st.lists(st.tuples(st.integers(-10, 10), st.integers(1, 6)), max_size=2)


def raw_member(n, pts, rs, ls):
    if n in pts:
        return True
    for start, step, d in rs:
        if d == UP and n >= start and (n - start) % step == 0:
            return True
        if d == DOWN and n <= start and (start - n) % step == 0:
            return True
    return any(n % step == r % step for r, step in ls)


def test_membership_examples():
    assert zset_member(ZSet.of(0), 0) and not zset_member(ZSet.of(0), 1)
    ray = ZSet.ray(2, 3, UP)
    assert 11 in ray and 10 not in ray
    closure = classify_int_subsemigroup((4, 6)).value
    assert all(v in closure for v in (4, 6, 8, 10))
    assert 2 not in closure


def test_canonical_merges():
    assert zset(points=[5, 10, 15], rays=[(20, 5, UP)]) == ZSet.ray(5, 5, UP)
    assert zset(points=[0], rays=[(1, 1, UP)]) == ZSet.ray(0, 1, UP)
    assert zset(rays=[(0, 1, UP), (0, 1, DOWN)]) == ZSet.integers()
    assert zset(lines=[(0, 2), (1, 2)]) == ZSet.integers()
    assert zset(lines=[(3, 4)]).lines == ((3, 4),)
    assert zset(points=[7], lines=[(1, 2)]) == ZSet.line(2, 1)


@given(points, rays, lines)
def test_canonicalisation_preserves_membership(pts, rs, ls):
    z = zset(points=pts, rays=rs, lines=ls)
    for n in range(-80, 81):
        assert (n in z) == raw_member(n, pts, rs, ls)
    # canonical form is a fixpoint
    assert zset(points=z.sporadic, rays=z.rays, lines=z.lines) == z


@given(points, rays, lines, points, rays, lines)
def test_sum_union_subset_against_window(p1, r1, l1, p2, r2, l2):
    a = zset(points=p1, rays=r1, lines=l1)
    b = zset(points=p2, rays=r2, lines=l2)
    u = a | b
    for n in range(-60, 61):
        assert (n in u) == ((n in a) or (n in b))
    assert a <= u and b <= u
    s = zset_sum(a, b)
    if a.is_empty or b.is_empty:
        assert s.is_empty
        return
    # any decomposition of a small sum can be shifted into a bounded probe
    # window (component offsets <= 25, steps <= 6, lcm of steps <= 60)
    probe = a.window(-250, 250)
    for n in range(-40, 41):
        assert (n in s) == any((n - x) in b for x in probe)


def test_sum_examples():
    assert zset_sum(ZSet.of(3), ZSet.line(4)) == ZSet.line(4, 3)
    assert zset_sum(ZSet.ray(2, 3, UP), ZSet.ray(1, 3, UP)) == ZSet.ray(3, 3, UP)
    mixed = zset_sum(ZSet.ray(0, 2, UP), ZSet.ray(0, 3, DOWN))
    assert mixed == ZSet.integers()
    # cross-check the mixed case against windowed pairwise sums
    a, b = ZSet.ray(0, 2, UP), ZSet.ray(0, 3, DOWN)
    pairwise = {
        x + y for x in a.window(-50, 50) for y in b.window(-50, 50)
    }
    assert set(mixed.window(-20, 20)) <= pairwise


def test_shift_negate_window():
    z = zset(points=[1], rays=[(4, 2, UP)], lines=[(0, 5)])
    for n in range(-30, 31):
        assert ((n - 3) in z) == (n in z.shift(3))
        assert ((-n) in z) == (n in z.negate())
    assert z.window(-10, 10) == [n for n in range(-10, 11) if n in z]


def test_min_max_elements():
    assert ZSet.of(3, 7).min_element() == 3
    assert ZSet.ray(2, 3, UP).min_element() == 2
    assert ZSet.ray(2, 3, UP).max_element() is None
    assert ZSet.line(2).min_element() is None
    assert ZSet.empty().min_element() is None


def test_classify_examples():
    assert classify_int_subsemigroup((0,)).case == ZERO
    mixed = classify_int_subsemigroup((-2, 3))
    assert mixed.case == GROUP and mixed.step == 1
    assert mixed.value == ZSet.integers()
    pn = classify_int_subsemigroup((4, 6))
    assert (pn.case, pn.step, pn.conductor, pn.gaps) == (POS_NUMERICAL, 2, 4, (0, 2))
    assert pn.value == ZSet.ray(4, 2, UP)
    pn = classify_int_subsemigroup((2, 3))
    assert (pn.step, pn.conductor, pn.gaps) == (1, 2, (0, 1))
    nn = classify_int_subsemigroup((-2, -3))
    assert (nn.case, nn.step, nn.conductor, nn.gaps) == (NEG_NUMERICAL, 1, 2, (-1, 0))
    with pytest.raises(EmptyGenerators):
        classify_int_subsemigroup(())


def test_minimal_generators_examples():
    assert minimal_generators(classify_int_subsemigroup((0,))) == (0,)
    assert minimal_generators(classify_int_subsemigroup((3, -3))) == (-3, 3)
    assert minimal_generators(classify_int_subsemigroup((2, 3))) == (2, 3)
    assert minimal_generators(classify_int_subsemigroup((4, 6, 8))) == (4, 6)


def test_windowed_int_closure_examples():
    assert windowed_int_closure((0,), 10) == {0}
    assert windowed_int_closure((2, 3), 10) == set(range(2, 11))
    with pytest.raises(WindowTooSmall):
        windowed_int_closure((11,), 10)
    with pytest.raises(EmptyGenerators):
        windowed_int_closure((), 10)


gens_strategy = st.lists(st.integers(-20, 20), min_size=1, max_size=4)


@given(gens_strategy)
def test_classify_against_windowed_oracle(gens):
    window = 300
    cls = classify_int_subsemigroup(gens)
    oracle = windowed_int_closure(gens, window)
    biggest = max(abs(g) for g in gens)
    mixed = any(g > 0 for g in gens) and any(g < 0 for g in gens)
    lo, hi = (-window + biggest, window - biggest) if mixed else (-window, window)
    assert set(cls.value.window(lo, hi)) == {n for n in oracle if lo <= n <= hi}
    # soundness outside the completeness region too
    assert all(n in cls.value for n in oracle)


@given(gens_strategy)
def test_classify_value_is_closed_and_case_data_consistent(gens):
    cls = classify_int_subsemigroup(gens)
    assert cls.case in (ZERO, GROUP, POS_NUMERICAL, NEG_NUMERICAL)
    assert zset_sum(cls.value, cls.value) <= cls.value
    if cls.case == POS_NUMERICAL:
        d, c = cls.step, cls.conductor
        assert all(g % d == 0 and g < c for g in cls.gaps)
        assert all((n not in cls.value) == (n in cls.gaps) for n in range(0, c, d))
        assert all(n in cls.value for n in range(c, c + 6 * d, d))
        nonzero = [v for v in cls.value.window(-200, 200) if v]
        import math

        assert math.gcd(*nonzero) == d


@given(gens_strategy)
def test_minimal_generators_roundtrip(gens):
    cls = classify_int_subsemigroup(gens)
    regen = minimal_generators(cls)
    assert classify_int_subsemigroup(regen).value == cls.value
    # irredundant: dropping any generator loses something
    for g in regen:
        rest = tuple(v for v in regen if v != g)
        if rest:
            assert classify_int_subsemigroup(rest).value != cls.value


@given(gens_strategy)
def test_additive_closure_agrees_with_classify(gens):
    assert additive_closure(ZSet.of(*gens)) == classify_int_subsemigroup(gens).value


def test_additive_closure_of_infinite_sets():
    assert additive_closure(ZSet.ray(2, 1, UP)) == ZSet.ray(2, 1, UP)
    assert additive_closure(ZSet.of(1, -1)) == ZSet.integers()
    # {3} with a far ray: closure mixes both components
    z = zset(points=[3], rays=[(10, 5, UP)])
    c = additive_closure(z)
    assert zset_sum(c, c) <= c and z <= c
    assert 13 in c and 6 in c and 4 not in c
    line = ZSet.line(4, 2)   # 2 + 4Z
    assert additive_closure(line) == ZSet.line(2)


def test_finite_difference():
    a = zset(points=[1], rays=[(4, 2, UP)])
    b = ZSet.ray(6, 2, UP)
    assert finite_difference(a, b) == (1, 4)
    assert finite_difference(b, a) == ()
    assert finite_difference(ZSet.integers(), ZSet.line(2)) is None
    assert finite_difference(ZSet.of(), ZSet.of(1)) == ()
    assert finite_difference(ZSet.ray(0, 2, UP), ZSet.ray(1, 2, UP)) is None


def test_classify_closed_zset():
    assert classify_closed_zset(ZSet.of(0)).case == ZERO
    assert classify_closed_zset(ZSet.line(3)).case == GROUP
    cls = classify_closed_zset(zset(points=[3, 5, 6, 7], rays=[(8, 1, UP)]))
    assert cls.case == POS_NUMERICAL and cls.generators == (3, 5, 7)
    with pytest.raises(StructureViolation):
        classify_closed_zset(ZSet.of(0, 1))
    with pytest.raises(StructureViolation):
        classify_closed_zset(ZSet.of(-1, 1))
    with pytest.raises(StructureViolation):
        classify_closed_zset(ZSet.line(3, 1))
    with pytest.raises(StructureViolation):
        classify_closed_zset(zset(points=[2], rays=[(5, 3, UP)]))


@given(points, rays, lines)
def test_union_equality_is_set_equality(p1, r1, l1):
    # a syntactically different component soup with the same membership
    # canonicalises to the identical value
    z = zset(points=p1, rays=r1, lines=l1)
    redundant = zset(
        points=list(p1) + list(p1),
        rays=list(r1) + [(s + d * step, step, d) for s, step, d in r1],
        lines=list(l1) + [(r + step, step) for r, step in l1],
    )
    assert redundant == z
    assert zset_union([z, redundant]) == z
