import pytest

from checks import oracle_region, random_subdirect_instances
from zsubdirect.corpus import (
    cyclic_group,
    null_semigroup,
    semilattice_chain,
)
from zsubdirect.errors import EmptyGenerators, GeneratorsNotInP, WindowTooSmall
from zsubdirect.intsets import GROUP, POS_NUMERICAL, UP, ZERO, ZSet, zset
from zsubdirect.subdirect import (
    SubdirectDescription,
    Unstabilized,
    fiber_structure,
    finite_generating_set,
    is_subdirect,
    structured_closure,
    verify_generation,
    windowed_closure,
)

TRIV = semilattice_chain(1)
Y2 = semilattice_chain(2)      # c1 bottom, c2 top (identity)
N2 = null_semigroup(2)         # a=1, z=2
C2 = cyclic_group(2)           # g0=1 identity, g1=2


def test_windowed_closure_examples():
    assert windowed_closure(TRIV, [(1, 1), (-1, 1)], 5) == {
        (n, 1) for n in range(-5, 6)
    }
    got = windowed_closure(Y2, [(1, 2), (-1, 2), (0, 1)], 3)
    assert got == {(n, x) for n in range(-3, 4) for x in (1, 2)}
    got = windowed_closure(N2, [(1, 2), (-1, 2), (0, 1)], 3)
    assert got == {(n, 2) for n in range(-3, 4)} | {(0, 1)}
    with pytest.raises(WindowTooSmall):
        windowed_closure(TRIV, [(9, 1)], 5)
    with pytest.raises(EmptyGenerators):
        windowed_closure(TRIV, [], 5)


def test_windowed_closure_monotone_in_window():
    gens = [(2, 1), (-3, 1)]
    small = windowed_closure(TRIV, gens, 12)
    big = windowed_closure(TRIV, gens, 30)
    assert small <= big


def test_structured_closure_examples():
    r = structured_closure(TRIV, [(1, 1), (-1, 1)])
    assert r.fibers == (ZSet.integers(),)

    r = structured_closure(Y2, [(2, 2), (3, 2), (0, 1)])
    assert r.fiber(2) == ZSet.ray(2, 1, UP)                  # {2,3,4,...}
    assert r.fiber(1) == zset(points=[0], rays=[(2, 1, UP)])  # {0,2,3,...}

    r = structured_closure(N2, [(1, 2), (-1, 2), (5, 1)])
    assert r.fiber(2) == ZSet.integers()
    assert r.fiber(1) == ZSet.of(5)


def test_structured_closure_unstabilized_value():
    r = structured_closure(C2, [(1, 2)], max_rounds=1)
    assert isinstance(r, Unstabilized)
    assert r.rounds == 1


def test_is_subdirect_examples():
    assert is_subdirect(SubdirectDescription(TRIV, (ZSet.integers(),)))
    part = structured_closure(Y2, [(2, 2), (3, 2), (0, 1)])
    assert not is_subdirect(part)          # negative integers never covered
    ok = SubdirectDescription(N2, (ZSet.of(5), ZSet.integers()))
    assert is_subdirect(ok)
    empty_fiber = SubdirectDescription(N2, (ZSet.empty(), ZSet.integers()))
    assert not is_subdirect(empty_fiber)


def test_fiber_structure_examples():
    p = SubdirectDescription(TRIV, (ZSet.integers(),))
    fs = fiber_structure(p, 1)
    assert (fs.case, fs.anchor, fs.exceptional) == (GROUP, 0, ())

    # top fiber {0}, bottom fiber Z: the zero case shows up at the top
    p = SubdirectDescription(Y2, (ZSet.integers(), ZSet.of(0)))
    fs = fiber_structure(p, 2)
    assert (fs.case, fs.anchor, fs.exceptional) == (ZERO, 0, ())
    assert fs.idempotent == 2

    # parity fibers over the order-2 group
    p = SubdirectDescription(C2, (ZSet.line(2), ZSet.line(2, 1)))
    fs = fiber_structure(p, 2)
    assert (fs.case, fs.anchor, fs.idempotent) == (GROUP, 1, 1)
    assert fs.exceptional == ()

    # numerical case with the anchor at the minimum
    desc = structured_closure(Y2, [(2, 2), (3, 2), (0, 1)])
    fs = fiber_structure(desc, 1)
    assert fs.case == POS_NUMERICAL
    assert fs.anchor == 0 and fs.exceptional == ()
    assert fs.idempotent == 1
    fs = fiber_structure(desc, 2)
    assert fs.case == POS_NUMERICAL and fs.anchor == 2
    assert fs.exceptional == (2, 3)  # {2,3,...} minus (2 + {2,3,...})


def test_finite_generating_set_examples():
    p = SubdirectDescription(TRIV, (ZSet.integers(),))
    assert finite_generating_set(p) == ((-1, 1), (0, 1), (1, 1))

    p = SubdirectDescription(C2, (ZSet.line(2), ZSet.line(2, 1)))
    assert finite_generating_set(p) == ((-2, 1), (0, 1), (1, 2), (2, 1))

    desc = structured_closure(Y2, [(2, 2), (3, 2), (0, 1)])
    gens = finite_generating_set(desc)
    assert set(gens) == {(0, 1), (2, 1), (3, 1), (2, 2), (3, 2)}
    assert verify_generation(desc, gens)


def test_verify_generation_examples():
    p = SubdirectDescription(TRIV, (ZSet.integers(),))
    assert verify_generation(p, [(1, 1), (-1, 1)])
    assert not verify_generation(p, [(1, 1)])   # negatives unreachable
    with pytest.raises(GeneratorsNotInP):
        p2 = SubdirectDescription(C2, (ZSet.line(2), ZSet.line(2, 1)))
        verify_generation(p2, [(1, 1)])


def test_closure_oracle_agreement_random(regular_corpus):
    window = 60
    for name, s, gens in random_subdirect_instances(regular_corpus, 60, seed=11, coord=6):
        r = structured_closure(s, gens)
        assert isinstance(r, SubdirectDescription), name
        assert is_subdirect(r)
        lo, hi = oracle_region(gens, window)
        oracle = windowed_closure(s, gens, window)
        got = {(a, x) for a, x in oracle if lo <= a <= hi}
        expected = {
            (a, x) for x in s.elements for a in r.fiber(x).window(lo, hi)
        }
        assert got == expected, name
        # soundness outside the completeness region too
        assert all(a in r.fiber(x) for a, x in oracle)


def test_fiber_shapes_random(regular_corpus):
    for name, s, gens in random_subdirect_instances(regular_corpus, 40, seed=23):
        r = structured_closure(s, gens)
        assert isinstance(r, SubdirectDescription)
        for x in s.elements:
            fs = fiber_structure(r, x)
            rebuilt = r.fiber(fs.idempotent).shift(fs.anchor) | ZSet.of(
                *fs.exceptional
            ) if fs.exceptional else r.fiber(fs.idempotent).shift(fs.anchor)
            assert rebuilt == r.fiber(x), (name, x)
            if fs.case in (ZERO, GROUP):
                assert fs.exceptional == ()
        gens_out = finite_generating_set(r)
        assert all(a in r.fiber(x) for a, x in gens_out)
        assert verify_generation(r, gens_out), name
