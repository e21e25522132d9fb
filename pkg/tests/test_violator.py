import random

import pytest

from gbsample.violator import (BrokenSpace, IntervalSpace, MaxSpace, MultiplicityMap,
                               RoundCapExceeded, _weighted_sample, basis2, brute_force_basis,
                               check_axioms, clarkson1, violator_set)


def test_violates_counts_and_checks_membership():
    space = MaxSpace([3, 1, 4, 1, 5])
    assert space.violates(4, {0, 2})
    assert not space.violates(1, {0})
    assert space.queries == 2
    with pytest.raises(ValueError):
        space.violates(0, {0})
    assert space.primitive(0, {0}) is False
    assert space.queries == 2


def test_violator_set_is_sorted():
    space = IntervalSpace([5, 0, 9, 3, 7, -2])
    assert violator_set(space, range(6), [0, 3]) == [1, 2, 4, 5]


def test_brute_force_finds_smallest_basis():
    space = IntervalSpace([5, 0, 9, 3, 7, -2])
    assert brute_force_basis(space, range(6)) == [2, 5]
    assert brute_force_basis(MaxSpace([2, 8, 8, 1]), range(4)) == [1]
    assert brute_force_basis(MaxSpace([1]), []) == []


def test_multiplicities_and_weighted_sampling():
    m = MultiplicityMap(range(4))
    assert m.total() == 4
    m.double([1, 2])
    m.double([2])
    assert m == {0: 1, 1: 2, 2: 4, 3: 1}
    assert m.total([1, 2]) == 6
    rng = random.Random(0)
    draws = _weighted_sample(rng, range(4), m, 3)
    assert len(set(draws)) == 3
    # the heavy element is drawn far more often than a light one
    hits = [0] * 4
    for _ in range(2000):
        hits[_weighted_sample(rng, range(4), m, 1)[0]] += 1
    assert hits[2] > 3 * hits[0]
    assert _weighted_sample(rng, range(2), m, 5) in ([0, 1], [1, 0])


@pytest.mark.parametrize("delta", [1, 2, 3])
def test_basis2_on_interval_space(delta):
    rng = random.Random(delta)
    values = [rng.uniform(-100, 100) for _ in range(400)]
    space = IntervalSpace(values)
    res = basis2(space, range(400), max(delta, 2), rng=rng)
    assert sorted(values[i] for i in res.basis) == [min(values), max(values)]
    assert res.primitive_queries == space.queries
    assert res.to_json()["basis_size"] == 2


def test_basis2_trace_shows_doubling():
    rng = random.Random(3)
    space = MaxSpace(list(range(300)))
    trace = []
    res = basis2(space, range(300), 1, rng=rng, trace=trace)
    assert res.basis == [299]
    assert len(trace) == res.rounds
    assert trace[-1][2] == 0
    totals = [t[0] for t in trace]
    assert totals == sorted(totals)


def test_clarkson1_matches_brute_force_on_toy_spaces():
    rng = random.Random(7)
    for trial in range(30):
        n = rng.randint(1, 60)
        values = [rng.randint(-20, 20) for _ in range(n)]
        for space in (MaxSpace(values), IntervalSpace(values)):
            res = clarkson1(space, delta=2, rng=rng)
            ref = brute_force_basis(space, range(n))
            every = range(n)
            assert violator_set(space, every, res.basis) == violator_set(space, every, ref) == []
            assert len(res.basis) == len(ref)


def test_clarkson1_is_seed_deterministic():
    values = list(range(1000))
    random.Random(1).shuffle(values)
    a = clarkson1(IntervalSpace(values), delta=2, seed=42)
    b = clarkson1(IntervalSpace(values), delta=2, seed=42)
    assert a == b
    assert a.seed == 42
    assert a.rounds >= 1


def test_round_cap_is_enforced():
    class Stubborn(MaxSpace):
        # never satisfied: every element outside S violates it
        def primitive(self, h, S):
            return h not in S

        def small_basis(self, G):
            return sorted(G)[:1]

    space = Stubborn(list(range(100)))
    with pytest.raises(RoundCapExceeded):
        basis2(space, range(100), 1, rng=random.Random(0), round_cap=5)
    with pytest.raises(RoundCapExceeded):
        clarkson1(space, delta=1, rng=random.Random(0), round_cap=3)


def test_bad_delta():
    with pytest.raises(ValueError):
        clarkson1(MaxSpace([1, 2]), delta=0)
    with pytest.raises(ValueError):
        basis2(MaxSpace([1, 2]), [0, 1], 0)


def test_axioms_hold_for_toy_spaces_and_fail_for_broken():
    rng = random.Random(0)
    assert check_axioms(MaxSpace([rng.random() for _ in range(15)]), 300, rng)
    assert check_axioms(IntervalSpace([rng.random() for _ in range(15)]), 300, rng)
    report = check_axioms(BrokenSpace(list(range(10))), 100, rng)
    assert not report.passed
    assert report.failure == "consistency"
