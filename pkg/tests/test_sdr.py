import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bergeturan import HallViolator, find_sdr, verify_sdr_lemma
from bergeturan.sdr import has_sdr
from oracles import brute_sdr_exists


def triple(*vs):
    return frozenset(vs)


def test_singletons():
    assert find_sdr([{1}, {2}, {3}]) == (1, 2, 3)


def test_empty_set_violates_hall():
    result = find_sdr([set(), {1, 2}])
    assert result == HallViolator((0,), 0)


def test_lemma_equality_family():
    # x = "x", U = u1..u5; A_1 empty, A_i = triples {x, u_i, u_k} with k != 1, i
    sets = [set()] + [{triple("x", f"u{i}", f"u{k}") for k in range(2, 6) if k != i} for i in range(2, 6)]
    result = find_sdr(sets)
    assert isinstance(result, HallViolator)
    assert len(set().union(*sets)) == 6


def test_sdr_is_distinct_and_valid():
    sets = [["a", "b"], ["a"], ["b", "c"]]
    # forced: A_2 = {a} takes a, so A_1 takes b and A_3 takes c
    assert find_sdr(sets) == ("b", "a", "c")


def test_violator_needs_strict_inequality():
    with pytest.raises(ValueError):
        HallViolator((0, 1), 2)


@given(st.lists(st.sets(st.integers(0, 6), max_size=4), min_size=1, max_size=6))
def test_agrees_with_brute_force(family):
    result = find_sdr(family)
    if isinstance(result, HallViolator):
        assert not brute_sdr_exists(family)
        union = set().union(*(family[i] for i in result.index_set))
        assert len(union) == result.union_size < len(result.index_set)
    else:
        assert brute_sdr_exists(family)
        assert len(set(result)) == len(family)
        assert all(a in s for a, s in zip(result, family))


def test_violator_json():
    assert HallViolator((0, 2), 1).to_json() == {"indices": [0, 2], "union_size": 1}


class TestLemmaLinkShape:
    """Families induced by one set S of triples: A_i = triples of S through u_i."""

    def test_m5(self):
        report = verify_sdr_lemma(5, "link")
        assert report.holds
        assert report.families_checked == 2**10
        assert report.max_union == 6
        assert report.bound_violations == 0
        # S = all triples avoiding one u_z, one family per z
        assert report.equality_families == 5
        assert report.characterized_families == 5
        assert report.characterization_mismatches == 0
        # no SDR <=> the graph of pairs in S has a component with fewer edges than vertices
        assert report.no_sdr_families == 421

    def test_no_sdr_count_by_direct_enumeration(self):
        pairs = list(combinations(range(5), 2))
        no_sdr = 0
        for mask in range(1 << 10):
            chosen = [p for b, p in enumerate(pairs) if mask >> b & 1]
            family = [[p for p in chosen if i in p] for i in range(5)]
            no_sdr += not brute_sdr_exists(family)
        assert no_sdr == 421

    def test_m6(self):
        report = verify_sdr_lemma(6, "link")
        assert report.holds
        assert report.max_union == 10
        assert report.equality_families == 6

    def test_small_m_rejected(self):
        with pytest.raises(ValueError):
            verify_sdr_lemma(4)


def test_lemma_free_shape_counterexample_is_real():
    # A_1 empty, every other A_i holds all four triples through u_i: no SDR, union of 10
    u = [f"u{i}" for i in range(1, 6)]
    sets = [set()] + [{triple("x", u[i], u[k]) for k in range(5) if k != i} for i in range(1, 5)]
    assert not has_sdr(sets)
    assert len(set().union(*sets)) == 10


def test_has_sdr_matches_hall_on_random_families():
    rnd = random.Random(11)
    for _ in range(200):
        family = [set(rnd.sample(range(6), rnd.randint(0, 3))) for _ in range(rnd.randint(1, 6))]
        assert has_sdr(family) == brute_sdr_exists(family)
