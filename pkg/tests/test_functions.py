import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prefcomm.functions import (
    MajorityRule,
    cliq_g_family,
    enumerate_cliques,
    is_clique,
    is_cliq_g,
    is_harmon,
    is_harmonious_lambda,
)
from prefcomm.generators import get_profile, hero_sidekick, planted_block, uniform_random
from prefcomm.model import DomainError, PreferenceNetwork
from prefcomm.oracles import brute_cliques, subsets


def ids(*xs):
    return {x - 1 for x in xs}


@st.composite
def networks(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return PreferenceNetwork.from_orders([draw(st.permutations(range(n))) for _ in range(n)])


def loop_harmon(net, s, strict=True):
    """Direct transcription of the majority condition, no arrays."""
    s = set(s)
    m = len(s) - 1
    for u in s:
        for v in set(range(net.n)) - s:
            count = sum(1 for w in s - {u} if net.profile[w].rank[u] < net.profile[w].rank[v])
            if not (2 * count > m if strict else 2 * count >= m):
                return False
    return True


def loop_harmonious(net, s, lam):
    s = set(s)
    for u in s:
        for v in set(range(net.n)) - s:
            if sum(1 for w in s if net.profile[w].rank[u] < net.profile[w].rank[v]) < lam * len(s):
                return False
    return True


def mixed_networks(count, max_n, seed):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        if i % 3 == 0 and n >= 2:
            out.append(planted_block(n, rng.randint(1, n - 1), rng.getrandbits(32)))
        else:
            out.append(uniform_random(n, rng.getrandbits(32)))
    return out


def test_is_clique_examples(example1):
    assert is_clique(example1, ids(1, 2, 3))
    assert not is_clique(example1, ids(2, 5))
    assert is_clique(example1, range(6))
    with pytest.raises(DomainError):
        is_clique(example1, set())


def test_enumerate_cliques_example1(example1):
    # π1 = [1 2 3 4 5 6] makes {1} and {1,2} cliques as well
    found = [tuple(u + 1 for u in c) for c in enumerate_cliques(example1)]
    assert found == [(1,), (4,), (1, 2), (4, 5), (1, 2, 3), (4, 5, 6), (1, 2, 3, 4, 5, 6)]
    assert enumerate_cliques(example1) == brute_cliques(example1)


def test_enumerate_cliques_small_cases():
    assert enumerate_cliques(PreferenceNetwork.from_orders([[0]])) == [(0,)]
    net = hero_sidekick(2)
    assert enumerate_cliques(net) == brute_cliques(net)
    assert (0, 1, 2, 3) in enumerate_cliques(net)


def test_enumerate_cliques_matches_subset_scan():
    for net in mixed_networks(400, 7, seed=3):
        assert enumerate_cliques(net) == brute_cliques(net)


def test_clique_count_and_laminarity():
    nets = mixed_networks(300, 40, seed=4) + [get_profile(n) for n in range(1, 40)]
    for net in nets:
        cliques = [frozenset(c) for c in enumerate_cliques(net)]
        assert len(cliques) <= 2 * net.n - 1
        for a, b in itertools.combinations(cliques, 2):
            assert a <= b or b <= a or not a & b


def test_cliq_g_examples(example1):
    assert not is_cliq_g(example1, ids(1, 2, 3, 4), lambda k: 1)
    assert is_cliq_g(example1, ids(1, 2, 3), lambda k: 2)
    with pytest.raises(DomainError):
        is_cliq_g(example1, set(), lambda k: 0)


@settings(max_examples=200, deadline=None)
@given(networks(), st.data())
def test_cliq_g_zero_is_clique(net, data):
    s = data.draw(st.sets(st.integers(0, net.n - 1), min_size=1))
    assert is_cliq_g(net, s, lambda k: 0) == is_clique(net, s)


def test_cliq_g_family_parsing():
    assert cliq_g_family("3")(10) == 3
    assert cliq_g_family("const:2")(7) == 2
    assert cliq_g_family("linear:0.5")(7) == 3
    for bad in ("", "linear:x", "-1", "cubic:2"):
        with pytest.raises(DomainError):
            cliq_g_family(bad)


def test_harmonious_examples(example1):
    assert is_harmonious_lambda(example1, ids(1, 2, 3), 1.0)
    assert not is_harmonious_lambda(example1, ids(1, 2, 3, 4), 1.0)
    assert is_harmonious_lambda(example1, ids(2, 5), 0.0)
    for lam in (-0.1, 1.5):
        with pytest.raises(DomainError):
            is_harmonious_lambda(example1, ids(1), lam)


@settings(max_examples=200, deadline=None)
@given(networks(min_n=2), st.data())
def test_harmonious_monotone_in_lambda(net, data):
    s = data.draw(st.sets(st.integers(0, net.n - 1), min_size=1))
    lo = data.draw(st.floats(0, 1))
    hi = data.draw(st.floats(lo, 1))
    if is_harmonious_lambda(net, s, hi):
        assert is_harmonious_lambda(net, s, lo)
    assert is_harmonious_lambda(net, s, lo) == loop_harmonious(net, s, lo)


def test_harmon_examples(example1):
    assert is_harmon(example1, ids(1, 2, 3, 4))
    assert not is_harmon(example1, ids(1, 2, 3, 5))
    for rule in MajorityRule:
        assert is_harmon(example1, range(6), rule)
    # singletons: zero comparisons fail strict and pass weak
    assert not is_harmon(example1, ids(1), MajorityRule.STRICT)
    assert is_harmon(example1, ids(1), MajorityRule.WEAK)


def test_majority_rule_thresholds():
    assert MajorityRule.STRICT.accepts(2, 3) and not MajorityRule.STRICT.accepts(1, 2)
    assert MajorityRule.WEAK.accepts(1, 2) and not MajorityRule.WEAK.accepts(0, 1)


@settings(max_examples=300, deadline=None)
@given(networks(), st.data(), st.sampled_from(list(MajorityRule)))
def test_harmon_matches_loop(net, data, rule):
    s = data.draw(st.sets(st.integers(0, net.n - 1), min_size=1))
    assert is_harmon(net, s, rule) == loop_harmon(net, s, rule is MajorityRule.STRICT)


def test_cliques_are_harmon():
    for net in mixed_networks(300, 10, seed=5):
        for c in enumerate_cliques(net):
            if len(c) >= 2:
                assert is_harmon(net, c, MajorityRule.STRICT)


def test_all_subsets_agree_with_loop(example1):
    for s in subsets(range(6), 1):
        for rule in MajorityRule:
            assert is_harmon(example1, s, rule) == loop_harmon(example1, s, rule is MajorityRule.STRICT)
