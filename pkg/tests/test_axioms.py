import random

import pytest

from prefcomm import axioms
from prefcomm.axioms import (
    CLIQ,
    EMB_REGRESSIONS,
    GROW_SCOMP,
    SCOMP,
    AxiomVerdict,
    CommunityFunctionHandle,
    check_anonymity,
    check_embedding,
    check_intersection_lemma,
    check_monotonicity,
    check_sa_prime,
    check_sgs,
    check_wc,
    cliq_g_handle,
    grow_handle,
    grow_scomp_handle,
    harmonious_handle,
    intersect,
    monotone_perturb,
    reverify,
    run_axioms,
    union,
)
from prefcomm.functions import MajorityRule
from prefcomm.generators import planted_block, uniform_random
from prefcomm.model import PreferenceNetwork, apply_permutation, restrict
from prefcomm.oracles import brute_strongly_group_stable, subsets


def ids(*xs):
    return frozenset(x - 1 for x in xs)


def mixed(count, sizes, seed):
    rng = random.Random(seed)
    nets = []
    for i in range(count):
        n = rng.choice(list(sizes))
        if i % 3 == 0 and n >= 2:
            nets.append(planted_block(n, rng.randint(1, n - 1), rng.getrandbits(32)))
        else:
            nets.append(uniform_random(n, rng.getrandbits(32)))
    return nets


@pytest.fixture(scope="module")
def corpus():
    return mixed(150, range(2, 7), seed=30)


EVEN = CommunityFunctionHandle("even", lambda net, s: len(s) % 2 == 0)


def test_anonymity_examples(example1):
    assert check_anonymity(CLIQ, example1, trials=50, seed=0).passed
    label = axioms.PLANTED["planted_label"][0]
    verdict = check_anonymity(label, example1, trials=50, seed=0)
    assert not verdict.passed and reverify(label, verdict)
    identity = list(range(6))
    for s in subsets(range(6), 1):
        assert label(example1, s) == label(apply_permutation(example1, identity), s)


def test_monotone_perturb_examples(example1):
    assert monotone_perturb(example1, ids(4, 5, 6), seed=0, swaps=0) == example1
    for seed in range(20):
        assert monotone_perturb(example1, ids(1, 2, 3), seed=seed) == example1


def test_monotone_perturb_satisfies_premise():
    rng = random.Random(31)
    for net in mixed(200, range(2, 8), seed=32):
        s = frozenset(u for u in range(net.n) if rng.random() < 0.5) or {0}
        after = monotone_perturb(net, s, rng)
        for w in range(net.n):
            before_rank, after_rank = net.profile[w].rank, after.profile[w].rank
            if w not in s:
                assert before_rank == after_rank
                continue
            for u in s:
                for v in range(net.n):
                    if before_rank[u] < before_rank[v]:
                        assert after_rank[u] < after_rank[v]


def test_monotonicity_examples(corpus):
    for fn in (SCOMP, GROW_SCOMP):
        verdict = AxiomVerdict("Mon")
        for net in corpus:
            verdict.absorb(check_monotonicity(fn, net, trials=3, seed=net.n))
        assert verdict.passed and verdict.trials > 0
    assert check_monotonicity(EVEN, uniform_random(4, 1), trials=5, seed=0).passed
    bad = axioms.PLANTED["planted_outsider_top"][0]
    verdict = AxiomVerdict("Mon")
    for net in corpus:
        verdict.absorb(check_monotonicity(bad, net, trials=3, seed=0))
    assert not verdict.passed and reverify(bad, verdict)


def test_embedding_examples(example1, corpus):
    verdict = check_embedding(CLIQ, example1, ids(1, 2, 3))
    assert verdict.passed and verdict.trials == 7
    assert check_embedding(SCOMP, example1, range(6)).passed
    # a keep that is not a clique does not meet the premise
    assert check_embedding(CLIQ, example1, ids(1, 4)).trials == 0
    for rule in MajorityRule:
        fn = grow_handle(rule)
        for net in corpus:
            verdicts = run_axioms(fn, [net], axioms=["Emb"])
            assert verdicts["Emb"].passed


def test_embedding_counterexample_for_scomp():
    # a, b, c, d keep each other on top; e ranks a first
    net = PreferenceNetwork.from_orders(
        [[0, 1, 2, 3, 4], [1, 0, 2, 3, 4], [2, 3, 0, 1, 4], [3, 2, 0, 1, 4], [4, 0, 1, 2, 3]]
    )
    keep = {0, 1, 2, 3}
    assert axioms.embedding_premise(net, keep)
    sub, old = restrict(net, keep)
    assert SCOMP(net, {0, 1, 2}) and not SCOMP(sub, {0, 1, 2})
    assert brute_strongly_group_stable(net, {0, 1, 2}) and not brute_strongly_group_stable(sub, {0, 1, 2})
    verdict = check_embedding(SCOMP, net, keep)
    assert not verdict.passed and reverify(SCOMP, verdict)


@pytest.mark.parametrize("name", sorted(EMB_REGRESSIONS))
def test_embedding_regressions(name):
    handles = {
        "scomp": SCOMP,
        "grow_scomp[strict]": grow_scomp_handle(MajorityRule.STRICT),
        "grow_scomp[weak]": grow_scomp_handle(MajorityRule.WEAK),
    }
    orders, s, keep = EMB_REGRESSIONS[name]
    net = PreferenceNetwork.from_orders(orders)
    verdict = check_embedding(handles[name], net, keep)
    assert not verdict.passed
    assert reverify(handles[name], AxiomVerdict("Emb", 1, {"network": orders, "set": s, "keep": keep}))
    sub, old = restrict(net, keep)
    inner = {old.index(u) for u in s}
    assert brute_strongly_group_stable(net, s) and not brute_strongly_group_stable(sub, inner)


def test_wc_examples(corpus):
    proper = axioms.PLANTED["planted_proper"][0]
    for net in corpus:
        assert check_wc(CLIQ, net).passed
        assert check_wc(SCOMP, net).passed
        assert not check_wc(proper, net).passed
    assert check_wc(SCOMP, PreferenceNetwork.from_orders([[0]])).passed


def test_sa_prime_and_sgs_checks(corpus):
    singles = axioms.PLANTED["planted_singletons"][0]
    everything = axioms.PLANTED["planted_everything"][0]
    assert any(not check_sa_prime(singles, net).passed for net in corpus)
    assert any(not check_sgs(everything, net, trials=5, seed=0).passed for net in corpus)
    for net in corpus[:40]:
        assert check_sa_prime(GROW_SCOMP, net).passed
        assert check_sgs(SCOMP, net, trials=5, seed=0).passed


def test_lattice_identities(corpus):
    for net in corpus[:60]:
        for s in subsets(range(net.n), 1):
            assert intersect(GROW_SCOMP, GROW_SCOMP)(net, s) == GROW_SCOMP(net, s)
            assert intersect(CLIQ, SCOMP)(net, s) == CLIQ(net, s)
            assert union(CLIQ, GROW_SCOMP)(net, s) == GROW_SCOMP(net, s)
        assert sorted(map(sorted, union(CLIQ, GROW_SCOMP).members(net))) == sorted(
            map(sorted, GROW_SCOMP.members(net))
        )


def test_enumerators_agree_with_membership(corpus):
    handles = [CLIQ, GROW_SCOMP, grow_handle(MajorityRule.WEAK), intersect(CLIQ, GROW_SCOMP)]
    for net in corpus[:60]:
        for fn in handles:
            listed = set(fn.members(net))
            for s in subsets(range(net.n), 1):
                assert (s in listed) == fn(net, s)


def test_intersection_lemma_counterexamples():
    net = PreferenceNetwork.from_orders(EMB_REGRESSIONS["scomp"][0])
    corpus = mixed(200, range(3, 6), seed=33) + [net]
    for fn in (harmonious_handle(0.5), cliq_g_handle(lambda k: 1, "1")):
        verdict = check_intersection_lemma(fn, corpus)
        assert verdict.counterexample is not None
        assert verdict.counterexample["axiom"] == "Emb"
        assert reverify(intersect(fn, SCOMP), verdict)
    assert check_intersection_lemma(CLIQ, corpus[:50]).passed


def test_reverify_soundness():
    net = uniform_random(4, 0)
    assert not reverify(CLIQ, AxiomVerdict("WC"))
    # a stored violation that is not a violation does not replay
    assert not reverify(CLIQ, AxiomVerdict("WC", 1, {"network": [list(p.order) for p in net.profile], "set": [0, 1, 2, 3]}))
    with pytest.raises(ValueError):
        reverify(CLIQ, AxiomVerdict("XYZ", 1, {"network": [[0]], "set": [0]}))


def test_run_axioms_rejects_unknown():
    with pytest.raises(ValueError):
        run_axioms(CLIQ, [uniform_random(2, 0)], axioms=["nope"])


def test_standard_corpus_shape():
    corpus = axioms.standard_corpus()
    assert len(corpus) >= 1000
    assert {net.n for net in corpus} == set(range(1, 8))
    assert axioms.standard_corpus() == corpus
    assert len(axioms.standard_corpus(regressions=False)) == len(corpus) - len(EMB_REGRESSIONS)
