"""Randomized falsification of community-function axioms.

A check never proves an axiom; it reports the first counterexample found
within its trial budget, stored so that :func:`reverify` can replay it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .functions import MajorityRule, enumerate_cliques, is_clique, is_cliq_g, is_harmonious_lambda
from .generators import get_profile, hero_sidekick, planted_block, uniform_random
from .grow import clique_growing, grow_scomp
from .model import PreferenceNetwork, apply_permutation, restrict
from .oracles import DEFAULT_BUDGET, OracleBudget, brute_members, brute_strongly_group_stable, subsets
from .stability import in_scomp, is_sa_prime, is_strongly_group_stable

AXIOMS = ("A", "Mon", "Emb", "WC", "SA'", "SGS")


@dataclass(frozen=True)
class CommunityFunctionHandle:
    name: str
    membership: Callable[[PreferenceNetwork, frozenset], bool]
    enumerator: Optional[Callable[[PreferenceNetwork], Iterable]] = None

    def __call__(self, net: PreferenceNetwork, s: Iterable[int]) -> bool:
        return bool(self.membership(net, frozenset(s)))

    def members(self, net: PreferenceNetwork, budget: OracleBudget = DEFAULT_BUDGET) -> list[frozenset]:
        if self.enumerator is not None:
            return [frozenset(c) for c in self.enumerator(net)]
        return brute_members(net, self.membership, budget)


def intersect(fn1: CommunityFunctionHandle, fn2: CommunityFunctionHandle) -> CommunityFunctionHandle:
    def enum(net):
        second = {frozenset(c) for c in fn2.enumerator(net)}
        return [c for c in map(frozenset, fn1.enumerator(net)) if c in second]

    return CommunityFunctionHandle(
        f"({fn1.name} & {fn2.name})",
        lambda net, s: fn1(net, s) and fn2(net, s),
        enum if fn1.enumerator and fn2.enumerator else None,
    )


def union(fn1: CommunityFunctionHandle, fn2: CommunityFunctionHandle) -> CommunityFunctionHandle:
    def enum(net):
        return sorted({frozenset(c) for c in fn1.enumerator(net)} | {frozenset(c) for c in fn2.enumerator(net)}, key=sorted)

    return CommunityFunctionHandle(
        f"({fn1.name} | {fn2.name})",
        lambda net, s: fn1(net, s) or fn2(net, s),
        enum if fn1.enumerator and fn2.enumerator else None,
    )


@dataclass
class AxiomVerdict:
    axiom: str
    trials: int = 0
    counterexample: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def absorb(self, other: "AxiomVerdict") -> None:
        self.trials += other.trials
        if self.counterexample is None:
            self.counterexample = other.counterexample

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "trials": self.trials, "passed": self.passed, "counterexample": self.counterexample}


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _orders(net: PreferenceNetwork) -> list[list[int]]:
    return [list(p.order) for p in net.profile]


def _random_subset(n: int, rng: random.Random) -> frozenset:
    while True:
        s = frozenset(u for u in range(n) if rng.random() < 0.5)
        if s:
            return s


def _sample_sets(fn, net, trials, rng, budget) -> list[frozenset]:
    """Half members of ``fn(net)``, half uniform non-empty subsets."""
    members = fn.members(net, budget)
    picks = []
    for i in range(trials):
        if members and i % 2 == 0:
            picks.append(rng.choice(members))
        else:
            picks.append(_random_subset(net.n, rng))
    return picks


def check_anonymity(fn, net, trials=10, seed=None, budget=DEFAULT_BUDGET) -> AxiomVerdict:
    rng = _rng(seed)
    verdict = AxiomVerdict("A")
    for s in _sample_sets(fn, net, trials, rng, budget):
        sigma = list(range(net.n))
        rng.shuffle(sigma)
        verdict.trials += 1
        moved = frozenset(sigma[u] for u in s)
        if fn(net, s) != fn(apply_permutation(net, sigma), moved):
            verdict.counterexample = {"network": _orders(net), "set": sorted(s), "sigma": sigma}
            break
    return verdict


def monotone_perturb(net: PreferenceNetwork, s: Iterable[int], seed=None, swaps: Optional[int] = None) -> PreferenceNetwork:
    """Move members of ``s`` up past non-members in the orders of members of ``s``.

    Each swap exchanges a member with the non-member directly above it, so
    rankings among members never change and members only gain. The number of
    swaps is random unless given.
    """
    rng = _rng(seed)
    s = frozenset(s)
    orders = _orders(net)
    if swaps is None:
        swaps = rng.randint(0, 2 * net.n)
    voters = sorted(s)
    for _ in range(swaps):
        spots = [
            (w, i)
            for w in voters
            for i in range(1, net.n)
            if orders[w][i] in s and orders[w][i - 1] not in s
        ]
        if not spots:
            break
        w, i = rng.choice(spots)
        orders[w][i - 1], orders[w][i] = orders[w][i], orders[w][i - 1]
    return PreferenceNetwork.from_orders(orders)


def check_monotonicity(fn, net, trials=10, seed=None, budget=DEFAULT_BUDGET) -> AxiomVerdict:
    rng = _rng(seed)
    verdict = AxiomVerdict("Mon")
    members = fn.members(net, budget)
    if not members:
        return verdict
    for _ in range(trials):
        s = rng.choice(members)
        perturbed = monotone_perturb(net, s, rng)
        verdict.trials += 1
        if not fn(perturbed, s):
            verdict.counterexample = {"network": _orders(net), "set": sorted(s), "perturbed": _orders(perturbed)}
            break
    return verdict


def embedding_premise(net: PreferenceNetwork, keep: Iterable[int]) -> bool:
    """Whether restricting to ``keep`` preserves every member's ranks exactly.

    That holds iff every member of ``keep`` ranks ``keep`` on top, i.e. ``keep``
    is a clique.
    """
    keep = frozenset(keep)
    return bool(keep) and is_clique(net, keep)


def check_embedding(fn, net, keep, trials=None, seed=None) -> AxiomVerdict:
    """Compare membership inside ``keep`` before and after restricting to it.

    ``keep`` must satisfy :func:`embedding_premise`; otherwise the axiom says
    nothing and the verdict is vacuous. All subsets of ``keep`` are compared
    unless ``trials`` caps it, in which case they are sampled.
    """
    verdict = AxiomVerdict("Emb")
    keep = frozenset(keep)
    if not embedding_premise(net, keep):
        return verdict
    sub, old_ids = restrict(net, keep)
    new_id = {old: new for new, old in enumerate(old_ids)}
    total = 2 ** len(keep) - 1
    if trials is None or trials >= total:
        candidates = list(subsets(keep, 1))
    else:
        rng = _rng(seed)
        candidates = []
        for _ in range(trials):
            s = frozenset(u for u in keep if rng.random() < 0.5)
            candidates.append(s or frozenset([rng.choice(sorted(keep))]))
    for s in candidates:
        verdict.trials += 1
        if fn(net, s) != fn(sub, frozenset(new_id[u] for u in s)):
            verdict.counterexample = {"network": _orders(net), "set": sorted(s), "keep": sorted(keep)}
            break
    return verdict


def check_wc(fn, net) -> AxiomVerdict:
    verdict = AxiomVerdict("WC", trials=1)
    if not fn(net, net.population):
        verdict.counterexample = {"network": _orders(net), "set": list(range(net.n))}
    return verdict


def check_sa_prime(fn, net, budget=DEFAULT_BUDGET) -> AxiomVerdict:
    verdict = AxiomVerdict("SA'")
    for u in range(net.n):
        verdict.trials += 1
        if fn(net, {u}) and not is_sa_prime(net, {u}):
            verdict.counterexample = {"network": _orders(net), "set": [u]}
            break
    return verdict


def _sgs_reference(net, s, budget):
    if net.n <= budget.max_n:
        return brute_strongly_group_stable(net, s, budget)
    return is_strongly_group_stable(net, s).outcome


def check_sgs(fn, net, trials=10, seed=None, budget=DEFAULT_BUDGET) -> AxiomVerdict:
    """Members of ``fn(net)`` must be strongly group-stable (checked by the oracle when in budget)."""
    rng = _rng(seed)
    verdict = AxiomVerdict("SGS")
    members = fn.members(net, budget)
    picks = members if len(members) <= trials else rng.sample(members, trials)
    for s in picks:
        verdict.trials += 1
        if not _sgs_reference(net, s, budget):
            verdict.counterexample = {"network": _orders(net), "set": sorted(s)}
            break
    return verdict


def run_axioms(
    fn: CommunityFunctionHandle,
    corpus: Iterable[PreferenceNetwork],
    trials: int = 2,
    seed=0,
    axioms: Iterable[str] = AXIOMS,
    budget: OracleBudget = DEFAULT_BUDGET,
    stop_on_failure: bool = True,
) -> dict[str, AxiomVerdict]:
    """Run the selected checks on every network; verdicts aggregate trial counts."""
    rng = _rng(seed)
    axioms = tuple(axioms)
    verdicts = {a: AxiomVerdict(a) for a in axioms}
    for net in corpus:
        for a in axioms:
            verdict = verdicts[a]
            if stop_on_failure and not verdict.passed:
                continue
            if a == "A":
                verdict.absorb(check_anonymity(fn, net, trials, rng, budget))
            elif a == "Mon":
                verdict.absorb(check_monotonicity(fn, net, trials, rng, budget))
            elif a == "Emb":
                for keep in enumerate_cliques(net):
                    verdict.absorb(check_embedding(fn, net, keep))
                    if not verdict.passed:
                        break
            elif a == "WC":
                verdict.absorb(check_wc(fn, net))
            elif a == "SA'":
                verdict.absorb(check_sa_prime(fn, net, budget))
            elif a == "SGS":
                verdict.absorb(check_sgs(fn, net, trials, rng, budget))
            else:
                raise ValueError(f"unknown axiom {a!r}")
    return verdicts


def check_intersection_lemma(fn, corpus, trials=2, seed=0, budget=DEFAULT_BUDGET) -> AxiomVerdict:
    """All six checks on ``fn & C_scomp``; fails on the first counterexample."""
    combined = intersect(fn, SCOMP)
    verdict = AxiomVerdict("intersection")
    for v in run_axioms(combined, list(corpus), trials, seed, budget=budget).values():
        verdict.trials += v.trials
        if verdict.counterexample is None and v.counterexample is not None:
            verdict.counterexample = dict(v.counterexample, axiom=v.axiom)
    return verdict


def reverify(fn: CommunityFunctionHandle, verdict: AxiomVerdict) -> bool:
    """Replay a stored counterexample; True when it still shows a violation."""
    cx = verdict.counterexample
    if cx is None:
        return False
    axiom = cx.get("axiom", verdict.axiom)
    net = PreferenceNetwork.from_orders(cx["network"])
    s = frozenset(cx["set"])
    if axiom == "A":
        sigma = cx["sigma"]
        return fn(net, s) != fn(apply_permutation(net, sigma), {sigma[u] for u in s})
    if axiom == "Mon":
        perturbed = PreferenceNetwork.from_orders(cx["perturbed"])
        return fn(net, s) and not fn(perturbed, s)
    if axiom == "Emb":
        sub, old_ids = restrict(net, cx["keep"])
        new_id = {old: new for new, old in enumerate(old_ids)}
        return embedding_premise(net, cx["keep"]) and fn(net, s) != fn(sub, {new_id[u] for u in s})
    if axiom == "WC":
        return not fn(net, s)
    if axiom == "SA'":
        return fn(net, s) and not is_sa_prime(net, s)
    if axiom == "SGS":
        return fn(net, s) and not brute_strongly_group_stable(net, s)
    raise ValueError(f"unknown axiom {axiom!r}")


# built-in handles; enumerations are cached per network

@lru_cache(maxsize=512)
def _grown(net, rule):
    return clique_growing(net, rule).communities


@lru_cache(maxsize=512)
def _grown_stable(net, rule):
    return grow_scomp(net, rule)


def cliq_g_handle(g: Callable[[int], int], label: str) -> CommunityFunctionHandle:
    return CommunityFunctionHandle(f"cliq_g[{label}]", lambda net, s: is_cliq_g(net, s, g))


def harmonious_handle(lam: float) -> CommunityFunctionHandle:
    return CommunityFunctionHandle(f"harmonious[{lam}]", lambda net, s: is_harmonious_lambda(net, s, lam))


def grow_handle(rule: MajorityRule = MajorityRule.STRICT) -> CommunityFunctionHandle:
    return CommunityFunctionHandle(
        f"grow[{rule.value}]", lambda net, s: s in _grown(net, rule), lambda net: sorted(_grown(net, rule), key=sorted)
    )


def grow_scomp_handle(rule: MajorityRule = MajorityRule.STRICT) -> CommunityFunctionHandle:
    return CommunityFunctionHandle(
        f"grow_scomp[{rule.value}]",
        lambda net, s: s in _grown_stable(net, rule),
        lambda net: sorted(_grown_stable(net, rule), key=sorted),
    )


CLIQ = CommunityFunctionHandle("cliq", is_clique, enumerate_cliques)
SCOMP = CommunityFunctionHandle("scomp", in_scomp)
GROW_SCOMP = grow_scomp_handle()

CONSISTENT = {
    "cliq": CLIQ,
    "scomp": SCOMP,
    "grow_scomp": GROW_SCOMP,
    "cliq_g1_scomp": intersect(cliq_g_handle(lambda k: 1, "1"), SCOMP),
    "harmonious0.5_scomp": intersect(harmonious_handle(0.5), SCOMP),
}

# deliberately broken functions, each aimed at one axiom
PLANTED = {
    "planted_label": (CommunityFunctionHandle("planted_label", lambda net, s: 0 in s), "A"),
    "planted_outsider_top": (
        CommunityFunctionHandle("planted_outsider_top", lambda net, s: any(net.profile[w].first not in s for w in s)),
        "Mon",
    ),
    "planted_large": (CommunityFunctionHandle("planted_large", lambda net, s: 2 * len(s) >= net.n), "Emb"),
    "planted_proper": (CommunityFunctionHandle("planted_proper", lambda net, s: len(s) < net.n), "WC"),
    "planted_singletons": (
        CommunityFunctionHandle("planted_singletons", lambda net, s: len(s) == 1 or len(s) == net.n),
        "SA'",
    ),
    "planted_everything": (CommunityFunctionHandle("planted_everything", lambda net, s: True), "SGS"),
}


# networks on which an embedding counterexample was once found, kept so that
# every corpus run sees them; (orders, set, keep), 0-based
EMB_REGRESSIONS = {
    "scomp": (
        [[0, 1, 2, 3, 4], [1, 0, 2, 3, 4], [2, 3, 0, 1, 4], [3, 2, 0, 1, 4], [4, 0, 1, 2, 3]],
        [0, 1, 2],
        [0, 1, 2, 3],
    ),
    "grow_scomp[strict]": (
        [[1, 3, 6, 0, 5, 4, 2], [3, 0, 6, 1, 5, 2, 4], [1, 0, 6, 4, 3, 2, 5], [3, 1, 0, 5, 6, 2, 4],
         [1, 5, 3, 4, 0, 2, 6], [5, 3, 1, 6, 0, 4, 2], [5, 3, 6, 0, 1, 4, 2]],
        [0, 1, 3, 6],
        [0, 1, 3, 5, 6],
    ),
    "grow_scomp[weak]": (
        [[0, 2, 3, 6, 4, 1, 5], [2, 4, 5, 0, 1, 6, 3], [0, 3, 2, 4, 6, 1, 5], [6, 2, 3, 0, 4, 5, 1],
         [4, 0, 3, 2, 6, 5, 1], [2, 0, 3, 1, 4, 6, 5], [4, 3, 2, 0, 6, 5, 1]],
        [0, 2, 3, 6],
        [0, 2, 3, 4, 6],
    ),
}


def standard_corpus(
    seed: int = 0,
    sizes=(1, 2, 3, 4, 5),
    per_size: int = 200,
    extra_sizes=(6, 7),
    per_extra: int = 40,
    regressions: bool = True,
):
    """Sampled profiles for small populations plus structured instances.

    A quarter of each random batch has a planted top block so that the
    embedding check has non-trivial cliques to restrict to. With
    ``regressions`` the :data:`EMB_REGRESSIONS` networks are appended.
    """
    rng = random.Random(seed)
    corpus = []
    for n, count in [(n, per_size) for n in sizes] + [(n, per_extra) for n in extra_sizes]:
        for i in range(count):
            if i % 4 == 3 and n >= 2:
                corpus.append(planted_block(n, rng.randint(1, n - 1), rng.getrandbits(32)))
            else:
                corpus.append(uniform_random(n, rng.getrandbits(32)))
    top = max(tuple(sizes) + tuple(extra_sizes))
    corpus += [get_profile(n) for n in range(1, top + 1)]
    corpus += [hero_sidekick(m) for m in range(1, top // 2 + 1)]
    if regressions:
        corpus += [PreferenceNetwork.from_orders(orders) for orders, _, _ in EMB_REGRESSIONS.values()]
    return corpus
