"""Exhaustive reference implementations of the definitions.

Nothing here reuses the fast paths: group preference is decided by searching
bijections, and sets are enumerated outright. Every oracle refuses inputs
beyond its :class:`OracleBudget` instead of running unbounded.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .functions import enumerate_cliques
from .model import DomainError, PreferenceNetwork, TotalOrder, group_prefers
from .stability import is_strongly_group_stable


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 8
    max_subsets: int = 2_000_000
    max_group: int = 8

    def check_n(self, n: int) -> None:
        if n > self.max_n:
            raise BudgetExceeded(f"population {n} exceeds oracle budget of {self.max_n}")

    def check_count(self, count: int, what: str) -> None:
        if count > self.max_subsets:
            raise BudgetExceeded(f"{what}: {count} candidates exceed oracle budget of {self.max_subsets}")


DEFAULT_BUDGET = OracleBudget()


def subsets(items: Iterable[int], min_size: int = 0, max_size: Optional[int] = None) -> Iterator[frozenset]:
    items = sorted(items)
    top = len(items) if max_size is None else min(max_size, len(items))
    for k in range(min_size, top + 1):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)


def brute_group_prefers(
    order: TotalOrder, gp: Iterable[int], g: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET, paranoid: bool = False
) -> bool:
    """Search every bijection ``gp -> g`` for one where each ``gp`` member wins.

    Unless ``paranoid``, a quick necessary condition rules out hopeless cases
    first: the best member of ``g`` needs some member of ``gp`` above it.
    """
    gp, g = sorted(set(gp)), sorted(set(g))
    if not gp or len(gp) != len(g) or set(gp) & set(g):
        raise DomainError("group preference compares non-empty disjoint equal-sized sets")
    if len(g) > budget.max_group:
        raise BudgetExceeded(f"{len(g)}! alignments exceed oracle budget")
    rank = order.rank
    if not paranoid and min(rank[x] for x in gp) > min(rank[y] for y in g):
        return False
    for perm in itertools.permutations(g):
        if all(rank[a] < rank[b] for a, b in zip(gp, perm)):
            return True
    return False


def _top(order: TotalOrder, s: Iterable[int], k: int) -> list[int]:
    return [u for u in order.order if u in s][:k]


def brute_weak_prefers(order: TotalOrder, a: frozenset, b: frozenset, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    k = min(len(a), len(b))
    if k == 0:
        return False
    return brute_group_prefers(order, _top(order, a, k), _top(order, b, k), budget)


def brute_self_approving(net: PreferenceNetwork, s: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """No equal-sized outside set is group-preferred to ``s`` by every member."""
    budget.check_n(net.n)
    s = frozenset(s)
    out = net.population - s
    if len(out) < len(s):
        return True
    budget.check_count(math.comb(len(out), len(s)), "self-approval")
    for other in itertools.combinations(sorted(out), len(s)):
        if all(brute_group_prefers(net.profile[w], other, s, budget) for w in s):
            return False
    return True


def brute_group_stable(net: PreferenceNetwork, s: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """No proper part ``G`` of ``s`` has an equal-sized outside replacement every remaining member group-prefers."""
    budget.check_n(net.n)
    s = frozenset(s)
    out = net.population - s
    budget.check_count(2 ** len(s) * 2 ** len(out), "group stability")
    for group in subsets(s, 1, len(s) - 1):
        rest = s - group
        for other in itertools.combinations(sorted(out), len(group)):
            if all(brute_group_prefers(net.profile[w], other, group, budget) for w in rest):
                return False
    return True


def brute_strongly_group_stable(net: PreferenceNetwork, s: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Every non-empty proper ``G`` keeps some member of ``s - G`` not weakly preferring the outsiders to it."""
    budget.check_n(net.n)
    s = frozenset(s)
    out = net.population - s
    budget.check_count(2 ** len(s), "strong group stability")
    for group in subsets(s, 1, len(s) - 1):
        if all(brute_weak_prefers(net.profile[w], out, group, budget) for w in s - group):
            return False
    return True


def brute_cliques(net: PreferenceNetwork, budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Full subset scan of the clique definition; the empty set is not a community."""
    budget.check_n(net.n)
    budget.check_count(2 ** net.n, "clique scan")
    found = []
    for s in subsets(range(net.n), 1):
        out = net.population - s
        if all(net.profile[u].rank[v] < net.profile[u].rank[w] for u in s for v in s for w in out):
            found.append(tuple(sorted(s)))
    return sorted(found, key=lambda c: (len(c), c))


def brute_members(
    net: PreferenceNetwork, membership: Callable[[PreferenceNetwork, frozenset], bool], budget: OracleBudget = DEFAULT_BUDGET
) -> list[frozenset]:
    """All non-empty sets accepted by ``membership``."""
    budget.check_n(net.n)
    return [s for s in subsets(range(net.n), 1) if membership(net, s)]


@dataclass
class OracleReport:
    """Agreement between a fast decision and its oracle over a set of instances."""

    name: str
    cases: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def record(self, agree: bool, data) -> None:
        self.cases += 1
        if not agree:
            self.disagreements.append(data)

    def to_dict(self) -> dict:
        return {"name": self.name, "cases": self.cases, "disagreements": len(self.disagreements), "ok": self.ok}


def compare_group_prefers(cases: int, max_size: int = 6, seed=0, budget: OracleBudget = DEFAULT_BUDGET) -> OracleReport:
    """Random orders and random disjoint equal-sized pairs."""
    rng = random.Random(seed)
    report = OracleReport("group_prefers")
    for _ in range(cases):
        k = rng.randint(1, max_size)
        n = rng.randint(2 * k, 2 * k + 3)
        order = list(range(n))
        rng.shuffle(order)
        pi = TotalOrder(tuple(order))
        picked = rng.sample(range(n), 2 * k)
        gp, g = picked[:k], picked[k:]
        fast = group_prefers(pi, gp, g)
        slow = brute_group_prefers(pi, gp, g, budget, paranoid=rng.random() < 0.5)
        report.record(fast == slow, (pi.order, tuple(gp), tuple(g)))
    return report


def compare_sgs(networks: Iterable[PreferenceNetwork], budget: OracleBudget = DEFAULT_BUDGET) -> OracleReport:
    """Fast strong group stability against the oracle on every non-empty subset."""
    report = OracleReport("strongly_group_stable")
    for net in networks:
        budget.check_n(net.n)
        for s in subsets(range(net.n), 1):
            fast = is_strongly_group_stable(net, s).outcome
            slow = brute_strongly_group_stable(net, s, budget)
            report.record(fast == slow, (net.to_one_based(), sorted(s)))
    return report


def compare_cliques(networks: Iterable[PreferenceNetwork], budget: OracleBudget = DEFAULT_BUDGET) -> OracleReport:
    report = OracleReport("cliques")
    for net in networks:
        report.record(enumerate_cliques(net) == brute_cliques(net, budget), net.to_one_based())
    return report


def check_implications(networks: Iterable[PreferenceNetwork], budget: OracleBudget = DEFAULT_BUDGET) -> OracleReport:
    """Strongly group-stable implies group-stable; group-stable with two or more members implies self-approving."""
    report = OracleReport("stability_implications")
    for net in networks:
        for s in subsets(range(net.n), 1):
            gs = brute_group_stable(net, s, budget)
            if is_strongly_group_stable(net, s).outcome:
                report.record(gs, ("sgs=>gs", net.to_one_based(), sorted(s)))
            if gs and len(s) >= 2:
                report.record(brute_self_approving(net, s, budget), ("gs=>sa", net.to_one_based(), sorted(s)))
    return report
