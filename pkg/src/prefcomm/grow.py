"""Growing cliques into larger communities one individual at a time."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .functions import MajorityRule, enumerate_cliques, is_harmon
from .model import PreferenceNetwork, canonical
from .stability import in_scomp


@dataclass
class GrowResult:
    """Communities reached by clique growing.

    ``provenance`` maps each community to ``(clique, chain)``: the clique it
    was first reached from and the individuals added, in order.
    ``max_extensions`` is the largest number of accepted extensions seen for
    a single processed set.
    """

    communities: frozenset
    provenance: dict = field(repr=False)
    max_extensions: int = 0

    def canonical(self) -> list[tuple[int, ...]]:
        return canonical(self.communities)


def _majority_candidates(net: PreferenceNetwork, s: frozenset, rule: MajorityRule) -> list[int]:
    """Outsiders ``u`` that a majority of ``s`` prefers to every other outsider.

    Necessary for ``s | {u}`` to be harmonious, and cheap to compute for all
    ``u`` at once.
    """
    out = [v for v in range(net.n) if v not in s]
    if len(out) == 1:
        return out
    R = net.rank_matrix[np.ix_(sorted(s), out)]
    beats = (R[:, :, None] < R[:, None, :]).sum(axis=0)
    ok = rule.accepts(beats, len(s))
    np.fill_diagonal(ok, True)
    return [out[i] for i in np.flatnonzero(ok.all(axis=1))]


class ExtensionNotUnique(AssertionError):
    """More than one outsider extended the same set under strict majority."""


def clique_growing(
    net: PreferenceNetwork,
    rule: MajorityRule = MajorityRule.STRICT,
    lifo: bool = False,
    debug: bool = False,
) -> GrowResult:
    """Worklist fixed point seeded with all cliques.

    A processed set ``S`` spawns ``S | {u}`` for each outsider ``u`` whose
    addition is harmonious under ``rule``. Sets are deduplicated, so each is
    processed once. Under strict majority at most one ``u`` can succeed and
    the scan stops at the first; ``debug`` scans every ``u`` and raises
    :class:`ExtensionNotUnique` if the strict bound is broken.
    """
    seeds = [frozenset(c) for c in enumerate_cliques(net)]
    provenance = {c: (c, ()) for c in seeds}
    work = deque(seeds)
    done = set()
    stop_early = rule is MajorityRule.STRICT and not debug
    widest = 0
    while work:
        s = work.pop() if lifo else work.popleft()
        if s in done:
            continue
        done.add(s)
        if len(s) == net.n:
            continue
        accepted = 0
        for u in _majority_candidates(net, s, rule):
            grown = s | {u}
            if not is_harmon(net, grown, rule):
                continue
            accepted += 1
            if grown not in provenance:
                clique, chain = provenance[s]
                provenance[grown] = (clique, chain + (u,))
                work.append(grown)
            if stop_early:
                break
        widest = max(widest, accepted)
        if debug and rule is MajorityRule.STRICT and accepted > 1:
            raise ExtensionNotUnique(f"{sorted(s)} extended by {accepted} outsiders")
    return GrowResult(frozenset(done), provenance, widest)


def grow_scomp(net: PreferenceNetwork, rule: MajorityRule = MajorityRule.STRICT) -> frozenset:
    """Grown communities that are also strongly group-stable and pass SA'."""
    return frozenset(s for s in clique_growing(net, rule).communities if in_scomp(net, s))


@lru_cache(maxsize=64)
def _support(net: PreferenceNetwork, rule: MajorityRule) -> tuple:
    return tuple(canonical(grow_scomp(net, rule)))


def enumerate_communities(net: PreferenceNetwork, rule: MajorityRule = MajorityRule.STRICT) -> list[tuple[int, ...]]:
    return list(_support(net, rule))


def sample_uniform(net: PreferenceNetwork, rule: MajorityRule = MajorityRule.STRICT, seed=None) -> tuple[int, ...]:
    """One community drawn uniformly from :func:`enumerate_communities`.

    ``seed`` may be a ``random.Random``, which is then advanced in place.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return rng.choice(_support(net, rule))
