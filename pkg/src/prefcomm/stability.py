"""Strong group stability, degenerate self-approval and their conjunction."""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .model import DomainError, PreferenceNetwork, as_set, weak_prefers


@dataclass(frozen=True)
class SgsTrace:
    """Outcome of the strong group stability decision.

    On failure ``witness`` is ``(seed, frozen)``: growing from ``seed`` stalled
    at ``frozen``, and every member of ``s - frozen`` weakly prefers the
    outsiders to ``frozen``.
    """

    outcome: bool
    witness: Optional[tuple[int, frozenset]] = None

    def __bool__(self):
        return self.outcome


def _nonempty(net: PreferenceNetwork, s: Iterable[int]) -> frozenset:
    s = as_set(s, net.n)
    if not s:
        raise DomainError("stability is defined for non-empty sets")
    return s


def is_strongly_group_stable(
    net: PreferenceNetwork, s: Iterable[int], rng: Optional[random.Random] = None
) -> SgsTrace:
    """Decide strong group stability of ``s`` in ``O(|s|**4)``.

    From each seed ``u`` the frozen set ``U = {u}`` absorbs, one at a time, a
    member of ``s`` that does not weakly prefer the outsiders to ``U``. If some
    ``U`` short of ``s`` absorbs nobody, ``s`` is not strongly group-stable.

    The lowest-indexed eligible member is absorbed unless ``rng`` is given, in
    which case the choice is random.
    """
    s = _nonempty(net, s)
    members = sorted(s)
    out = [v for v in range(net.n) if v not in s]
    if not out:
        return SgsTrace(True)
    # outsiders' ranks per voter, best first; fixed for the whole call
    out_ranks = {w: sorted(net.profile[w].rank[v] for v in out) for w in members}
    n_out = len(out)

    def blocked(ranks_u, ranks_out):
        # weak preference of the outsiders over U
        k = min(len(ranks_u), n_out)
        for i in range(k):
            if ranks_out[i] > ranks_u[i]:
                return False
        return True

    for seed in members:
        frozen = {seed}
        ranks_u = {w: [net.profile[w].rank[seed]] for w in members if w != seed}
        # not weakly preferring the outsiders to U only becomes easier as U
        # grows, so eligible members stay eligible
        eligible = set()
        pending = set(ranks_u)
        while len(frozen) < len(members):
            for w in list(pending):
                if not blocked(ranks_u[w], out_ranks[w]):
                    eligible.add(w)
                    pending.discard(w)
            if not eligible:
                return SgsTrace(False, (seed, frozenset(frozen)))
            pick = rng.choice(sorted(eligible)) if rng is not None else min(eligible)
            eligible.discard(pick)
            frozen.add(pick)
            del ranks_u[pick]
            for w, ranks in ranks_u.items():
                bisect.insort(ranks, net.profile[w].rank[pick])
    return SgsTrace(True)


def verify_witness(net: PreferenceNetwork, s: Iterable[int], trace: SgsTrace) -> bool:
    """Re-check a failure witness directly from the weak preference definition."""
    s = _nonempty(net, s)
    if trace.outcome or trace.witness is None:
        return False
    seed, frozen = trace.witness
    if seed not in frozen or not frozen < s:
        return False
    out = net.population - s
    return all(weak_prefers(net.profile[w], out, frozen) for w in s - frozen)


def is_sa_prime(net: PreferenceNetwork, s: Iterable[int]) -> bool:
    """A singleton must rank itself first; larger sets pass."""
    s = _nonempty(net, s)
    if len(s) == 1:
        (u,) = s
        return net.profile[u].rank[u] == 1
    return True


def in_scomp(net: PreferenceNetwork, s: Iterable[int]) -> bool:
    s = _nonempty(net, s)
    return is_sa_prime(net, s) and is_strongly_group_stable(net, s).outcome
