"""Explicit community families: cliques, relaxed cliques and harmonious sets."""

from __future__ import annotations

import enum
from typing import Callable, Iterable

import numpy as np

from .model import DomainError, PreferenceNetwork, as_set, canonical


class MajorityRule(enum.Enum):
    """How a vote count is compared against the number of voters ``m``.

    ``STRICT`` needs ``2 * count > m``, ``WEAK`` needs ``2 * count >= m``.
    """

    STRICT = "strict"
    WEAK = "weak"

    def accepts(self, count, m):
        if self is MajorityRule.STRICT:
            return 2 * count > m
        return 2 * count >= m


def _nonempty(net: PreferenceNetwork, s: Iterable[int]) -> frozenset:
    s = as_set(s, net.n)
    if not s:
        raise DomainError("community membership is defined for non-empty sets")
    return s


def _mask(s: Iterable[int]) -> int:
    m = 0
    for u in s:
        m |= 1 << u
    return m


def is_clique(net: PreferenceNetwork, s: Iterable[int]) -> bool:
    """Every member ranks exactly ``s`` as its top ``|s|`` individuals."""
    s = _nonempty(net, s)
    k, mask = len(s), _mask(s)
    masks = net.prefix_masks
    return all(masks[u][k] == mask for u in s)


def enumerate_cliques(net: PreferenceNetwork) -> list[tuple[int, ...]]:
    """All cliques of ``net`` in canonical order.

    Every clique is a prefix of each member's order, so only the ``n**2``
    prefixes need checking.
    """
    masks = net.prefix_masks
    found = set()
    for u, p in enumerate(net.profile):
        row = masks[u]
        for k in range(1, net.n + 1):
            mask = row[k]
            if mask in found:
                continue
            if all(masks[w][k] == mask for w in p.order[:k]):
                found.add(mask)
    return canonical(tuple(v for v in range(net.n) if mask >> v & 1) for mask in found)


def is_cliq_g(net: PreferenceNetwork, s: Iterable[int], g: Callable[[int], int]) -> bool:
    """Every member ranks every member within ``|s| + g(|s|)``."""
    s = _nonempty(net, s)
    window = len(s) + g(len(s))
    return all(net.profile[w].rank[u] <= window for w in s for u in s)


def is_harmonious_lambda(net: PreferenceNetwork, s: Iterable[int], lam: float) -> bool:
    """For every inside ``u`` and outside ``v``, at least ``lam * |s|`` members prefer ``u``."""
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"lambda must lie in [0, 1], got {lam}")
    s = _nonempty(net, s)
    out = [v for v in range(net.n) if v not in s]
    if not out:
        return True
    inside = sorted(s)
    R = net.rank_matrix
    ins = R[np.ix_(inside, inside)]
    outs = R[np.ix_(inside, out)]
    counts = (ins[:, :, None] < outs[:, None, :]).sum(axis=0)
    return bool((counts >= lam * len(s)).all())


def is_harmon(net: PreferenceNetwork, s: Iterable[int], rule: MajorityRule = MajorityRule.STRICT) -> bool:
    """For every inside ``u`` and outside ``v``, a majority of ``s - {u}`` prefers ``u`` to ``v``."""
    s = _nonempty(net, s)
    out = [v for v in range(net.n) if v not in s]
    if not out:
        return True
    inside = sorted(s)
    R = net.rank_matrix
    ins = R[np.ix_(inside, inside)]
    outs = R[np.ix_(inside, out)]
    votes = ins[:, :, None] < outs[:, None, :]
    # drop each candidate's own vote
    idx = np.arange(len(inside))
    counts = votes.sum(axis=0) - votes[idx, idx, :]
    m = len(inside) - 1
    return bool(rule.accepts(counts, m).all())


def cliq_g_family(spec: str) -> Callable[[int], int]:
    """Parse a window-slack family: ``"3"`` or ``"const:3"``, ``"linear:0.5"``."""
    kind, _, arg = spec.partition(":")
    if not arg:
        kind, arg = "const", kind
    if kind not in ("const", "linear"):
        raise DomainError(f"unknown slack family {kind!r}")
    try:
        value = int(arg) if kind == "const" else float(arg)
    except ValueError:
        raise DomainError(f"bad slack family {spec!r}") from None
    if value < 0:
        raise DomainError("slack must be non-negative")
    if kind == "const":
        return lambda k: value
    return lambda k: int(value * k)
