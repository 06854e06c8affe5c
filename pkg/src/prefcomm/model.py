"""Preference networks: total orders, profiles and the preference relations.

Individuals are dense integer ids ``0..n-1``. Sets of individuals are plain
``frozenset`` objects; :func:`canonical` gives the sorted presentation used
for output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


IndividualSet = frozenset


def _check_permutation(order: Sequence[int], n: int) -> None:
    if sorted(order) != list(range(n)):
        raise DomainError(f"not a permutation of 0..{n - 1}: {list(order)}")


@dataclass(frozen=True)
class TotalOrder:
    """A strict ranking of ``0..n-1``, most preferred first.

    ``rank[u]`` is the 1-based position of ``u``.
    """

    order: tuple[int, ...]
    rank: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        order = tuple(int(u) for u in self.order)
        _check_permutation(order, len(order))
        rank = [0] * len(order)
        for pos, u in enumerate(order, start=1):
            rank[u] = pos
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rank", tuple(rank))

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def first(self) -> int:
        return self.order[0]

    @property
    def last(self) -> int:
        return self.order[-1]

    def __len__(self):
        return len(self.order)


@dataclass(frozen=True)
class PreferenceNetwork:
    """Population ``0..n-1`` with one :class:`TotalOrder` per individual."""

    profile: tuple[TotalOrder, ...]

    def __post_init__(self):
        profile = tuple(p if isinstance(p, TotalOrder) else TotalOrder(p) for p in self.profile)
        if not profile:
            raise DomainError("a preference network needs at least one individual")
        n = len(profile)
        for u, p in enumerate(profile):
            if p.n != n:
                raise DomainError(f"order of individual {u} ranks {p.n} individuals, expected {n}")
        object.__setattr__(self, "profile", profile)

    @classmethod
    def from_orders(cls, orders: Iterable[Sequence[int]], one_based: bool = False) -> "PreferenceNetwork":
        shift = 1 if one_based else 0
        return cls(tuple(TotalOrder(tuple(u - shift for u in o)) for o in orders))

    @property
    def n(self) -> int:
        return len(self.profile)

    @property
    def population(self) -> frozenset:
        return frozenset(range(self.n))

    def order_of(self, u: int) -> TotalOrder:
        return self.profile[u]

    @cached_property
    def rank_matrix(self) -> np.ndarray:
        """``R[w, x]`` is the rank of ``x`` in the order of ``w``."""
        return np.array([p.rank for p in self.profile], dtype=np.int64)

    @cached_property
    def prefix_masks(self) -> tuple[tuple[int, ...], ...]:
        """``prefix_masks[u][k]`` is the bitmask of the top ``k`` of ``u``."""
        masks = []
        for p in self.profile:
            acc, row = 0, [0]
            for v in p.order:
                acc |= 1 << v
                row.append(acc)
            masks.append(tuple(row))
        return tuple(masks)

    def to_one_based(self) -> list[list[int]]:
        return [[u + 1 for u in p.order] for p in self.profile]


def as_set(members: Iterable[int], n: int | None = None) -> frozenset:
    """Validate ``members`` as individual ids (below ``n`` when given)."""
    s = frozenset(int(u) for u in members)
    if n is not None:
        bad = [u for u in s if not 0 <= u < n]
        if bad:
            raise DomainError(f"individuals out of range 0..{n - 1}: {sorted(bad)}")
    return s


def canonical(communities: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    """Deduplicate and order communities by size, then lexicographically."""
    uniq = {tuple(sorted(c)) for c in communities}
    return sorted(uniq, key=lambda c: (len(c), c))


def _check_individual(order: TotalOrder, u: int) -> None:
    if not 0 <= u < order.n:
        raise DomainError(f"individual {u} out of range 0..{order.n - 1}")


def rank_of(order: TotalOrder, u: int) -> int:
    _check_individual(order, u)
    return order.rank[u]


def prefers(order: TotalOrder, u: int, v: int) -> bool:
    _check_individual(order, u)
    _check_individual(order, v)
    return order.rank[u] < order.rank[v]


def _sorted_ranks(order: TotalOrder, s: Iterable[int]) -> list[int]:
    rank = order.rank
    out = []
    for u in s:
        _check_individual(order, u)
        out.append(rank[u])
    out.sort()
    return out


def group_prefers(order: TotalOrder, gp: Iterable[int], g: Iterable[int]) -> bool:
    """Whether ``gp`` can be aligned with ``g`` so each ``gp`` member beats its partner.

    Such an alignment exists iff the i-th best of ``gp`` beats the i-th best of
    ``g`` for every i.
    """
    gp, g = frozenset(gp), frozenset(g)
    if not gp or not g:
        raise DomainError("group preference compares non-empty sets")
    if len(gp) != len(g):
        raise DomainError(f"group preference compares equal-sized sets, got {len(gp)} and {len(g)}")
    if gp & g:
        raise DomainError(f"group preference compares disjoint sets, overlap {sorted(gp & g)}")
    return all(a < b for a, b in zip(_sorted_ranks(order, gp), _sorted_ranks(order, g)))


def top_k(order: TotalOrder, s: Iterable[int], k: int) -> frozenset:
    s = list(s)
    if not 0 <= k <= len(s):
        raise DomainError(f"k={k} outside 0..{len(s)}")
    for u in s:
        _check_individual(order, u)
    return frozenset(sorted(s, key=order.rank.__getitem__)[:k])


def weak_prefers(order: TotalOrder, a: Iterable[int], b: Iterable[int]) -> bool:
    """Group preference between the top ``min(|a|, |b|)`` of ``a`` and of ``b``.

    False when either set is empty.
    """
    a, b = frozenset(a), frozenset(b)
    if a & b:
        raise DomainError(f"weak preference compares disjoint sets, overlap {sorted(a & b)}")
    ra, rb = _sorted_ranks(order, a), _sorted_ranks(order, b)
    k = min(len(ra), len(rb))
    if k == 0:
        return False
    return all(x < y for x, y in zip(ra[:k], rb[:k]))


def restrict(net: PreferenceNetwork, keep: Iterable[int]) -> tuple[PreferenceNetwork, tuple[int, ...]]:
    """Sub-network on ``keep`` preserving relative ranks.

    Returns the network and ``old_ids`` with ``old_ids[new] == old``.
    """
    keep = as_set(keep, net.n)
    if not keep:
        raise DomainError("cannot restrict to an empty set")
    old_ids = tuple(sorted(keep))
    new_id = {old: new for new, old in enumerate(old_ids)}
    orders = [[new_id[v] for v in net.profile[u].order if v in keep] for u in old_ids]
    return PreferenceNetwork.from_orders(orders), old_ids


def apply_permutation(net: PreferenceNetwork, sigma: Sequence[int]) -> PreferenceNetwork:
    """Relabel individuals: ``u`` becomes ``sigma[u]``."""
    sigma = tuple(int(x) for x in sigma)
    if len(sigma) != net.n:
        raise DomainError(f"permutation has size {len(sigma)}, network has {net.n}")
    _check_permutation(sigma, net.n)
    orders: list[list[int]] = [[] for _ in range(net.n)]
    for u, p in enumerate(net.profile):
        orders[sigma[u]] = [sigma[v] for v in p.order]
    return PreferenceNetwork.from_orders(orders)


def concat(left: Sequence[int], right: Sequence[int]) -> tuple[int, ...]:
    """Orders on disjoint ground sets joined so every ``left`` element comes first."""
    overlap = set(left) & set(right)
    if overlap:
        raise DomainError(f"concatenated orders share elements {sorted(overlap)}")
    return tuple(left) + tuple(right)
