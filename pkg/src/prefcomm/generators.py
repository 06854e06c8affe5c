"""Instance generators: recursive block profiles, heroes and sidekicks, uniform random."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .model import DomainError, PreferenceNetwork, TotalOrder, concat


def get_profile(n: int, sigma: Optional[Sequence[int]] = None) -> PreferenceNetwork:
    """Divide-and-conquer profile with many grown stable communities.

    The population is split along ``sigma`` (natural order by default) into a
    first half of ``ceil(n/2)`` and the rest; each half gets its own recursive
    profile followed by ``sigma`` restricted to the other half.
    """
    if n < 1:
        raise DomainError("population size must be at least 1")
    sigma = tuple(range(n)) if sigma is None else TotalOrder(tuple(sigma)).order
    if len(sigma) != n:
        raise DomainError(f"base order ranks {len(sigma)} individuals, expected {n}")

    def build(block: tuple[int, ...]) -> dict[int, tuple[int, ...]]:
        # block is listed in sigma order, so restrictions of sigma are slices
        if len(block) == 1:
            return {block[0]: block}
        half = (len(block) + 1) // 2
        first, second = block[:half], block[half:]
        result = {}
        for v, o in build(first).items():
            result[v] = concat(o, second)
        for v, o in build(second).items():
            result[v] = concat(o, first)
        return result

    orders = build(sigma)
    return PreferenceNetwork.from_orders([orders[u] for u in range(n)])


def recursion_blocks(n: int, sigma: Optional[Sequence[int]] = None) -> list[frozenset]:
    """Every block produced while building :func:`get_profile`, including the whole population."""
    sigma = tuple(range(n)) if sigma is None else tuple(sigma)
    blocks = []

    def walk(block):
        blocks.append(frozenset(block))
        if len(block) > 1:
            half = (len(block) + 1) // 2
            walk(block[:half])
            walk(block[half:])

    walk(sigma)
    return blocks


def hero_sidekick(m: int) -> PreferenceNetwork:
    """Heroes ``0..m-1`` and sidekicks ``m..2m-1``; hero ``i`` pairs with sidekick ``m+i``.

    Both members of pair ``i`` rank their own hero first, the other heroes in
    order, their own sidekick, then the other sidekicks in order.
    """
    if m < 1:
        raise DomainError("need at least one hero")
    heroes = list(range(m))
    sidekicks = list(range(m, 2 * m))
    orders = [None] * (2 * m)
    for i in range(m):
        h, s = heroes[i], sidekicks[i]
        order = [h] + [x for x in heroes if x != h] + [s] + [x for x in sidekicks if x != s]
        orders[h] = orders[s] = order
    return PreferenceNetwork.from_orders(orders)


def uniform_random(n: int, seed=None) -> PreferenceNetwork:
    """Each individual's order drawn independently and uniformly."""
    if n < 1:
        raise DomainError("population size must be at least 1")
    rng = random.Random(seed)
    orders = []
    for _ in range(n):
        o = list(range(n))
        rng.shuffle(o)
        orders.append(o)
    return PreferenceNetwork.from_orders(orders)


def planted_block(n: int, k: int, seed=None) -> PreferenceNetwork:
    """Uniform random network in which a random ``k``-set ranks itself on top."""
    if not 1 <= k <= n:
        raise DomainError(f"block size {k} outside 1..{n}")
    rng = random.Random(seed)
    block = rng.sample(range(n), k)
    rest = [v for v in range(n) if v not in block]
    orders = []
    for u in range(n):
        if u in block:
            head, tail = block[:], rest[:]
            rng.shuffle(head)
            rng.shuffle(tail)
            orders.append(head + tail)
        else:
            o = list(range(n))
            rng.shuffle(o)
            orders.append(o)
    return PreferenceNetwork.from_orders(orders)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    size: int
    seed: Optional[int] = None
    sigma: Optional[tuple[int, ...]] = None

    def build(self) -> PreferenceNetwork:
        if self.kind == "get_profile":
            return get_profile(self.size, self.sigma)
        if self.kind == "hero_sidekick":
            return hero_sidekick(self.size)
        if self.kind == "uniform_random":
            return uniform_random(self.size, self.seed)
        raise DomainError(f"unknown generator {self.kind!r}")
