"""Axiomatic community detection in preference networks."""

from .functions import MajorityRule, enumerate_cliques, is_clique, is_cliq_g, is_harmon, is_harmonious_lambda
from .generators import get_profile, hero_sidekick, uniform_random
from .grow import clique_growing, enumerate_communities, grow_scomp, sample_uniform
from .model import DomainError, PreferenceNetwork, TotalOrder
from .stability import in_scomp, is_sa_prime, is_strongly_group_stable

__all__ = [
    "DomainError",
    "MajorityRule",
    "PreferenceNetwork",
    "TotalOrder",
    "clique_growing",
    "enumerate_cliques",
    "enumerate_communities",
    "get_profile",
    "grow_scomp",
    "hero_sidekick",
    "in_scomp",
    "is_clique",
    "is_cliq_g",
    "is_harmon",
    "is_harmonious_lambda",
    "is_sa_prime",
    "is_strongly_group_stable",
    "sample_uniform",
    "uniform_random",
]
