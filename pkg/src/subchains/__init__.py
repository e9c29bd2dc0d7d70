"""Subgroup lattices of small permutation groups and counts of their chains.

``g(G)`` counts maximal chains of subgroups of ``G``; ``h(G)`` counts chains
of subgroups ending in ``G``, equivalently the classes of fuzzy subgroups of
``G`` under level-subgroup equivalence.
"""

from .chains import (
    ChainCounts,
    FactoredInteger,
    InclusionExclusionBreakdown,
    chain_counts,
    count_chains_ending,
    count_maximal_chains,
    g_by_maximal_recursion,
    g_cyclic_multinomial,
    h_by_inclusion_exclusion,
    h_dihedral_prime_power,
    lower_bound_h_sn,
    maximal_chain_decomposition,
    naive_chain_oracle,
)
from .classify import GroupFingerprint, classify, fingerprint, label
from .group import (
    ElementTable,
    SubgroupHandle,
    close_generators,
    conjugate,
    intersect,
    named_group,
    parse_group_spec,
    subgroup_from_generators,
)
from .lattice import (
    SubgroupLattice,
    brute_force_subgroups,
    covering_relation,
    enumerate_subgroups,
    maximal_subgroups,
)
from .perm import Permutation, compose, format_permutation, inverse, order_of, parse_permutation

__version__ = "0.1.0"
