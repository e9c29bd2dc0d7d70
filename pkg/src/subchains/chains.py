"""Counting chains of subgroups.

Two counts are computed for every lattice node ``H``:

* ``h(H)``: chains of subgroups whose largest member is ``H``. These are in
  bijection with the equivalence classes of fuzzy subgroups of ``H``.
* ``g(H)``: maximal chains ``1 = H_0 < H_1 < ... < H_r = H``.

Each count is available from a lattice DP, from the maximal-subgroup
recursions (sum over maximal subgroups for ``g``, inclusion-exclusion over
their intersections for ``h``), and from a memo-free exhaustive oracle. The
closed forms for cyclic ``g`` and dihedral prime-power ``h`` live here too.
All arithmetic uses Python integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Literal, Mapping

from .lattice import SubgroupLattice

__all__ = [
    "ChainCounts",
    "InclusionExclusionBreakdown",
    "FactoredInteger",
    "BudgetExceeded",
    "chain_counts",
    "count_chains_ending",
    "count_maximal_chains",
    "maximal_chain_decomposition",
    "h_by_inclusion_exclusion",
    "g_by_maximal_recursion",
    "g_cyclic_multinomial",
    "h_dihedral_prime_power",
    "naive_chain_oracle",
    "lower_bound_h_sn",
    "MAX_IE_SUBGROUPS",
]

MAX_IE_SUBGROUPS = 24
DEFAULT_ORACLE_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ChainCounts:
    g: int
    h: int
    per_node_g: tuple[int, ...]
    per_node_h: tuple[int, ...]


@dataclass
class InclusionExclusionBreakdown:
    """Rank-wise terms of the inclusion-exclusion sum.

    ``c[r - 1]`` is ``(-1)**(r - 1)`` times the sum of ``h`` over all
    ``r``-wise intersections of the ``k`` maximal subgroups. ``terms[r - 1]``
    maps lattice node to how many ``r``-subsets intersect in it.
    """

    k: int
    c: list[int]
    total: int
    terms: list[dict[int, int]] = field(repr=False)
    maximal: list[int] = field(repr=False)
    trivial_tail_rank: int = 0

    @property
    def rank_sum(self) -> int:
        return sum(self.c)


@dataclass(frozen=True)
class FactoredInteger:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be distinct and ascending")
        for p, m in self.factors:
            if m < 1 or not _is_prime(p):
                raise ValueError(f"invalid factor {p}^{m}")
        if prod(p**m for p, m in self.factors) != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")

    @classmethod
    def of(cls, n: int) -> FactoredInteger:
        factors = []
        rest, p = n, 2
        while p * p <= rest:
            m = 0
            while rest % p == 0:
                rest //= p
                m += 1
            if m:
                factors.append((p, m))
            p += 1
        if rest > 1:
            factors.append((rest, 1))
        return cls(n, tuple(factors))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def chain_counts(lattice: SubgroupLattice) -> ChainCounts:
    """Both DPs over the whole lattice.

    ``h``: ``c(H) = 1 + sum of c(K)`` over proper subgroups ``K`` of ``H``.
    ``g``: ``m(1) = 1`` and ``m(H) = sum of m(K)`` over ``K`` covered by ``H``.
    """
    n = len(lattice)
    h = [0] * n
    g = [0] * n
    for y in range(n):
        h[y] = 1 + sum(h[x] for x in _bits(lattice.below[y]))
        g[y] = 1 if y == lattice.bottom else sum(g[x] for x in lattice.lower_covers[y])
    return ChainCounts(g[-1], h[-1], tuple(g), tuple(h))


def count_chains_ending(lattice: SubgroupLattice, node: int | None = None) -> int:
    node = lattice.top if node is None else node
    return chain_counts(lattice).per_node_h[node]


def count_maximal_chains(lattice: SubgroupLattice, node: int | None = None) -> int:
    node = lattice.top if node is None else node
    return chain_counts(lattice).per_node_g[node]


def maximal_chain_decomposition(lattice: SubgroupLattice, node: int | None = None) -> dict[int, int]:
    """``{M: g(M)}`` over the maximal subgroups ``M`` of ``node``; values sum to ``g(node)``."""
    node = lattice.top if node is None else node
    counts = chain_counts(lattice).per_node_g
    parts = {m: counts[m] for m in lattice.lower_covers[node]}
    if node != lattice.bottom and sum(parts.values()) != counts[node]:
        raise AssertionError("maximal-chain decomposition does not add up")
    return parts


def g_by_maximal_recursion(lattice: SubgroupLattice, node: int | None = None) -> int:
    """``g(H) = sum of g(M)`` over maximal subgroups ``M``, recursing top-down with a memo."""
    node = lattice.top if node is None else node
    memo: dict[int, int] = {lattice.bottom: 1}

    def rec(y: int) -> int:
        if y not in memo:
            memo[y] = sum(rec(m) for m in lattice.lower_covers[y])
        return memo[y]

    return rec(node)


def h_by_inclusion_exclusion(
    lattice: SubgroupLattice,
    node: int | None = None,
    h_source: Literal["recursive", "dp"] = "recursive",
    tail_shortcut: bool = True,
    max_k: int = MAX_IE_SUBGROUPS,
) -> tuple[int, InclusionExclusionBreakdown]:
    """``h`` as twice the inclusion-exclusion sum over the maximal subgroups.

    A chain ending in ``G`` is ``G`` on top of a (possibly empty) chain of
    proper subgroups, and every such chain lies inside some maximal
    subgroup. Counting nonempty chains inside an intersection ``K`` gives
    ``2·h(K) - 1``; the ``-1`` terms telescope, leaving the factor 2.

    ``h`` of each intersection is obtained by the same inclusion-exclusion,
    recursively and memoized by mask (``h_source="recursive"``), or read from
    the lattice DP (``"dp"``). With ``tail_shortcut`` the subset search stops
    descending once the running intersection is trivial and adds the
    remaining ranks as binomial terms; without it every subset is visited.
    """
    node = lattice.top if node is None else node
    if h_source == "dp":
        dp = chain_counts(lattice).per_node_h
        h_of = dp.__getitem__
    elif h_source == "recursive":
        memo: dict[int, int] = {lattice.bottom: 1}

        def h_of(x: int) -> int:
            if x not in memo:
                memo[x] = _ie(lattice, x, h_of, tail_shortcut, max_k)[0]
            return memo[x]
    else:
        raise ValueError(f"unknown h_source {h_source!r}")
    return _ie(lattice, node, h_of, tail_shortcut, max_k)


def _ie(lattice, node, h_of, tail_shortcut, max_k):
    maximal = lattice.lower_covers[node]
    k = len(maximal)
    if k > max_k:
        raise ValueError(f"{k} maximal subgroups exceed the inclusion-exclusion bound {max_k}")
    if k == 0:
        return 1, InclusionExclusionBreakdown(0, [], 1, [], [], 0)
    masks = [lattice.masks[m] for m in maximal]
    index = lattice.index
    bottom_mask = lattice.masks[lattice.bottom]
    sums = [0] * (k + 1)
    terms: list[dict[int, int]] = [dict() for _ in range(k + 1)]
    deepest = 0

    def add(rank: int, x: int, mult: int):
        sums[rank] += mult * h_of(x)
        terms[rank][x] = terms[rank].get(x, 0) + mult

    def node_of(mask: int) -> int:
        try:
            return index[mask]
        except KeyError:
            raise AssertionError("intersection of subgroups missing from the lattice")

    if tail_shortcut:
        stack = [(0, 0, lattice.masks[node])]
        while stack:
            start, depth, cur = stack.pop()
            for i in range(start, k):
                m = cur & masks[i]
                r = depth + 1
                if m == bottom_mask:
                    rest = k - i - 1
                    for t in range(rest + 1):
                        add(r + t, lattice.bottom, comb(rest, t))
                else:
                    deepest = max(deepest, r)
                    add(r, node_of(m), 1)
                    stack.append((i + 1, r, m))
    else:
        for r in range(1, k + 1):
            for combo in itertools.combinations(masks, r):
                m = lattice.masks[node]
                for c in combo:
                    m &= c
                if m != bottom_mask:
                    deepest = max(deepest, r)
                add(r, node_of(m), 1)

    c = [(-1) ** (r - 1) * sums[r] for r in range(1, k + 1)]
    total = 2 * sum(c)
    breakdown = InclusionExclusionBreakdown(
        k=k, c=c, total=total, terms=terms[1:], maximal=list(maximal),
        trivial_tail_rank=deepest + 1,
    )
    return total, breakdown


def g_cyclic_multinomial(n: FactoredInteger | int) -> int:
    """Maximal chains of the cyclic group of order ``n``: (Σmᵢ)! / Πmᵢ!."""
    if not isinstance(n, FactoredInteger):
        n = FactoredInteger.of(n)
    exps = [m for _, m in n.factors]
    return factorial(sum(exps)) // prod(factorial(m) for m in exps)


def h_dihedral_prime_power(p: int, m: int, cap: int = 200) -> int:
    """Closed form ``2**m (p**(m+1) + p - 2) / (p - 1)`` for the dihedral group of order ``2·p**m``."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"exponent must be positive, got {m}")
    if 2 * p**m > cap:
        raise ValueError(f"order 2·{p}^{m} exceeds cap {cap}")
    value = Fraction(2**m, p - 1) * (p ** (m + 1) + p - 2)
    assert value.denominator == 1
    return int(value)


def naive_chain_oracle(lattice: SubgroupLattice, budget: int = DEFAULT_ORACLE_BUDGET) -> tuple[int, int]:
    """Exhaustive ``(g, h)`` for the lattice top, with no memoization.

    Proper-subgroup sets and the covering relation are rebuilt here from raw
    mask tests so nothing is shared with the DP path. Raises
    :class:`BudgetExceeded` after ``budget`` visited chains.
    """
    masks = lattice.masks
    n = len(masks)

    def sub(x, y):
        return x != y and masks[x] & masks[y] == masks[x]

    proper = [[x for x in range(n) if sub(x, y)] for y in range(n)]
    covered = [[x for x in proper[y] if not any(sub(x, z) for z in proper[y])] for y in range(n)]
    bottom = min(range(n), key=lambda i: masks[i].bit_count())
    top = max(range(n), key=lambda i: masks[i].bit_count())
    visits = 0

    def tick():
        nonlocal visits
        visits += 1
        if visits > budget:
            raise BudgetExceeded(f"naive oracle exceeded budget of {budget}")

    def chains_ending(y):
        tick()
        total = 1
        for x in proper[y]:
            total += chains_ending(x)
        return total

    def paths_down(y):
        tick()
        if y == bottom:
            return 1
        return sum(paths_down(x) for x in covered[y])

    h = chains_ending(top)
    g = paths_down(top)
    return g, h


def lower_bound_h_sn(n: int, h_alternating: Mapping[int, int], h_symmetric: Mapping[int, int]) -> int:
    """Lower bound for ``h(S_n)`` from ``h(A_0..A_n)`` and ``h(S_0..S_{n-1})``.

    ``2·(Σ_{r=0..n} (-1)^r C(n,r) h(A_{n-r}) + Σ_{r=0..n-1} C(n,r+1) h(S_{n-r-1}))``.
    """
    if n < 5:
        raise ValueError(f"bound is stated for n >= 5, got {n}")
    missing = [f"A{j}" for j in range(n + 1) if j not in h_alternating]
    missing += [f"S{j}" for j in range(n) if j not in h_symmetric]
    if missing:
        raise KeyError(f"missing table entries: {', '.join(missing)}")
    alt = sum((-1) ** r * comb(n, r) * h_alternating[n - r] for r in range(n + 1))
    sym = sum(comb(n, r + 1) * h_symmetric[n - r - 1] for r in range(n))
    return 2 * (alt + sym)
