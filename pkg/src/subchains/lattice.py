"""Subgroup lattices of small permutation groups.

Nodes are identified by their membership mask and kept sorted by
``(order, mask)``, so node 0 is the trivial subgroup and the last node is
the whole group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from .group import (
    ClosureCapError,
    ElementTable,
    SubgroupHandle,
    _closure,
    indices_from_mask,
    mask_from_indices,
)

__all__ = [
    "SubgroupLattice",
    "enumerate_subgroups",
    "maximal_subgroups",
    "covering_relation",
    "brute_force_subgroups",
    "cyclic_subgroups",
    "LATTICE_CAP",
]

LATTICE_CAP = 720


@dataclass(eq=False)
class SubgroupLattice:
    parent: ElementTable
    masks: list[int]
    generators: list[tuple[int, ...]]
    index: dict[int, int] = field(init=False, repr=False)
    below: list[int] = field(init=False, repr=False)
    lower_covers: list[list[int]] = field(init=False, repr=False)
    upper_covers: list[list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        order = sorted(range(len(self.masks)),
                       key=lambda i: (self.masks[i].bit_count(), self.masks[i]))
        self.masks = [self.masks[i] for i in order]
        self.generators = [tuple(self.generators[i]) for i in order]
        self.index = {m: i for i, m in enumerate(self.masks)}
        if len(self.index) != len(self.masks):
            raise ValueError("duplicate subgroup masks")
        if self.masks[0] != 1 or self.masks[-1] != (1 << self.parent.order) - 1:
            raise ValueError("lattice must contain the trivial subgroup and the whole group")
        self._build_order()

    @classmethod
    def from_masks(cls, parent: ElementTable, masks: Iterable[int]) -> SubgroupLattice:
        """Assemble a lattice from known subgroup masks; generators are recovered greedily."""
        masks = list(masks)
        gens = [_small_generating_set(parent, m) for m in masks]
        return cls(parent, masks, gens)

    def _build_order(self):
        masks = self.masks
        n = len(masks)
        below = [0] * n
        lower = [[] for _ in range(n)]
        upper = [[] for _ in range(n)]
        for y in range(n):
            my = masks[y]
            bits = 0
            maximal: list[int] = []
            # scanning downward by order: x is covered by y unless some
            # already-accepted larger proper subgroup contains it
            for x in range(y - 1, -1, -1):
                mx = masks[x]
                if mx & my != mx:
                    continue
                bits |= 1 << x
                if not any(mx & masks[z] == mx for z in maximal):
                    maximal.append(x)
            below[y] = bits
            maximal.sort()
            lower[y] = maximal
            for x in maximal:
                upper[x].append(y)
        self.below = below
        self.lower_covers = lower
        self.upper_covers = upper

    def __len__(self) -> int:
        return len(self.masks)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.masks) - 1

    def order(self, node: int) -> int:
        return self.masks[node].bit_count()

    def handle(self, node: int) -> SubgroupHandle:
        return SubgroupHandle(self.parent, self.masks[node])

    def node_of(self, h: SubgroupHandle | int) -> int:
        mask = h.mask if isinstance(h, SubgroupHandle) else h
        return self.index[mask]

    def contains(self, x: int, y: int) -> bool:
        """True when node ``x`` is a subgroup of node ``y``."""
        return self.masks[x] & self.masks[y] == self.masks[x]

    def proper_subgroups(self, node: int) -> list[int]:
        bits = self.below[node]
        return [i for i in range(node) if bits >> i & 1]

    @property
    def covers(self) -> list[tuple[int, int]]:
        return [(x, y) for y in range(len(self)) for x in self.lower_covers[y]]

    def sublattice(self, node: int) -> SubgroupLattice:
        """The lattice of subgroups of ``node``, as a lattice over the same parent table.

        The top of the result is ``node`` rather than the parent group, so
        counts on it equal the per-node counts of the full lattice.
        """
        keep = self.proper_subgroups(node) + [node]
        return _Sublattice(self.parent, [self.masks[i] for i in keep],
                           [self.generators[i] for i in keep])

    def order_histogram(self, nodes: Iterable[int]) -> dict[int, int]:
        hist: dict[int, int] = {}
        for i in nodes:
            o = self.order(i)
            hist[o] = hist.get(o, 0) + 1
        return dict(sorted(hist.items()))

    def __repr__(self) -> str:
        return f"<SubgroupLattice of {self.parent!r}: {len(self)} subgroups>"


class _Sublattice(SubgroupLattice):
    """Lattice whose top is a subgroup of the parent table."""

    def __post_init__(self):
        order = sorted(range(len(self.masks)),
                       key=lambda i: (self.masks[i].bit_count(), self.masks[i]))
        self.masks = [self.masks[i] for i in order]
        self.generators = [tuple(self.generators[i]) for i in order]
        self.index = {m: i for i, m in enumerate(self.masks)}
        top = self.masks[-1]
        if any(m & top != m for m in self.masks) or self.masks[0] != 1:
            raise ValueError("not a down-set of subgroups")
        self._build_order()


def _small_generating_set(parent: ElementTable, mask: int) -> tuple[int, ...]:
    idx = indices_from_mask(mask, parent.order)
    elems = np.array([0])
    gens: list[int] = []
    member = np.zeros(parent.order, dtype=bool)
    member[0] = True
    for x in idx:
        if not member[x]:
            elems, gens = _closure(parent, elems, gens, [int(x)])
            member[:] = False
            member[elems] = True
    return tuple(gens)


def cyclic_subgroups(parent: ElementTable) -> list[tuple[int, int]]:
    """Distinct cyclic subgroups as ``(mask, generator index)``, in element-index order."""
    n = parent.order
    seen: dict[int, int] = {}
    for x in range(n):
        powers = [0]
        cur = x
        while cur != 0:
            powers.append(cur)
            cur = int(parent.mul[cur, x])
        m = mask_from_indices(powers, n)
        seen.setdefault(m, x)
    return list(seen.items())


def enumerate_subgroups(parent: ElementTable, cap: int = LATTICE_CAP,
                        seed_order: Literal["forward", "reverse"] = "forward",
                        conjugacy_reduction: bool | None = None) -> SubgroupLattice:
    """All subgroups of ``parent`` by join-closure.

    Start from the cyclic subgroups, then keep joining every known subgroup
    with every cyclic subgroup it does not contain until no new subgroup
    appears. Every subgroup is generated by finitely many cyclic subgroups,
    so the fixpoint holds them all. ``seed_order`` only changes the
    traversal, never the result, which is what makes two runs with
    different orders a meaningful cross-check.

    With ``conjugacy_reduction`` only the first-found member of each
    conjugacy class is joined with the cyclic subgroups, and every result is
    added together with all its conjugates. Joins commute with conjugation,
    so the fixpoint is the same; S6 becomes tractable this way. The default
    ``None`` turns it on only for groups larger than order 120.
    """
    if parent.order > cap:
        raise ClosureCapError(f"group order {parent.order} exceeds lattice cap {cap}")
    n = parent.order
    if conjugacy_reduction is None:
        conjugacy_reduction = n > 120
    cyclics = cyclic_subgroups(parent)
    if seed_order == "reverse":
        cyclics = cyclics[::-1]
    elif seed_order != "forward":
        raise ValueError(f"unknown seed order {seed_order!r}")

    found: dict[int, tuple[np.ndarray, list[int]]] = {}
    queue: list[int] = []

    def add(mask: int, elems: np.ndarray, gens: list[int]):
        if mask in found:
            return
        found[mask] = (elems, gens)
        queue.append(mask)
        if conjugacy_reduction:
            for g in range(1, n):
                conj = parent.mul[parent.mul[g, elems], parent.inv[g]]
                cm = mask_from_indices(conj, n)
                if cm not in found:
                    cg = [int(parent.mul[parent.mul[g, x], parent.inv[g]]) for x in gens]
                    found[cm] = (conj, cg)

    add(1, np.array([0]), [])
    for m, x in cyclics:
        add(m, indices_from_mask(m, n), [x])

    k = 0
    while k < len(queue):
        hm = queue[k]
        k += 1
        elems, gens = found[hm]
        for cm, x in cyclics:
            if cm & hm == cm:
                continue
            new_elems, new_gens = _closure(parent, elems, gens, [x])
            add(mask_from_indices(new_elems, n), new_elems, new_gens)
    masks = list(found)
    return SubgroupLattice(parent, masks, [tuple(found[m][1]) for m in masks])


def maximal_subgroups(lattice: SubgroupLattice, node: int) -> list[int]:
    """Nodes covered by ``node``: proper subgroups with nothing strictly between."""
    return list(lattice.lower_covers[node])


def covering_relation(lattice: SubgroupLattice) -> list[tuple[int, int]]:
    """All ``(child, parent)`` pairs with ``child`` covered by ``parent``."""
    return lattice.covers


def brute_force_subgroups(parent: ElementTable, max_order: int = 24) -> set[int]:
    """Every subgroup mask, found by testing candidate subsets for closure.

    Independent of the join-closure enumeration. Candidates are unions of
    inverse pairs ``{x, x⁻¹}`` (every subgroup is inverse-closed) whose size
    plus one divides the group order; each is tested for closure under
    multiplication.
    """
    n = parent.order
    if n > max_order:
        raise ClosureCapError(f"brute-force subgroup search limited to order {max_order}")
    inv = parent.inv
    classes: list[tuple[int, ...]] = []
    seen = {0}
    for x in range(1, n):
        if x not in seen:
            pair = (x,) if inv[x] == x else (x, int(inv[x]))
            seen.update(pair)
            classes.append(pair)
    sizes = [len(c) for c in classes]
    mul = parent.mul
    found = set()
    for choice in itertools.product((False, True), repeat=len(classes)):
        size = 1 + sum(s for s, c in zip(sizes, choice) if c)
        if n % size:
            continue
        idx = [0] + [x for c, pick in zip(classes, choice) if pick for x in c]
        member = np.zeros(n, dtype=bool)
        member[idx] = True
        if member[mul[np.ix_(idx, idx)]].all():
            found.add(mask_from_indices(idx, n))
    return found
