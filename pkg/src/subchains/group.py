"""Explicit finite permutation groups.

A group is closed once into an :class:`ElementTable` (element list plus a
full multiplication table). Subgroups are then plain bitmasks over element
indices, which makes intersection a single ``&``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .perm import Permutation, compose, format_permutation, identity, parse_permutation

__all__ = [
    "ClosureCapError",
    "ElementTable",
    "SubgroupHandle",
    "close_generators",
    "subgroup_from_generators",
    "intersect",
    "conjugate",
    "named_group",
    "parse_group_spec",
    "mask_from_indices",
    "indices_from_mask",
    "SYMMETRIC_CAP",
    "CYCLIC_DIHEDRAL_CAP",
]

DEFAULT_CAP = 10000
SYMMETRIC_CAP = 6
CYCLIC_DIHEDRAL_CAP = 200


class ClosureCapError(RuntimeError):
    """Raised when a closure or construction would exceed its configured cap."""


def mask_from_indices(indices: Iterable[int] | np.ndarray, n: int) -> int:
    member = np.zeros(n, dtype=bool)
    member[np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices,
                      dtype=np.intp)] = True
    return _mask_from_bool(member)


def _mask_from_bool(member: np.ndarray) -> int:
    return int.from_bytes(np.packbits(member, bitorder="little").tobytes(), "little")


def indices_from_mask(mask: int, n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    bits = np.unpackbits(
        np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8), bitorder="little"
    )
    return np.flatnonzero(bits[:n])


@dataclass(eq=False)
class ElementTable:
    """A closed permutation group with index arithmetic.

    ``elements[0]`` is the identity and ``mul[i, j]`` is the index of
    ``elements[i] ∘ elements[j]`` (apply ``j`` first).
    """

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...]
    mul: np.ndarray
    inv: np.ndarray
    name: str = ""
    _index: dict[Permutation, int] = field(default=None, repr=False)

    def __post_init__(self):
        if self._index is None:
            self._index = {p: i for i, p in enumerate(self.elements)}
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, p: Permutation | str) -> int:
        if isinstance(p, str):
            p = parse_permutation(p, self.degree)
        try:
            return self._index[p]
        except KeyError:
            raise KeyError(f"{format_permutation(p)} is not an element of {self.name or 'group'}")

    def element_orders(self) -> np.ndarray:
        """Order of every element, by index."""
        cached = self.__dict__.get("_orders")
        if cached is not None:
            return cached
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        todo = np.ones(n, dtype=bool)
        while todo.any():
            done_now = todo & (cur == 0)
            orders[done_now] = k
            todo &= ~done_now
            cur = self.mul[cur, np.arange(n)]
            k += 1
        orders.setflags(write=False)
        self.__dict__["_orders"] = orders
        return orders

    def full(self) -> SubgroupHandle:
        return SubgroupHandle(self, (1 << self.order) - 1)

    def trivial(self) -> SubgroupHandle:
        return SubgroupHandle(self, 1)

    def subgroup(self, *gens: Permutation | str) -> SubgroupHandle:
        """Subgroup generated by permutations given as objects or cycle strings."""
        return subgroup_from_generators(self, [self.index(g) for g in gens])

    def __repr__(self) -> str:
        label = self.name or "ElementTable"
        return f"<{label}: degree {self.degree}, order {self.order}>"


@dataclass(frozen=True, eq=False)
class SubgroupHandle:
    parent: ElementTable
    mask: int

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> np.ndarray:
        return indices_from_mask(self.mask, self.parent.order)

    def elements(self) -> list[Permutation]:
        return [self.parent.elements[i] for i in self.indices()]

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __le__(self, other: SubgroupHandle) -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: SubgroupHandle) -> bool:
        return self.mask != other.mask and self <= other

    def __eq__(self, other):
        if not isinstance(other, SubgroupHandle):
            return NotImplemented
        return self.parent is other.parent and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __repr__(self) -> str:
        return f"<SubgroupHandle order {self.order} of {self.parent!r}>"


def _multiplication_table(elements: Sequence[Permutation]) -> tuple[np.ndarray, np.ndarray]:
    n = len(elements)
    dtype = np.uint8 if elements[0].degree < 256 else np.uint16
    perms = np.array([p.images for p in elements], dtype=dtype) - 1
    lookup = {row.tobytes(): i for i, row in enumerate(perms)}
    mul = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        # row i: elements[i] ∘ elements[j] maps x -> perms[i][perms[j][x]]
        prods = perms[i][perms]
        mul[i] = [lookup[r.tobytes()] for r in prods]
    inv = np.argmin(mul, axis=1).astype(np.int32)
    return mul, inv


def close_generators(gens: Iterable[Permutation], degree: int | None = None,
                     cap: int = DEFAULT_CAP, name: str = "") -> ElementTable:
    """Close a generating set into an :class:`ElementTable`.

    Elements are discovered breadth-first from the identity, left-multiplying
    by the sorted, deduplicated generators. The resulting indexing therefore
    does not depend on the order in which generators are passed.
    """
    gens = sorted(set(gens))
    if degree is None:
        if not gens:
            raise ValueError("degree is required when no generators are given")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share one degree")
    gens = [g for g in gens if not g.is_identity()]

    e = identity(degree)
    elements = [e]
    index = {e: 0}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in index:
                if len(elements) >= cap:
                    raise ClosureCapError(f"closure exceeds cap of {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    if math.factorial(degree) % len(elements):
        raise AssertionError("group order does not divide degree!")
    mul, inv = _multiplication_table(elements)
    return ElementTable(degree, tuple(elements), tuple(gens), mul, inv, name, index)


def _closure(parent: ElementTable, base: np.ndarray, base_gens: list[int],
             new_gens: Iterable[int]) -> tuple[np.ndarray, list[int]]:
    """Extend the subgroup ``base`` (element indices) by ``new_gens``.

    Coset-by-coset (Dimino-style): the target group is a union of left cosets
    ``x·H`` of the current group ``H``, and left multiplication by generators
    permutes those cosets transitively.
    """
    mul = parent.mul
    member = np.zeros(parent.order, dtype=bool)
    member[base] = True
    elems = base
    gens = list(base_gens)
    for s in new_gens:
        if member[s]:
            continue
        gens.append(s)
        sub = elems
        blocks = [sub]
        reps = [0]
        k = 0
        while k < len(reps):
            r = reps[k]
            k += 1
            for t in gens:
                x = mul[t, r]
                if not member[x]:
                    coset = mul[x, sub]
                    member[coset] = True
                    blocks.append(coset)
                    reps.append(x)
        elems = np.concatenate(blocks)
    return elems, gens


def subgroup_from_generators(parent: ElementTable, gens: Iterable[int]) -> SubgroupHandle:
    """Smallest subgroup of ``parent`` containing the given element indices."""
    gens = [int(g) for g in gens]
    n = parent.order
    for g in gens:
        if not 0 <= g < n:
            raise IndexError(f"element index {g} out of range for order {n}")
    elems, _ = _closure(parent, np.array([0]), [], gens)
    return SubgroupHandle(parent, mask_from_indices(elems, n))


def intersect(a: SubgroupHandle, b: SubgroupHandle) -> SubgroupHandle:
    if a.parent is not b.parent:
        raise ValueError("subgroups belong to different parent groups")
    return SubgroupHandle(a.parent, a.mask & b.mask)


def conjugate(h: SubgroupHandle, g: int) -> SubgroupHandle:
    """``{g·x·g⁻¹ : x ∈ h}``."""
    t = h.parent
    idx = h.indices()
    conj = t.mul[t.mul[g, idx], t.inv[g]]
    return SubgroupHandle(t, mask_from_indices(conj, t.order))


def _cycle(points: Sequence[int], degree: int) -> Permutation:
    images = list(range(1, degree + 1))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        images[a - 1] = b
    return Permutation(degree, tuple(images))


def named_group(family: str, n: int, cap: int = DEFAULT_CAP) -> ElementTable:
    """Standard permutation models of S_n, A_n, C_n and D_2n.

    ``family`` is one of ``"symmetric"``, ``"alternating"``, ``"cyclic"``,
    ``"dihedral"``. For ``"dihedral"`` the parameter is the group ORDER, so
    ``named_group("dihedral", 10)`` is the order-10 dihedral group acting on
    5 points. Orders 2 and 4 have no faithful action on 1 and 2 points as a
    rotation/reflection pair; they are realized as C2 on 2 points and
    ``⟨(1,2),(3,4)⟩`` on 4 points.
    """
    family = family.lower()
    if family in ("symmetric", "alternating"):
        if not 1 <= n <= SYMMETRIC_CAP:
            raise ClosureCapError(f"{family} degree must be in 1..{SYMMETRIC_CAP}, got {n}")
        if family == "symmetric":
            gens = [] if n < 2 else [_cycle([1, 2], n), _cycle(list(range(1, n + 1)), n)]
            name = f"S{n}"
        else:
            gens = [_cycle([1, 2, k], n) for k in range(3, n + 1)]
            name = f"A{n}"
    elif family == "cyclic":
        if not 1 <= n <= CYCLIC_DIHEDRAL_CAP:
            raise ClosureCapError(f"cyclic order must be in 1..{CYCLIC_DIHEDRAL_CAP}, got {n}")
        gens = [] if n < 2 else [_cycle(list(range(1, n + 1)), n)]
        name = f"C{n}"
    elif family == "dihedral":
        if n < 2 or n % 2 or n > CYCLIC_DIHEDRAL_CAP:
            raise ClosureCapError(
                f"dihedral order must be even and in 2..{CYCLIC_DIHEDRAL_CAP}, got {n}")
        m = n // 2
        name = f"D{n}"
        if m == 1:
            gens, degree = [_cycle([1, 2], 2)], 2
        elif m == 2:
            gens, degree = [_cycle([1, 2], 4), _cycle([3, 4], 4)], 4
        else:
            degree = m
            reflection = Permutation(m, tuple((m - j + 1) % m + 1 for j in range(1, m + 1)))
            gens = [_cycle(list(range(1, m + 1)), m), reflection]
        return close_generators(gens, degree, cap=cap, name=name)
    else:
        raise ValueError(f"unknown group family {family!r}")
    return close_generators(gens, max(n, 1), cap=cap, name=name)


def parse_group_spec(spec: str | None = None, degree: int | None = None,
                     gens: str | None = None, cap: int = DEFAULT_CAP) -> ElementTable:
    """Build a group from ``S<n>``, ``A<n>``, ``C<n>``, ``D<order>``, ``V4``, ``trivial``,
    or from a degree plus ``;``-separated cycle strings."""
    if spec is None:
        if degree is None:
            raise ValueError("either a named group or a degree with generators is required")
        words = [w for w in (gens or "").split(";") if w.strip()]
        perms = [parse_permutation(w, degree) for w in words]
        return close_generators(perms, degree, cap=cap, name=f"<{gens or ''}>")
    s = spec.strip()
    if s.lower() == "trivial":
        return close_generators([], 1, cap=cap, name="trivial")
    if s.upper() == "V4":
        table = named_group("dihedral", 4, cap=cap)
        table.name = "V4"
        return table
    families = {"S": "symmetric", "A": "alternating", "C": "cyclic", "D": "dihedral"}
    head, tail = s[:1].upper(), s[1:]
    if head not in families or not tail.isdigit():
        raise ValueError(f"unrecognized group spec {spec!r}")
    return named_group(families[head], int(tail), cap=cap)
