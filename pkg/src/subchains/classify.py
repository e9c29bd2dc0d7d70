"""Isomorphism-type labels from cheap invariants.

Within the subgroups of S5 and of small dihedral groups, the tuple
(order, element-order histogram, abelian, center order, derived-subgroup
order) separates every type that occurs. Anything outside the built-in
table is reported as ``unclassified(order=N)`` instead of being guessed.

Stable labels: ``C<n>``, ``V4``, ``C2^<k>``, ``S3``, ``D<order>`` (dihedral of
that order, n/2 >= 4), ``A4``, ``S4``, ``F20``, ``A5``, ``S5``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .group import SubgroupHandle, subgroup_from_generators

__all__ = ["GroupFingerprint", "fingerprint", "classify", "label", "canonical_label", "LABELS"]


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    element_order_histogram: tuple[tuple[int, int], ...]
    is_abelian: bool
    is_cyclic: bool
    center_order: int
    derived_subgroup_order: int

    @property
    def histogram(self) -> dict[int, int]:
        return dict(self.element_order_histogram)


def fingerprint(h: SubgroupHandle) -> GroupFingerprint:
    t = h.parent
    idx = h.indices()
    sub = t.mul[np.ix_(idx, idx)]
    orders, counts = np.unique(t.element_orders()[idx], return_counts=True)
    hist = tuple((int(o), int(c)) for o, c in zip(orders, counts))
    commuting = sub == sub.T
    center = int(commuting.all(axis=1).sum())
    a = idx[:, None]
    b = idx[None, :]
    comms = np.unique(t.mul[t.mul[t.inv[a], t.inv[b]], t.mul[a, b]])
    derived = subgroup_from_generators(t, comms.tolist()).order
    n = len(idx)
    return GroupFingerprint(
        order=n,
        element_order_histogram=hist,
        is_abelian=bool(commuting.all()),
        is_cyclic=n in dict(hist),
        center_order=center,
        derived_subgroup_order=derived,
    )


def _dihedral_fingerprint(order: int) -> GroupFingerprint:
    m = order // 2
    hist: dict[int, int] = {}
    for k in range(m):
        d = m // gcd(k, m)
        hist[d] = hist.get(d, 0) + 1
    hist[2] = hist.get(2, 0) + m
    return GroupFingerprint(
        order=order,
        element_order_histogram=tuple(sorted(hist.items())),
        is_abelian=False,
        is_cyclic=False,
        center_order=1 if m % 2 else 2,
        derived_subgroup_order=m if m % 2 else m // 2,
    )


def _fp(order, hist, center, derived):
    return GroupFingerprint(order, tuple(sorted(hist.items())), False, False, center, derived)


# nonabelian, non-dihedral types occurring inside S5
_TABLE = {
    _fp(12, {1: 1, 2: 3, 3: 8}, 1, 4): "A4",
    _fp(20, {1: 1, 2: 5, 4: 10, 5: 4}, 1, 5): "F20",
    _fp(24, {1: 1, 2: 9, 3: 8, 4: 6}, 1, 12): "S4",
    _fp(60, {1: 1, 2: 15, 3: 20, 5: 24}, 1, 60): "A5",
    _fp(120, {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20}, 1, 60): "S5",
}

LABELS = ("C<n>", "V4", "C2^<k>", "S3", "D<order>", "A4", "S4", "F20", "A5", "S5")

_SYNONYMS = {
    "GA(1,5)": "F20", "AGL(1,5)": "F20", "C5:C4": "F20", "C5⋊C4": "F20",
    "S3xS2": "D12", "S3×S2": "D12", "S3xC2": "D12", "S3×C2": "D12",
    "C2xC2": "V4", "C2×C2": "V4", "D4": "V4", "D6": "S3", "A3": "C3", "D2": "C2",
    "1": "C1", "E": "C1",
}


def classify(fp: GroupFingerprint) -> str:
    n = fp.order
    if fp.is_cyclic:
        return f"C{n}"
    hist = fp.histogram
    if fp.is_abelian:
        if set(hist) == {1, 2}:
            k = n.bit_length() - 1
            return "V4" if n == 4 else f"C2^{k}"
        return f"unclassified(order={n})"
    if fp == _dihedral_fingerprint(n):
        return "S3" if n == 6 else f"D{n}"
    return _TABLE.get(fp, f"unclassified(order={n})")


def label(h: SubgroupHandle) -> str:
    return classify(fingerprint(h))


def canonical_label(name: str) -> str:
    """Map a written group name (``"GA(1,5)"``, ``"C2×C2"``, ``"D_{12}"``...) to the label set."""
    s = name.replace(" ", "").replace("_", "").replace("{", "").replace("}", "")
    s = s.replace("$", "").replace("\\times", "×").replace("\\cong", "")
    return _SYNONYMS.get(s, s)
