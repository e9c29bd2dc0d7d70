import itertools

import numpy as np
import pytest

from subchains.group import ClosureCapError, conjugate, mask_from_indices, named_group, parse_group_spec
from subchains.lattice import (
    SubgroupLattice,
    brute_force_subgroups,
    covering_relation,
    enumerate_subgroups,
    maximal_subgroups,
)


def all_subsets_oracle(table):
    """Every subset of the elements tested for closure, no pruning at all."""
    n = table.order
    found = set()
    for r in range(1, n + 1):
        for subset in itertools.combinations(range(n), r):
            member = np.zeros(n, dtype=bool)
            member[list(subset)] = True
            if member[table.mul[np.ix_(subset, subset)]].all():
                found.add(mask_from_indices(subset, n))
    return found


def naive_covers(masks):
    sub = lambda x, y: x != y and x & y == x  # noqa: E731
    return {(x, y) for x in masks for y in masks
            if sub(x, y) and not any(sub(x, z) and sub(z, y) for z in masks)}


def test_s3_against_every_subset():
    s3 = named_group("symmetric", 3)
    lat = enumerate_subgroups(s3)
    assert len(lat) == 6
    assert set(lat.masks) == all_subsets_oracle(s3)


@pytest.mark.parametrize("spec, count", [("S3", 6), ("S4", 30), ("A4", 10), ("V4", 5), ("D8", 10),
                                         ("C12", 6), ("D20", 22), ("trivial", 1)])
def test_join_closure_matches_brute_force(lattice_of, spec, count):
    lat = lattice_of(spec)
    assert len(lat) == count
    assert set(lat.masks) == brute_force_subgroups(lat.parent)


@pytest.mark.parametrize("spec, count", [("S3", 6), ("S4", 30), ("A5", 59), ("S5", 156)])
def test_two_seed_orders_agree(lattice_of, spec, count):
    lat = lattice_of(spec)
    other = enumerate_subgroups(lat.parent, seed_order="reverse")
    assert len(lat) == count
    assert set(other.masks) == set(lat.masks)


def test_conjugacy_reduction_gives_the_same_nodes(lattice_of):
    for spec in ("S4", "A5", "S5"):
        lat = lattice_of(spec)
        reduced = enumerate_subgroups(lat.parent, conjugacy_reduction=True)
        assert reduced.masks == lat.masks


def test_lattice_cap():
    with pytest.raises(ClosureCapError):
        enumerate_subgroups(named_group("symmetric", 5), cap=100)
    with pytest.raises(ValueError):
        enumerate_subgroups(named_group("symmetric", 3), seed_order="sideways")


def test_brute_force_limit():
    with pytest.raises(ClosureCapError):
        brute_force_subgroups(named_group("symmetric", 5))


@pytest.mark.parametrize("spec", ["S4", "A5", "S5"])
def test_lattice_is_conjugation_stable(lattice_of, spec):
    lat = lattice_of(spec)
    masks = set(lat.masks)
    for i in range(len(lat)):
        h = lat.handle(i)
        for g in range(lat.parent.order):
            assert conjugate(h, g).mask in masks


def test_node_ordering_and_ends(s5):
    keys = [(m.bit_count(), m) for m in s5.masks]
    assert keys == sorted(keys)
    assert s5.order(s5.bottom) == 1
    assert s5.order(s5.top) == 120


def test_maximal_subgroups_examples(lattice_of, s5):
    assert maximal_subgroups(s5, s5.bottom) == []
    assert s5.order_histogram(maximal_subgroups(s5, s5.top)) == {12: 10, 20: 6, 24: 5, 60: 1}
    s4 = lattice_of("S4")
    assert s4.order_histogram(maximal_subgroups(s4, s4.top)) == {6: 4, 8: 3, 12: 1}


@pytest.mark.parametrize("spec, pairs", [("C4", 2), ("V4", 6), ("S3", 8), ("trivial", 0)])
def test_covering_pair_counts(lattice_of, spec, pairs):
    lat = lattice_of(spec)
    covers = covering_relation(lat)
    assert len(covers) == pairs
    oracle = naive_covers(all_subsets_oracle(lat.parent))
    assert {(lat.masks[x], lat.masks[y]) for x, y in covers} == oracle


@pytest.mark.parametrize("spec", ["S4", "A5", "D24"])
def test_covers_have_no_shortcuts(lattice_of, spec):
    lat = lattice_of(spec)
    covers = set(covering_relation(lat))
    strict = {(x, y) for x in range(len(lat)) for y in range(len(lat))
              if x != y and lat.contains(x, y)}
    assert covers <= strict
    assert len(covers) <= len(strict)
    assert {(lat.masks[x], lat.masks[y]) for x, y in covers} == naive_covers(lat.masks)


def test_from_masks_rebuilds_the_same_order(lattice_of):
    lat = lattice_of("S4")
    again = SubgroupLattice.from_masks(lat.parent, reversed(lat.masks))
    assert again.masks == lat.masks
    assert again.covers == lat.covers


def test_sublattice_matches_down_set(s5):
    a5 = next(m for m in s5.lower_covers[s5.top] if s5.order(m) == 60)
    sub = s5.sublattice(a5)
    assert len(sub) == 59
    assert sub.order(sub.top) == 60


def test_duplicate_and_incomplete_masks_rejected():
    t = parse_group_spec("S3")
    with pytest.raises(ValueError):
        SubgroupLattice(t, [1, 1, (1 << 6) - 1], [(), (), ()])
    with pytest.raises(ValueError):
        SubgroupLattice(t, [1], [()])
