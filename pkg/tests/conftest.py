from functools import lru_cache

import pytest

from subchains.group import parse_group_spec
from subchains.lattice import enumerate_subgroups


@lru_cache(maxsize=None)
def _build(spec):
    table = parse_group_spec(spec)
    return table, enumerate_subgroups(table)


@pytest.fixture(scope="session")
def lattice_of():
    """Cached ``spec -> SubgroupLattice`` for named groups like ``"S4"`` or ``"D20"``."""
    return lambda spec: _build(spec)[1]


@pytest.fixture(scope="session")
def s5(lattice_of):
    return lattice_of("S5")
