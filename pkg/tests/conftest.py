import sys
from pathlib import Path

import pytest

# braid/plat generators live in tools/; they are dev-only helpers, not
# package code, but the move-pair tests use them to build diagrams.
sys.path.insert(0, str(Path(__file__).parent.parent / "tools"))

from mcbiq import AlexanderParams, alexander_mcb, load_mcb, trivial_extension

DATA = Path(__file__).parent.parent / "src" / "mcbiq" / "data"


def data_mcb(name):
    return load_mcb(DATA / name)


@pytest.fixture(scope="session")
def ex33():
    return data_mcb("ex33.mcb")


@pytest.fixture(scope="session")
def ex34():
    return data_mcb("ex34.mcb")


@pytest.fixture(scope="session")
def x3():
    return data_mcb("ex211.mcb")


@pytest.fixture(scope="session")
def x4():
    return data_mcb("ex38.mcb")


@pytest.fixture(scope="session")
def trivial2():
    return data_mcb("trivial2.mcb")


@pytest.fixture(scope="session")
def alex3():
    return alexander_mcb(AlexanderParams(3, 2, 1, 2, 2))


def dihedral_trivial(n=3):
    """Trivial extension of the dihedral quandle on {1..n}."""
    under = tuple(tuple((2 * y - x - 1) % n + 1 for y in range(1, n + 1))
                  for x in range(1, n + 1))
    over = tuple(tuple(x for _ in range(n)) for x in range(1, n + 1))
    return trivial_extension(under, over)
