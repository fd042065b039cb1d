import pytest

from mpqg.lattice import build_bicharacter, parse_cartan_type
from mpqg.ualg import Algebra


def _alg(name):
    datum = parse_cartan_type(name)
    ring, chi = build_bicharacter(datum)
    return Algebra.get(chi)


@pytest.fixture(scope="session")
def a1():
    return _alg("A1")


@pytest.fixture(scope="session")
def a2():
    return _alg("A2")


@pytest.fixture(scope="session")
def b2():
    return _alg("B2")


@pytest.fixture(scope="session")
def g2():
    return _alg("G2")
