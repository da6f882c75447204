import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import pytest

from kmcat.cartan import validate_gcm
from kmcat.klr import KLRParams


@pytest.fixture(scope="session")
def a1():
    return validate_gcm([[2]])


@pytest.fixture(scope="session")
def a2():
    return validate_gcm([[2, -1], [-1, 2]])


@pytest.fixture(scope="session")
def b2():
    return validate_gcm([[2, -2], [-1, 2]])


@pytest.fixture(scope="session")
def g2():
    return validate_gcm([[2, -3], [-1, 2]])


@pytest.fixture(scope="session")
def a1hat():
    return validate_gcm([[2, -2], [-2, 2]])


@pytest.fixture(scope="session")
def a1xa1():
    return validate_gcm([[2, 0], [0, 2]])


@pytest.fixture(scope="session")
def p_a1(a1):
    return KLRParams.make(a1)


@pytest.fixture(scope="session")
def p_a2(a2):
    return KLRParams.make(a2)


@pytest.fixture(scope="session")
def p_b2(b2):
    return KLRParams.make(b2)


@pytest.fixture(scope="session")
def p_a1xa1(a1xa1):
    return KLRParams.make(a1xa1)


@pytest.fixture(scope="session")
def p_a1hat(a1hat):
    from fractions import Fraction

    return KLRParams.make(a1hat, s_map={(0, 1, 1, 1): Fraction(1)})


FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
