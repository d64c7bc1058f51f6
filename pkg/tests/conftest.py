import pytest

from pfaffideal.pfaffian import PfaffianInstance


@pytest.fixture(scope="session")
def p52():
    return PfaffianInstance(5, 2)
