import pytest

from seth_lab.gadgets import params_desk


@pytest.fixture(scope="session")
def desk1():
    return params_desk(1)


@pytest.fixture(scope="session")
def desk2():
    return params_desk(2)


@pytest.fixture(scope="session")
def desk3():
    return params_desk(3)
