import pytest

from altans.builders import catalog_benzenoid


@pytest.fixture(scope="session")
def benzene():
    return catalog_benzenoid("benzene")


@pytest.fixture(scope="session")
def naphthalene():
    return catalog_benzenoid("naphthalene")
