import pytest

from aisnet import Corpus, build_catalog, build_network
from aisnet.distances import distance_matrix


@pytest.fixture(scope="session")
def corpus():
    return Corpus.build()


@pytest.fixture(scope="session")
def catalog(corpus):
    return build_catalog(corpus.primes)


@pytest.fixture(scope="session")
def dmat(catalog):
    return distance_matrix([e.row for e in catalog])


@pytest.fixture(scope="session")
def graph20(catalog, dmat):
    return build_network(catalog, threshold_sq=20, dmat=dmat)


@pytest.fixture(scope="session")
def by_label(catalog):
    return {e.label: e for e in catalog}
