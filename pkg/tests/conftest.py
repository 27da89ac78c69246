import pytest

from lattik import corpus


@pytest.fixture(scope="session")
def std():
    return corpus.standard_lattices()


@pytest.fixture(scope="session")
def corpus4():
    return corpus.lattice_corpus(4)


@pytest.fixture(scope="session")
def corpus5():
    return corpus.lattice_corpus(5)


@pytest.fixture(scope="session")
def corpus6():
    return corpus.lattice_corpus(6)


@pytest.fixture(scope="session")
def spaces3():
    return corpus.space_corpus(3)
