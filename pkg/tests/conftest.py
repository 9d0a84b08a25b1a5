import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from actkit.corpus import generate_corpus  # noqa: E402
from actkit.monoid import standard_monoid  # noqa: E402
from actkit.suites import CorpusIndex  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus()


@pytest.fixture(scope="session")
def index(corpus):
    return CorpusIndex(corpus)


@pytest.fixture(scope="session")
def z2():
    return standard_monoid("cyclic_group", 2)


@pytest.fixture(scope="session")
def chain2():
    return standard_monoid("semilattice_chain", 2)


@pytest.fixture(scope="session")
def si2():
    return standard_monoid("symmetric_inverse", 2)
