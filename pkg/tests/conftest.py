import pytest

from parres.cli import bundled_ring_text
from parres.harness import parse_ring_spec


def _spec(name):
    return parse_ring_spec(bundled_ring_text(name), name=name)


@pytest.fixture(scope="session")
def r1():
    return _spec("r1")


@pytest.fixture(scope="session")
def r2():
    return _spec("r2")


@pytest.fixture(scope="session")
def regular():
    return _spec("regular")


@pytest.fixture(scope="session")
def hypersurface():
    return _spec("hypersurface")


@pytest.fixture(scope="session")
def nonflc():
    return _spec("nonflc")


@pytest.fixture(scope="session")
def corpus(r1, r2, regular, hypersurface, nonflc):
    return {"r1": r1, "r2": r2, "regular": regular,
            "hypersurface": hypersurface, "nonflc": nonflc}
