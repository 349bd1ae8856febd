import pytest

from isoposet import all_subgroups, alternating, psl2, sl2_5


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """Shared lattice cache so expensive enumerations run once per session."""
    return str(tmp_path_factory.mktemp("lattice-cache"))


@pytest.fixture(scope="session")
def a5():
    return alternating(5)


@pytest.fixture(scope="session")
def psl25():
    return psl2(5)


@pytest.fixture(scope="session")
def psl27():
    return psl2(7)


@pytest.fixture(scope="session")
def sl25():
    return sl2_5()


@pytest.fixture(scope="session")
def a5_lattice(a5, cache_dir):
    return all_subgroups(a5, cache_dir=cache_dir)


@pytest.fixture(scope="session")
def psl25_lattice(psl25, cache_dir):
    return all_subgroups(psl25, cache_dir=cache_dir)


@pytest.fixture(scope="session")
def psl27_lattice(psl27, cache_dir):
    return all_subgroups(psl27, cache_dir=cache_dir)
