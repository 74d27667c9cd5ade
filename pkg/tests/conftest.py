import pytest

from pottsloop.solver import LazyTable, ModelSpec, solve_series


@pytest.fixture(scope="session")
def small_table():
    """Symbolic Potts table, region |w| + n <= 7."""
    return solve_series(ModelSpec(kind="potts3", c="symbolic", ng=3, ltarget=4))


@pytest.fixture(scope="session")
def master_table():
    """Symbolic Potts table, region |w| + n <= 12 (acceptance scale)."""
    return solve_series(ModelSpec(kind="potts3", c="symbolic", ng=8, ltarget=4))


@pytest.fixture(scope="session")
def lazy_table():
    """Demand-driven symbolic table for deep amplitude extraction."""
    return LazyTable(ModelSpec(kind="potts3", c="symbolic", ng=6, ltarget=11), max_len=24)


@pytest.fixture(scope="session")
def medium_table():
    """Symbolic Potts table, region |w| + n <= 11 (deep enough for shallow catalog runs)."""
    return solve_series(ModelSpec(kind="potts3", c="symbolic", ng=3, ltarget=8))
