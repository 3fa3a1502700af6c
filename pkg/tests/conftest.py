import pytest
from hypothesis import HealthCheck, settings

from parakit.graphlab.canon import enumerate_graphs
from parakit.graphlab.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def corpus7() -> list[Graph]:
    return enumerate_graphs(7)


@pytest.fixture(scope="session")
def corpus6(corpus7) -> list[Graph]:
    return [g for g in corpus7 if g.n <= 6]


@pytest.fixture(scope="session")
def corpus5(corpus7) -> list[Graph]:
    return [g for g in corpus7 if g.n <= 5]
