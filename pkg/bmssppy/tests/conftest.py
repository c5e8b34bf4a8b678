import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bmssppy.cli import GeneratorKind, GeneratorSpec, generate
from bmssppy.graph import Graph, build_graph

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

MAX_WEIGHT = 2**20


def random_graph(seed: int, n: int, m: int, integer_weights: bool = True) -> Graph:
    return generate(
        GeneratorSpec(
            kind=GeneratorKind.Random,
            n=n,
            m=m,
            weight_low=0,
            weight_high=MAX_WEIGHT,
            seed=seed,
            integer_weights=integer_weights,
        )
    )


def layered_graph(seed: int, n: int) -> Graph:
    return generate(GeneratorSpec(kind=GeneratorKind.Layered, n=n, seed=seed))


@st.composite
def graphs(draw, max_n: int = 64, max_weight: int = MAX_WEIGHT) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    vertex = st.integers(min_value=0, max_value=n - 1)
    weight = st.integers(min_value=0, max_value=max_weight).map(float)
    edges = draw(st.lists(st.tuples(vertex, vertex, weight), max_size=4 * n))
    return build_graph(n, edges)


@pytest.fixture
def triangle() -> Graph:
    return build_graph(3, [(0, 1, 1.0), (0, 2, 4.0), (1, 2, 2.0)])


@pytest.fixture
def star() -> Graph:
    return build_graph(4, [(0, 1, 1.0), (0, 2, 2.0), (0, 3, 3.0)])
