"""
Deterministic graph generators driven by a SplitMix64 stream.

SplitMix64 (state += 0x9E3779B97F4A7C15; z = state; z = (z ^ z >> 30) *
0xBF58476D1CE4E5B9; z = (z ^ z >> 27) * 0x94D049BB133111EB; z ^ z >> 31, all
mod 2^64) gives identical graphs for a seed on every platform.
"""
import math
from typing import Callable, Dict, List

from ..graph import Graph, build_graph
from ..utils import Logger
from .config import GeneratorKind, GeneratorSpec

log = Logger(name="Generator")

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB

# Out-edges from each layered vertex into the next layer
LAYERED_FANOUT = 3


class SplitMix64:
    """64-bit mixing PRNG."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def uniform(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def _weight_sampler(spec: GeneratorSpec, rng: SplitMix64) -> Callable[[], float]:
    low, high = spec.weight_low, spec.weight_high
    if spec.integer_weights:
        span = int(high) - int(low) + 1
        return lambda: float(int(low) + rng.below(span))
    return lambda: low + (high - low) * rng.uniform()


def _random(spec: GeneratorSpec, rng: SplitMix64) -> List[tuple]:
    weight = _weight_sampler(spec, rng)
    edges = []
    for _ in range(spec.m):
        u = rng.below(spec.n)
        v = rng.below(spec.n)
        edges.append((u, v, weight()))
    return edges


def _path(spec: GeneratorSpec, rng: SplitMix64) -> List[tuple]:
    return [(i, i + 1, 1.0) for i in range(spec.n - 1)]


def _grid(spec: GeneratorSpec, rng: SplitMix64) -> List[tuple]:
    weight = _weight_sampler(spec, rng)
    width = max(1, math.isqrt(spec.n))
    edges = []
    for v in range(spec.n):
        row, col = divmod(v, width)
        neighbors = []
        if col + 1 < width:
            neighbors.append(v + 1)
        if col > 0:
            neighbors.append(v - 1)
        neighbors.append(v + width)
        if row > 0:
            neighbors.append(v - width)
        for u in neighbors:
            if 0 <= u < spec.n:
                edges.append((v, u, weight()))
    return edges


def _layered(spec: GeneratorSpec, rng: SplitMix64) -> List[tuple]:
    """
    Vertex 0 feeds the first layer; each vertex feeds LAYERED_FANOUT
    consecutive vertices of the next layer, all with weight 1, so most
    vertices are reached by several equal-length routes.
    """
    width = max(2, math.isqrt(max(spec.n - 1, 1)))
    layers = [list(range(start, min(start + width, spec.n))) for start in range(1, spec.n, width)]
    edges = []
    if layers:
        edges.extend((0, v, 1.0) for v in layers[0])
    for current, following in zip(layers, layers[1:]):
        offset = rng.below(len(following))
        for index, u in enumerate(current):
            for step in range(min(LAYERED_FANOUT, len(following))):
                v = following[(index + offset + step) % len(following)]
                edges.append((u, v, 1.0))
    return edges


GENERATORS: Dict[GeneratorKind, Callable[[GeneratorSpec, SplitMix64], List[tuple]]] = {
    GeneratorKind.Random: _random,
    GeneratorKind.Path: _path,
    GeneratorKind.Grid: _grid,
    GeneratorKind.Layered: _layered,
}


def generate(spec: GeneratorSpec) -> Graph:
    """
    Build the graph described by spec; a pure function of spec.

    Raises:
        BadSpec: If the generator spec does not validate.
    """
    spec.validate()
    rng = SplitMix64(spec.seed)
    edges = GENERATORS[spec.kind](spec, rng)
    log.info(f"Generated {spec.kind} graph: n={spec.n} m={len(edges)} seed={spec.seed}")
    return build_graph(spec.n, edges)
