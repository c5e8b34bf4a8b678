from .config import (
    Command as Command,
    GeneratorKind as GeneratorKind,
    GeneratorSpec as GeneratorSpec,
    RunConfig as RunConfig,
)
from .dimacs import (
    parse_dimacs as parse_dimacs,
    write_dimacs as write_dimacs,
    write_distances as write_distances,
    parse_distances as parse_distances,
)
from .generate import SplitMix64 as SplitMix64, generate as generate
from .bench import BenchRow as BenchRow, bench as bench, scaling_spread as scaling_spread
