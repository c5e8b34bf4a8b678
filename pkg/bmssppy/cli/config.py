import logging
from argparse import Namespace
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from ..errors import BadSpec

# Default integer weight range of generated graphs
DEFAULT_WEIGHT_RANGE = (1, 2**20)

# Default bench sizes (vertex counts) and edges per vertex
DEFAULT_BENCH_SIZES = (4096, 65536, 1048576)
BENCH_DEGREE = 4


class Command(Enum):
    """
    CLI subcommands.
    """

    Solve = "solve"
    Verify = "verify"
    Gen = "gen"
    Bench = "bench"

    def __str__(self):
        return self.value

    @classmethod
    def from_str(cls, value: str) -> "Command":
        if value.lower() == "generate":
            value = cls.Gen.value
        for member in cls:
            if member.value == value.lower():
                return member
        raise BadSpec(f"Unknown command: {value}")


class GeneratorKind(Enum):
    """
    Families of generated graphs.
    """

    Random = "random"
    Path = "path"
    Grid = "grid"
    Layered = "layered"

    def __str__(self):
        return self.value

    @classmethod
    def from_str(cls, value: str) -> "GeneratorKind":
        for member in cls:
            if member.value == value.lower():
                return member
        raise BadSpec(f"Unknown generator kind: {value}")


@dataclass
class GeneratorSpec:
    """
    Fully determines a generated graph.

    Attributes:
        kind (GeneratorKind): Graph family.
        n (int): Vertex count.
        m (int): Edge count (random graphs only).
        weight_low (float): Smallest weight.
        weight_high (float): Largest weight.
        seed (int): PRNG seed.
        integer_weights (bool): Draw integer-valued weights.
    """

    kind: GeneratorKind
    n: int
    m: int = 0
    weight_low: float = DEFAULT_WEIGHT_RANGE[0]
    weight_high: float = DEFAULT_WEIGHT_RANGE[1]
    seed: int = 0
    integer_weights: bool = True

    def validate(self) -> "GeneratorSpec":
        """
        Raises:
            BadSpec: On a non-positive n, a negative m or a bad weight range.
        """
        if self.n < 1:
            raise BadSpec(f"n must be >= 1, got {self.n}")
        if self.m < 0:
            raise BadSpec(f"m must be >= 0, got {self.m}")
        if not 0 <= self.weight_low <= self.weight_high:
            raise BadSpec(
                f"Weight range [{self.weight_low}, {self.weight_high}] is invalid"
            )
        if self.integer_weights and not (
            float(self.weight_low).is_integer() and float(self.weight_high).is_integer()
        ):
            raise BadSpec("Integer weights need integer range endpoints")
        return self


@dataclass
class RunConfig:
    """
    One CLI invocation, decoupled from argparse.
    """

    command: Command
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    source: int = 1
    distances_path: Optional[str] = None
    trace_path: Optional[str] = None
    force_bmssp: bool = False
    integer_weights: bool = False
    generator: Optional[GeneratorSpec] = None
    sizes: List[int] = field(default_factory=lambda: list(DEFAULT_BENCH_SIZES))
    trials: int = 1
    seed: int = 0
    verbose: int = 0

    @property
    def log_level(self) -> Optional[int]:
        """Level requested by -v flags; None leaves the environment default."""
        if not self.verbose:
            return None
        return logging.DEBUG if self.verbose > 1 else logging.INFO

    @classmethod
    def from_args(cls, args: Namespace) -> "RunConfig":
        """
        Builds a RunConfig from parsed arguments.

        Args:
            args (Namespace): Output of the CLI parser.

        Raises:
            BadSpec: On inconsistent arguments.
        """
        command = Command.from_str(args.command)
        config = cls(
            command=command,
            input_path=getattr(args, "input", None),
            output_path=getattr(args, "output", None),
            source=getattr(args, "source", 1),
            distances_path=getattr(args, "distances", None),
            trace_path=getattr(args, "trace", None),
            force_bmssp=getattr(args, "force_bmssp", False),
            integer_weights=getattr(args, "integer_weights", False),
            trials=getattr(args, "trials", 1),
            seed=getattr(args, "seed", 0),
            verbose=getattr(args, "verbose", 0),
        )
        if command is Command.Gen:
            config.generator = GeneratorSpec(
                kind=GeneratorKind.from_str(args.kind),
                n=args.n,
                m=args.m,
                weight_low=args.weight_low,
                weight_high=args.weight_high,
                seed=args.seed,
                integer_weights=not args.float_weights,
            ).validate()
        if command is Command.Bench:
            config.sizes = [int(size) for size in args.sizes.split(",") if size]
            if config.sizes != sorted(config.sizes) or not config.sizes:
                raise BadSpec(f"Bench sizes must be ascending: {args.sizes}")
            if config.trials < 1:
                raise BadSpec(f"trials must be >= 1, got {config.trials}")
        if command in (Command.Solve, Command.Verify) and config.source < 1:
            raise BadSpec(f"Source ids are 1-based, got {config.source}")
        return config
