from typing import Optional


class BmsspError(Exception):
    """Base class for every error raised by bmssppy."""


class InputError(BmsspError, ValueError):
    """Malformed or out-of-contract user input (graph data, files, specs)."""


class NegativeWeight(InputError):
    def __init__(self, u: int, v: int, weight: float):
        super().__init__(f"Edge ({u}, {v}) has negative weight {weight!r}")
        self.u, self.v, self.weight = u, v, weight


class BadVertexId(InputError):
    def __init__(self, vertex: int, vertex_count: int):
        super().__init__(
            f"Vertex id {vertex!r} out of range [0, {vertex_count})"
        )
        self.vertex, self.vertex_count = vertex, vertex_count


class ParseError(InputError):
    def __init__(self, message: str, line_no: Optional[int] = None):
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line_no = line_no


class CountMismatch(InputError):
    def __init__(self, declared: int, found: int):
        super().__init__(f"Header declares {declared} arcs, found {found}")
        self.declared, self.found = declared, found


class BadSpec(InputError):
    """Invalid generator or run configuration."""


class FractionalWeight(InputError):
    def __init__(self, weight: str, line_no: Optional[int] = None):
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(
            f"{prefix}weight {weight!r} is not an integer (integer-weight mode)"
        )
        self.line_no = line_no


class ContractError(BmsspError, RuntimeError):
    """A caller broke an operation's precondition; signals a bug."""


class Unreached(ContractError):
    def __init__(self, vertex: int):
        super().__init__(f"Vertex {vertex} has no finite estimate")
        self.vertex = vertex


class BadCapacity(ContractError):
    def __init__(self, capacity: int):
        super().__init__(f"Block capacity must be >= 1, got {capacity}")


class ValueAboveBound(ContractError):
    def __init__(self, key: int, value, bound):
        super().__init__(
            f"Value {value} for key {key} is not below the bound {bound}"
        )


class OrderViolation(ContractError):
    """Batch-prepended values must precede every live value."""


class NotSingleton(ContractError):
    def __init__(self, size: int):
        super().__init__(f"Base case expects a single source, got {size}")


class FrontierTooLarge(ContractError):
    def __init__(self, size: int, limit: int, level: int):
        super().__init__(
            f"Frontier of size {size} exceeds 2^(l*t) = {limit} at level {level}"
        )


class InvariantViolation(ContractError):
    """Raised by the instrumented verification mode."""
