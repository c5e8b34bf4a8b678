"""
DIMACS shortest-path format (`p sp <n> <m>` header, `a <u> <v> <w>` arcs,
1-based ids) and the `<id> <distance|inf>` distances format.
"""
import math
from typing import List, Optional, Sequence

from ..errors import CountMismatch, FractionalWeight, ParseError
from ..graph import Graph, build_graph

INF_TOKEN = "inf"


def format_number(value: float) -> str:
    """Shortest text that parses back to the same float; `inf` for infinity."""
    if value == math.inf:
        return INF_TOKEN
    if float(value).is_integer() and abs(value) < 2**53:
        return str(int(value))
    return repr(float(value))


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", line_no) from None


def _parse_weight(token: str, line_no: int, integer_weights: bool) -> float:
    try:
        weight = float(token)
    except ValueError:
        raise ParseError(f"weight {token!r} is not a number", line_no) from None
    if not math.isfinite(weight):
        raise ParseError(f"weight {token!r} is not finite", line_no)
    if weight < 0:
        raise ParseError(f"weight {token!r} is negative", line_no)
    if integer_weights and not weight.is_integer():
        raise FractionalWeight(token, line_no)
    return weight


def parse_dimacs(text: str, integer_weights: bool = False) -> Graph:
    """
    Parse a DIMACS shortest-path file into a Graph with 0-based ids.

    Args:
        text (str): File contents.
        integer_weights (bool): Reject fractional weights.

    Raises:
        ParseError: On a malformed line (with its line number).
        CountMismatch: If the arc count differs from the header.
        FractionalWeight: In integer-weight mode, on a fractional weight.

    Returns:
        Graph: The parsed graph.
    """
    header: Optional[tuple] = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if header is not None:
                raise ParseError("duplicate problem line", line_no)
            if len(tokens) != 4 or tokens[1] != "sp":
                raise ParseError("expected 'p sp <n> <m>'", line_no)
            n = _parse_int(tokens[2], line_no, "vertex count")
            m = _parse_int(tokens[3], line_no, "arc count")
            if n < 0 or m < 0:
                raise ParseError("negative count in problem line", line_no)
            header = (n, m)
        elif tag == "a":
            if header is None:
                raise ParseError("arc before problem line", line_no)
            if len(tokens) != 4:
                raise ParseError("expected 'a <u> <v> <w>'", line_no)
            u = _parse_int(tokens[1], line_no, "vertex id")
            v = _parse_int(tokens[2], line_no, "vertex id")
            for vertex in (u, v):
                if not 1 <= vertex <= header[0]:
                    raise ParseError(
                        f"vertex id {vertex} out of range [1, {header[0]}]", line_no
                    )
            edges.append((u - 1, v - 1, _parse_weight(tokens[3], line_no, integer_weights)))
        else:
            raise ParseError(f"unknown line type {tag!r}", line_no)
    if header is None:
        raise ParseError("missing problem line")
    if len(edges) != header[1]:
        raise CountMismatch(header[1], len(edges))
    return build_graph(header[0], edges)


def write_dimacs(g: Graph, comment: Optional[str] = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p sp {g.vertex_count} {g.edge_count}")
    lines.extend(
        f"a {u + 1} {v + 1} {format_number(w)}" for u, v, w in g.edges
    )
    return "\n".join(lines) + "\n"


def write_distances(distances: Sequence[float]) -> str:
    """
    One `<1-based id> <distance|inf>` line per vertex.
    """
    return "\n".join(
        f"{vertex + 1} {format_number(distance)}"
        for vertex, distance in enumerate(distances)
    )


def parse_distances(text: str) -> List[float]:
    """
    Read a distances file back; ids must run 1, 2, ... in order.

    Raises:
        ParseError: On a malformed or out-of-order line.
    """
    distances: List[float] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise ParseError("expected '<id> <distance>'", line_no)
        vertex = _parse_int(tokens[0], line_no, "vertex id")
        if vertex != len(distances) + 1:
            raise ParseError(f"expected vertex {len(distances) + 1}, got {vertex}", line_no)
        try:
            distances.append(float(tokens[1]))
        except ValueError:
            raise ParseError(f"distance {tokens[1]!r} is not a number", line_no) from None
    return distances
