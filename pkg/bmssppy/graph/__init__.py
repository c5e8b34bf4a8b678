from .keys import (
    PathKey as PathKey,
    Bound as Bound,
    INFINITY as INFINITY,
    Ordering as Ordering,
    compare_keys as compare_keys,
    in_range as in_range,
)
from .graph import (
    Graph as Graph,
    TransformedGraph as TransformedGraph,
    build_graph as build_graph,
    to_constant_degree as to_constant_degree,
)
from .state import (
    OpCounters as OpCounters,
    SsspState as SsspState,
    try_relax as try_relax,
    path_key_of as path_key_of,
    reset_counters as reset_counters,
    read_counters as read_counters,
)
from .heap import CountingHeap as CountingHeap
