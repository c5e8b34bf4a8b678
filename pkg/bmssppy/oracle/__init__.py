from .dijkstra import dijkstra as dijkstra, dijkstra_into as dijkstra_into
from .bellman_ford import bellman_ford as bellman_ford
from .verify import (
    VerifyReport as VerifyReport,
    oracle_keys as oracle_keys,
    verify as verify,
)
