from .block_seq import (
    Block as Block,
    BlockSeq as BlockSeq,
    BlockSeqStats as BlockSeqStats,
    D1_BLOCK_FACTOR as D1_BLOCK_FACTOR,
)
from .select import (
    select as select,
    split_smallest as split_smallest,
    split_into_runs as split_into_runs,
)
