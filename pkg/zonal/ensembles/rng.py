"""Counter-based random streams.

Sample index i lives in block ``i // block_size``; every block owns a Philox
stream keyed by the run seed with the block number in the counter, so a
block's draws never depend on which worker produced them.
"""

import numpy as np

from ..config import settings

_MASK64 = (1 << 64) - 1


def block_rng(seed: int, block: int) -> np.random.Generator:
    bitgen = np.random.Philox(key=seed & _MASK64, counter=[0, block, 0, 0])
    return np.random.Generator(bitgen)


def block_ranges(n_samples: int, block_size: int | None = None) -> list[tuple[int, int]]:
    """(block index, block length) pairs covering ``n_samples`` draws."""
    size = block_size or settings.BLOCK_SIZE
    full, rest = divmod(n_samples, size)
    ranges = [(b, size) for b in range(full)]
    if rest:
        ranges.append((full, rest))
    return ranges
