#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Deterministic summation helpers.

All pair sums in the library are reduced the same way: values are cut into
fixed-size blocks, each block is summed by numpy, and the block sums are
combined by a balanced binary tree. The result depends only on the order of
the values and the block size, never on how the work was scheduled, so
results are bit-stable across runs.
"""

# Standard imports
import logging
from typing import Iterator, List, Tuple

# Third party imports
import numpy as np

logger = logging.getLogger(__name__)

# Number of values per leaf block
BLOCK_SIZE = 4096

# Number of rows per block for O(N^2) pair loops
ROW_BLOCK = 256


def tree_reduce(partials: List[float]) -> float:
    """ Combines partial sums with a balanced binary tree.

    Args:
        partials (list): Partial sums in a fixed order.

    Returns:
        The total as a float; 0.0 for an empty list.
    """

    level = [float(value) for value in partials]
    if not level:
        return 0.0
    while len(level) > 1:
        paired = [level[i] + level[i + 1] for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return level[0]


# end tree_reduce()


def pairwise_sum(values, block_size: int = BLOCK_SIZE) -> float:
    """ Sums an array with fixed-block pairwise reduction.

    Args:
        values (array_like): Values to add, flattened in C order.
        block_size (int): Leaf block size.

    Returns:
        The sum as a float.
    """

    flat = np.ravel(np.asarray(values, dtype=float))
    partials = [np.sum(flat[start:start + block_size])
                for start in range(0, flat.size, block_size)]
    return tree_reduce(partials)


# end pairwise_sum()


def row_blocks(n: int, block: int = ROW_BLOCK) -> Iterator[Tuple[int, int]]:
    """ Yields half-open ``(start, stop)`` index ranges covering ``range(n)`` """

    for start in range(0, n, block):
        yield start, min(start + block, n)


# end row_blocks()


class BlockAccumulator:
    """ Collects per-block partial sums and reduces them deterministically.

    The caller adds block contributions in a fixed order; ``total()``
    combines them with ``tree_reduce``.
    """

    def __init__(self):
        """ Constructor """
        self._partials = []

    # end __init__()

    def add(self, values):
        """ Adds the pairwise sum of an array of values as one partial """
        self._partials.append(pairwise_sum(values))

    # end add()

    def add_scalar(self, value: float):
        """ Adds a precomputed partial sum """
        self._partials.append(float(value))

    # end add_scalar()

    def total(self) -> float:
        """ Returns the reduced total """
        return tree_reduce(self._partials)

    # end total()

    def __len__(self):
        return len(self._partials)

# end class BlockAccumulator
