#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Neighbor pairs on the circle.

Given sorted circle values and a cutoff ``r < 1/2``, the unordered pairs
``i < j`` within circular distance ``r`` are either direct neighbors
(``x_j - x_i <= r``) or wrap-around neighbors (``x_j - x_i >= 1 - r``).
Both ranges are found with binary search, so a full sweep costs
``O(N log N + matches)``. Pairs are produced in row blocks in a fixed order.
"""

# Standard imports
import logging
from typing import Iterator, Optional, Tuple

# Third party imports
import numpy as np

# Application imports
from ..summation import row_blocks

logger = logging.getLogger(__name__)


def _expand(rows: np.ndarray, starts: np.ndarray, counts: np.ndarray):
    """ Expands per-row column ranges into flat (row, column) index arrays """

    total = int(np.sum(counts))
    if total == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    row_idx = np.repeat(rows, counts)
    offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    col_idx = np.repeat(starts, counts) + offsets
    return row_idx, col_idx


# end _expand()


def iter_pairs(values: np.ndarray,
               radius: Optional[float] = None) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """ Yields blocks of unordered index pairs ``i < j``.

    Args:
        values (ndarray): Sorted circle values.
        radius (float): Circular distance cutoff. ``None`` or a value of at
            least 1/2 yields every pair.

    Yields:
        Tuples ``(i, j)`` of equally long index arrays.
    """

    count = values.shape[0]
    everything = radius is None or radius >= 0.5
    if not everything:
        upper = np.searchsorted(values, values + radius, side="right")
        wrap = np.searchsorted(values, values + 1.0 - radius, side="left")

    for start, stop in row_blocks(count):
        rows = np.arange(start, stop)
        if everything:
            counts = count - rows - 1
            yield _expand(rows, rows + 1, counts)
            continue

        near_counts = np.maximum(upper[start:stop] - rows - 1, 0)
        near_i, near_j = _expand(rows, rows + 1, near_counts)
        wrap_start = np.maximum(wrap[start:stop], rows + 1)
        wrap_counts = np.maximum(count - wrap_start, 0)
        wrap_i, wrap_j = _expand(rows, wrap_start, wrap_counts)
        yield np.concatenate([near_i, wrap_i]), np.concatenate([near_j, wrap_j])


# end iter_pairs()


def circular_gap(values: np.ndarray, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    """ Minimal circular distance between ``values[i]`` and ``values[j]`` """

    gap = values[j] - values[i]
    return np.minimum(np.abs(gap), 1.0 - np.abs(gap))


# end circular_gap()
