#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact discrepancy of circle point sets.

The arc discrepancy is the supremum over all arcs ``J`` of
``|#(J ∩ X) / N - |J||``. Between consecutive data points the deviation is
linear in each endpoint, so the supremum is reached in the limit of arcs
whose endpoints sit at data points: closed arcs for an excess of points
and open arcs for a deficit. With ``M`` distinct values both families have
``M^2`` members.
"""

# Standard imports
import logging
from typing import Tuple

# Third party imports
import attr
import numpy as np

# Application imports
from ..pointset import PointSet
from ..exception import DomainError
from ..summation import row_blocks

logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class DiscrepancyResult:
    """ Arc discrepancy with an arc attaining it.

    ``witness_arc`` is ``(a, b)`` with ``a`` in [0, 1) and
    ``a <= b <= a + 1``; ``closed`` tells whether the witness includes its
    endpoints (excess of points) or excludes them (deficit).
    """

    d_n = attr.ib(type=float)
    witness_arc = attr.ib(type=Tuple[float, float])
    n_points = attr.ib(type=int)
    closed = attr.ib(type=bool, default=True)

# end class DiscrepancyResult


def _circle_values(pts: PointSet) -> np.ndarray:
    """ Sorted values of a nonempty circle point set """

    if not isinstance(pts, PointSet) or pts.space != "circle":
        raise DomainError("Discrepancy needs a circle PointSet")
    pts.require_nonempty()
    return np.asarray(pts.sorted_values())


# end _circle_values()


def _best_in_block(dev: np.ndarray, lefts: np.ndarray, lengths: np.ndarray):
    """ Position of the maximal deviation, ties going to the smallest left
    end and then the smallest length.
    """

    top = dev.max()
    rows, cols = np.nonzero(dev == top)
    order = np.lexsort((lengths[rows, cols], lefts[rows]))
    return top, rows[order[0]], cols[order[0]]


# end _best_in_block()


def arc_discrepancy(pts: PointSet) -> DiscrepancyResult:
    """ Exact arc discrepancy in ``O(M^2)`` for ``M`` distinct values.

    Args:
        pts (PointSet): Circle points.

    Returns:
        A ``DiscrepancyResult``.

    Raises:
        ``DomainError`` for an empty point set.
    """

    values = _circle_values(pts)
    count = values.shape[0]
    unique, weights = np.unique(values, return_counts=True)
    distinct = unique.shape[0]

    # Cyclic prefix counts over two laps of the distinct values
    prefix = np.concatenate([[0], np.cumsum(np.concatenate([weights, weights]))])
    offsets = np.arange(distinct + 1)

    best = None
    for start, stop in row_blocks(distinct):
        rows = np.arange(start, stop)[:, None]
        ends = (rows + offsets[None, :]) % distinct
        lengths = np.clip(np.mod(unique[ends] - unique[rows], 1.0), 0.0, 1.0)
        lengths[:, -1] = 1.0
        lefts = unique[start:stop]

        # Closed arcs span offsets 0 .. M-1, open arcs 1 .. M
        closed_count = prefix[rows + offsets[None, :] + 1] - prefix[rows]
        closed_dev = closed_count[:, :-1] / count - lengths[:, :-1]
        open_count = prefix[rows + offsets[None, 1:]] - prefix[rows + 1]
        open_dev = lengths[:, 1:] - open_count / count

        for dev, lens, closed in ((closed_dev, lengths[:, :-1], True),
                                  (open_dev, lengths[:, 1:], False)):
            top, row, col = _best_in_block(dev, lefts, lens)
            key = (-top, lefts[row], lens[row, col], not closed)
            if best is None or key < best[0]:
                best = (key, lefts[row], lens[row, col], closed)

    (neg_top, _, _, _), left, length, closed = best
    logger.debug("arc_discrepancy N=%d M=%d d=%.17g", count, distinct, -neg_top)
    return DiscrepancyResult(d_n=float(-neg_top),
                             witness_arc=(float(left), float(left + length)),
                             n_points=count, closed=bool(closed))


# end arc_discrepancy()


def star_discrepancy(pts: PointSet) -> float:
    """ Anchored discrepancy over intervals ``[0, a)``.

    Uses ``max_i max(i / N - x_(i), x_(i) - (i - 1) / N)`` over the sorted
    values.
    """

    values = _circle_values(pts)
    count = values.shape[0]
    ranks = np.arange(1, count + 1, dtype=float)
    upper = ranks / count - values
    lower = values - (ranks - 1.0) / count
    return float(max(upper.max(), lower.max()))


# end star_discrepancy()
