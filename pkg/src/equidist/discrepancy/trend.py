#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Discrepancy of nested prefixes.

Low-discrepancy sequences keep ``D_N <= C log(N) / N``. ``fit_log_rate``
measures the prefixes of one point set and reports the smallest ``C`` that
covers all of them. This is a trend check on finitely many sizes.
"""

# Standard imports
import logging
import math
from typing import Sequence, Tuple

# Third party imports
import attr

# Application imports
from ..exception import DomainError
from ..pointset import PointSet
from .arcs import DiscrepancyResult, arc_discrepancy

logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class RateFit:
    """ Prefix discrepancies and the fitted constant of ``C log(N) / N`` """

    sizes = attr.ib(type=Tuple[int, ...])
    d_values = attr.ib(type=Tuple[float, ...])
    constant = attr.ib(type=float)

    def is_decreasing_overall(self) -> bool:
        """ Whether the last prefix beats the first; local rises are allowed """
        return self.d_values[-1] < self.d_values[0]

    # end is_decreasing_overall()

# end class RateFit


def log_rate_constant(results: Sequence[DiscrepancyResult]) -> float:
    """ Smallest ``C`` with ``d_n <= C log(N) / N`` for every result with N >= 2.

    Raises:
        ``DomainError`` when no result has at least two points.
    """

    ratios = [result.d_n * result.n_points / math.log(result.n_points)
              for result in results if result.n_points >= 2]
    if not ratios:
        raise DomainError("The log-rate fit needs a prefix with at least two points")
    return max(ratios)


# end log_rate_constant()


def fit_log_rate(pts: PointSet, sizes: Sequence[int]) -> RateFit:
    """ Arc discrepancies of the prefixes of ``pts`` and their fitted constant.

    Args:
        pts (PointSet): Circle points in sequence order.
        sizes (list): Strictly ascending prefix sizes, each at most ``pts.n``.

    Returns:
        A ``RateFit``.
    """

    sizes = tuple(int(n) for n in sizes)
    if not sizes or sizes[0] < 1 or sizes[-1] > pts.n:
        raise DomainError(f"Prefix sizes must lie in 1..{pts.n}, got {sizes}")
    if any(later <= earlier for earlier, later in zip(sizes, sizes[1:])):
        raise DomainError(f"Prefix sizes must be strictly ascending: {sizes}")

    results = [arc_discrepancy(pts.prefix(n)) for n in sizes]
    constant = log_rate_constant(results)
    logger.info("Fitted log-rate constant %.6g for %s over N up to %d",
                constant, pts.label or "input", sizes[-1])
    return RateFit(sizes=sizes, d_values=tuple(result.d_n for result in results),
                   constant=constant)


# end fit_log_rate()
