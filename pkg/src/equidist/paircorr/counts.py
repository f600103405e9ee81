#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Pair-correlation counts on the circle.

The normalized count at scale ``s`` is

    F(s) = (1 / N^(2 - alpha)) #{(m, n), m != n : d(x_m, x_n) <= s / N^alpha}

with circular distance ``d``. Poissonian pair correlation (``alpha = 1``)
and weak pair correlation (``alpha < 1``) both ask for ``F(s) -> 2 s``.
Including identical indices adds ``N^(alpha - 1)``.
"""

# Standard imports
import logging
import math
from typing import Sequence, Tuple

# Third party imports
import attr
import numpy as np

# Application imports
from ..exception import DomainError
from ..kernel.theta import DEFAULT_TOL, theta
from ..pointset import PointSet

logger = logging.getLogger(__name__)

# Absolute slack on the distance cutoff for rounding in differences
_DIST_SLACK = 1e-15

# Largest deviation from 2s still read as pair correlation at finite N
DEFAULT_PC_TOL = 0.2


@attr.s(frozen=True)
class PairCorrCurve:
    """ Normalized pair counts sampled over a grid of scales """

    alpha = attr.ib(type=float)
    s_grid = attr.ib(type=np.ndarray)
    values = attr.ib(type=np.ndarray)
    include_diagonal = attr.ib(type=bool)
    n_points = attr.ib(type=int, default=0)

    def diagonal_share(self) -> float:
        """ Contribution ``N^(alpha - 1)`` of identical indices, if included """

        if not self.include_diagonal:
            return 0.0
        return float(self.n_points) ** (self.alpha - 1.0)

    # end diagonal_share()

    def deviation(self) -> np.ndarray:
        """ Off-diagonal values minus the Poisson limit ``2 s`` """
        return self.values - self.diagonal_share() - 2.0 * self.s_grid

    # end deviation()

    def max_deviation(self) -> float:
        """ Largest absolute deviation from ``2 s`` """
        return float(np.max(np.abs(self.deviation())))

    # end max_deviation()

# end class PairCorrCurve


def _check_alpha(alpha: float):
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")


# end _check_alpha()


def _sorted_values(pts: PointSet) -> np.ndarray:
    if not isinstance(pts, PointSet) or pts.space != "circle":
        raise DomainError("Pair counts need a circle PointSet")
    return np.asarray(pts.sorted_values())


# end _sorted_values()


def _unordered_within(values: np.ndarray, radius: float) -> int:
    """ Number of pairs ``i < j`` within circular distance ``radius`` """

    count = values.shape[0]
    if count < 2:
        return 0
    if radius >= 0.5:
        return count * (count - 1) // 2

    index = np.arange(count)
    reach = radius + _DIST_SLACK
    upper = np.searchsorted(values, values + reach, side="right")
    near = np.maximum(upper - index - 1, 0)

    # Wrap-around partners sit at gaps >= 1 - r, beyond the direct range
    wrap = np.searchsorted(values, values + 1.0 - reach, side="left")
    wrap = np.maximum(wrap, np.maximum(upper, index + 1))
    far = count - wrap
    return int(np.sum(near) + np.sum(far))


# end _unordered_within()


def pair_count_raw(pts: PointSet, s: float, alpha: float = 1.0,
                   include_diagonal: bool = False) -> int:
    """ Number of ordered pairs within ``s / N^alpha``, before normalization """

    _check_alpha(alpha)
    if not s >= 0:
        raise DomainError(f"s must be nonnegative, got {s}")
    values = _sorted_values(pts)
    count = values.shape[0]
    if count == 0:
        return 0
    radius = s / float(count) ** alpha
    total = 2 * _unordered_within(values, radius)
    if include_diagonal:
        total += count
    return total


# end pair_count_raw()


def pair_count(pts: PointSet, s: float, alpha: float = 1.0,
               include_diagonal: bool = False) -> float:
    """ Normalized pair count.

    Args:
        pts (PointSet): Circle points.
        s (float): Scale, at least 0.
        alpha (float): Exponent in (0, 1]; 1 is Poissonian correlation.
        include_diagonal (bool): Whether ``m = n`` pairs count.

    Returns:
        The count divided by ``N^(2 - alpha)``.
    """

    raw = pair_count_raw(pts, s, alpha, include_diagonal)
    if raw == 0:
        return 0.0
    return raw / float(pts.n) ** (2.0 - alpha)


# end pair_count()


def pc_curve(pts: PointSet, s_grid: Sequence[float], alpha: float = 1.0,
             include_diagonal: bool = False) -> PairCorrCurve:
    """ Normalized pair counts over an ascending grid of scales.

    Args:
        pts (PointSet): Circle points.
        s_grid (list): Strictly ascending nonnegative scales.
        alpha (float): Exponent in (0, 1].
        include_diagonal (bool): Whether ``m = n`` pairs count.

    Returns:
        A ``PairCorrCurve``.
    """

    _check_alpha(alpha)
    grid = np.asarray(s_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("s grid must be a nonempty list")
    if np.any(grid < 0) or np.any(np.diff(grid) <= 0):
        raise DomainError("s grid must be nonnegative and strictly ascending")

    values = _sorted_values(pts)
    count = values.shape[0]
    pts.require_nonempty()
    norm = float(count) ** (2.0 - alpha)
    scale = float(count) ** alpha
    diagonal = count if include_diagonal else 0
    result = np.array([(2 * _unordered_within(values, s / scale) + diagonal) / norm
                       for s in grid])
    return PairCorrCurve(alpha=float(alpha), s_grid=grid, values=result,
                         include_diagonal=include_diagonal, n_points=count)


# end pc_curve()


def pc_verdict(curve: PairCorrCurve, tol: float = DEFAULT_PC_TOL) -> bool:
    """ True when the curve stays within ``tol`` of ``2 s`` """
    return curve.max_deviation() <= tol


# end pc_verdict()


def poissonian_verdict(pts: PointSet, s_grid: Sequence[float],
                       tol: float = DEFAULT_PC_TOL) -> bool:
    """ Finite-N reading of Poissonian pair correlation (alpha = 1) """
    return pc_verdict(pc_curve(pts, s_grid, 1.0), tol)


# end poissonian_verdict()


def weak_verdict(pts: PointSet, s_grid: Sequence[float], alpha: float = 0.5,
                 tol: float = DEFAULT_PC_TOL) -> bool:
    """ Finite-N reading of weak pair correlation with exponent ``alpha`` """

    if not alpha < 1:
        raise DomainError(f"Weak pair correlation needs alpha < 1, got {alpha}")
    return pc_verdict(pc_curve(pts, s_grid, alpha), tol)


# end weak_verdict()


def integer_s_agreement(pts: PointSet, k: int, alpha: float = 1.0,
                        tol: float = DEFAULT_PC_TOL,
                        fine_step: float = 1.0 / 16.0) -> Tuple[bool, bool]:
    """ Verdicts from integer scales ``1 .. 2^k`` and from a fine grid.

    Integer scales already decide pair correlation in the limit; this
    reports both finite-N verdicts so they can be compared.

    Returns:
        A tuple ``(integer_verdict, fine_verdict)``.
    """

    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    top = 2 ** k
    integers = np.arange(1, top + 1, dtype=float)
    fine = np.arange(1, int(math.ceil(top / fine_step)) + 1) * fine_step
    integer_verdict = pc_verdict(pc_curve(pts, integers, alpha), tol)
    fine_verdict = pc_verdict(pc_curve(pts, fine, alpha), tol)
    logger.debug("integer_s_agreement k=%d integer=%s fine=%s", k,
                 integer_verdict, fine_verdict)
    return integer_verdict, fine_verdict


# end integer_s_agreement()


def diagonal_weight(n_points: int, t: float, tol: float = DEFAULT_TOL) -> float:
    """ Share ``theta_t(0) / N`` of the identical-index terms in the energy """

    if n_points < 1:
        raise DomainError(f"Need at least one point, got {n_points}")
    return theta(0.0, t, tol) / float(n_points)


# end diagonal_weight()
