#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Step-function approximation of the Gaussian.

``exp(-y^2)`` is sliced into horizontal slabs of height eps. The slab
thresholds sit at the midpoints ``eps (k - 1/2)`` so that the staircase
``sum_k a_k [|y| <= b_k]`` is within eps / 2 of the Gaussian everywhere.
Weighting pair counts with the staircase turns the Gaussian energy at
``t = N^-2`` into a finite combination of pair-correlation counts.
"""

# Standard imports
import logging
import math
from typing import List, Optional, Tuple

# Third party imports
import attr
import numpy as np

# Application imports
from ..exception import DomainError
from ..summation import pairwise_sum
from .counts import _sorted_values, _unordered_within

logger = logging.getLogger(__name__)

_GRID_POINTS = 200001


@attr.s(frozen=True)
class StepApprox:
    """ Staircase ``sum_k a_k [|y| <= b_k]`` with ascending ``b_k`` """

    levels = attr.ib(type=List[Tuple[float, float]])
    eps = attr.ib(type=float)

    @property
    def heights(self) -> np.ndarray:
        return np.array([level[0] for level in self.levels])

    @property
    def widths(self) -> np.ndarray:
        return np.array([level[1] for level in self.levels])

    def __call__(self, y):
        """ Evaluates the staircase """

        array = np.abs(np.asarray(y, dtype=float))
        total = np.zeros(array.shape)
        for height, width in self.levels:
            total = total + height * (array <= width)
        return float(total) if array.ndim == 0 else total

    # end __call__()

    def sup_error(self, grid: Optional[np.ndarray] = None) -> float:
        """ Largest deviation from ``exp(-y^2)`` on a dense grid """

        if grid is None:
            grid = np.linspace(0.0, self.widths.max() + 3.0, _GRID_POINTS)
            # Include both sides of every jump
            grid = np.concatenate([grid, self.widths, np.nextafter(self.widths, np.inf)])
        return float(np.max(np.abs(np.exp(-grid * grid) - self(grid))))

    # end sup_error()

    def integral(self) -> float:
        """ ``sum_k 2 a_k b_k``; tends to sqrt(pi) as eps shrinks """
        return 2.0 * pairwise_sum(self.heights * self.widths)

    # end integral()

# end class StepApprox


def step_approx_gaussian(eps: float) -> StepApprox:
    """ Staircase within eps of ``exp(-y^2)`` on the whole line.

    Args:
        eps (float): Slab height in (0, 1).

    Returns:
        A ``StepApprox`` with one level per threshold ``eps (k - 1/2) < 1``.
    """

    if not 0 < eps < 1:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")

    levels = []
    k = 1
    while eps * (k - 0.5) < 1.0:
        threshold = eps * (k - 0.5)
        levels.append((eps, math.sqrt(math.log(1.0 / threshold))))
        k += 1

    # Highest threshold first gives ascending widths
    levels.reverse()
    logger.debug("step_approx_gaussian eps=%g uses %d levels", eps, len(levels))
    return StepApprox(levels=levels, eps=float(eps))


# end step_approx_gaussian()


def energy_from_counts(pts, eps: float) -> float:
    """ Gaussian energy at ``t = N^-2`` rebuilt from pair counts.

    Computes ``sum_k a_k F(b_k)`` with the normalized counts ``F``
    (alpha = 1, identical pairs included). Each of the ``N^2`` pair terms
    is off by at most eps / 2, so the worst case gap to
    ``gaussian_energy(pts, N^-2)`` is ``N eps / 2``; for spread-out points
    only ``O(N)`` pairs are close and the gap is ``O(eps sqrt(log 1/eps))``.
    """

    approx = step_approx_gaussian(eps)
    values = _sorted_values(pts)
    pts.require_nonempty()
    count = values.shape[0]
    counts = np.array([2 * _unordered_within(values, width / count) + count
                       for width in approx.widths], dtype=float)
    return pairwise_sum(approx.heights * counts / count)


# end energy_from_counts()
