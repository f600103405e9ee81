#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Discrepancy versus theta energy.

For circle points with discrepancy ``D`` there is a universal constant
``c > 0`` with

    D^2 <= c (E_{t*} - 1),    t* = D^2 / (c log(1 / D))

where ``E_t`` is the theta energy. The constant is not known explicitly;
``calibrate_c`` estimates the smallest one that works on given inputs.
That estimate is an empirical surrogate and not the constant itself.
"""

# Standard imports
import logging
import math
from typing import Sequence

# Third party imports
import attr

# Application imports
from ..energy.circle import DEFAULT_ENERGY_TOL, theta_energy_auto
from ..exception import BoundInapplicableError, CalibrationError, DomainError
from ..kernel.theta import ThetaParams, lemma_scale, theta_mass
from ..pointset import PointSet
from .arcs import arc_discrepancy

logger = logging.getLogger(__name__)

# Slack on the inequality for rounding in the energy
HOLDS_SLACK = 1e-12

# Calibration grid of c values is 2^k for k in [C_GRID_MIN, C_GRID_MAX]
C_GRID_MIN = -10
C_GRID_MAX = 20

# Relative width at which bisection stops (three significant digits)
_BISECT_REL = 5e-4


@attr.s(frozen=True)
class BoundCheck:
    """ Both sides of the discrepancy inequality for one point set """

    d_n = attr.ib(type=float)
    c = attr.ib(type=float)
    t_star = attr.ib(type=float)
    rhs = attr.ib(type=float)
    holds = attr.ib(type=bool)

    # Spatial scale D (log 1/D)^(-1/2) at which the theta function acts
    spatial_scale = attr.ib(type=float, default=0.0)
    energy = attr.ib(type=float, default=1.0)

# end class BoundCheck


def _check(pts: PointSet, d_n: float, c: float, tol: float) -> BoundCheck:
    """ Evaluates the inequality for a known discrepancy """

    if not (math.isfinite(c) and c > 0):
        raise DomainError(f"c must be positive, got {c}")
    if d_n >= 1.0:
        raise BoundInapplicableError(
            f"Bound inapplicable: discrepancy {d_n} leaves t* undefined")

    log_inv = math.log(1.0 / d_n)
    t_star = d_n * d_n / (c * log_inv)
    report = theta_energy_auto(pts, t_star, tol)
    rhs = c * report.excess
    holds = d_n * d_n <= rhs + HOLDS_SLACK
    logger.debug("bound_check c=%g d=%g t*=%g rhs=%g holds=%s",
                 c, d_n, t_star, rhs, holds)
    return BoundCheck(d_n=d_n, c=c, t_star=t_star, rhs=rhs, holds=holds,
                      spatial_scale=d_n / math.sqrt(log_inv),
                      energy=report.energy)


# end _check()


def bound_check(pts: PointSet, c: float,
                tol: float = DEFAULT_ENERGY_TOL) -> BoundCheck:
    """ Checks ``D^2 <= c (E_{t*} - 1)`` for one point set.

    Args:
        pts (PointSet): Circle points.
        c (float): Positive constant.
        tol (float): Tolerance of the energy evaluation.

    Returns:
        A ``BoundCheck``.

    Raises:
        ``BoundInapplicableError`` when the discrepancy is 1, for instance
        when all points coincide.
    """

    result = arc_discrepancy(pts)
    return _check(pts, result.d_n, c, tol)


# end bound_check()


def _smallest_c(pts: PointSet, d_n: float, tol: float) -> float:
    """ Smallest working c for a single point set.

    ``c (E_{t*(c)} - 1)`` grows with c since t* shrinks, so the working set
    of c values is a half line and binary search applies.
    """

    def holds(c):
        return _check(pts, d_n, c, tol).holds

    if not holds(2.0 ** C_GRID_MAX):
        raise CalibrationError(
            f"No c up to 2^{C_GRID_MAX} satisfies the bound for {pts.label or 'input'}")
    if holds(2.0 ** C_GRID_MIN):
        return 2.0 ** C_GRID_MIN

    # Grid search: lo fails, hi holds
    lo, hi = C_GRID_MIN, C_GRID_MAX
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(2.0 ** mid):
            hi = mid
        else:
            lo = mid

    low, high = 2.0 ** lo, 2.0 ** hi
    while (high - low) > _BISECT_REL * high:
        mid = 0.5 * (low + high)
        if holds(mid):
            high = mid
        else:
            low = mid
    return high


# end _smallest_c()


def calibrate_c(families: Sequence[PointSet],
                tol: float = DEFAULT_ENERGY_TOL) -> float:
    """ Smallest c on the calibration grid for which every input satisfies
    the bound, refined by bisection to three significant digits.

    Args:
        families (list): Circle point sets with discrepancy below 1.
        tol (float): Tolerance of the energy evaluations.

    Returns:
        The calibrated constant; adding inputs never lowers it.

    Raises:
        ``CalibrationError`` if no grid value works,
        ``BoundInapplicableError`` for a degenerate input.
    """

    members = list(families)
    if not members:
        raise DomainError("calibrate_c needs at least one point set")

    best = 0.0
    for pts in members:
        d_n = arc_discrepancy(pts).d_n
        if d_n >= 1.0:
            raise BoundInapplicableError(
                f"Bound inapplicable: discrepancy 1 for {pts.label or 'input'}")
        best = max(best, _smallest_c(pts, d_n, tol))
    logger.info("Calibrated c=%.6g over %d point sets", best, len(members))
    return best


# end calibrate_c()


def scale_mass(eps: float, tol: float = 1e-14) -> float:
    """ Theta mass of ``[-eps/4, eps/4]`` at the heat time ``lemma_scale(eps)``.

    The discrepancy argument needs this to be at least ``1 - eps / 10``.
    """

    t = lemma_scale(eps)
    return theta_mass(-eps / 4.0, eps / 4.0, ThetaParams(t=t, tol=tol))


# end scale_mass()
