#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Heat-kernel pair energies on compact manifolds.

For points ``x_1 .. x_N`` on a manifold ``M`` the pair energy

    E_t = (1 / N^2) sum_{m, n} [exp(t Laplacian) delta_{x_m}](x_n)

is at least ``1 / vol(M)`` for every t, decreases in t, and is bounded below
by the diagonal contribution ``K_t(x, x) / N``.
"""

# Standard imports
from enum import Enum
import logging
import math

# Third party imports
import attr
import numpy as np

# Application imports
from ..exception import DomainError, SpectralInfeasibleError
from ..kernel.theta import circle_phase, spectral_cutoff, theta
from ..pointset import PointSet
from ..summation import BlockAccumulator, row_blocks, pairwise_sum
from .spectrum import ManifoldSpectrum

logger = logging.getLogger(__name__)

DEFAULT_HEAT_TOL = 1e-12

# Upper limit on the number of frequency vectors for spectral sums
FREQUENCY_CAP = 10 ** 7

# Smallest per-pair tolerance handed to kernel evaluators
_MIN_PAIR_TOL = 1e-300


class Method(Enum):
    """ How an energy value was computed """

    DIRECT = "direct"
    FAST = "fast"
    SPECTRAL = "spectral"
    GAUSSIAN = "gaussian"

# end class Method


@attr.s(frozen=True)
class HeatEnergyReport:
    """ Energy value for one (point set, time) pair """

    n_points = attr.ib(type=int)
    t = attr.ib(type=float)
    energy = attr.ib(type=float)

    # Energy minus the reference value (1 / vol for heat energies)
    excess = attr.ib(type=float)
    method = attr.ib(type=Method)
    error_bound = attr.ib(type=float)

    @classmethod
    def create(cls, n_points: int, t: float, energy: float, volume: float,
               method: Method, error_bound: float, **kwargs):
        """ Builds a report, computing the excess over ``1 / volume`` """

        return cls(n_points=n_points, t=t, energy=energy,
                   excess=energy - 1.0 / volume, method=method,
                   error_bound=error_bound, **kwargs)

    # end create()

# end class HeatEnergyReport


def canonical_order(pts: PointSet) -> np.ndarray:
    """ Returns the points in a canonical order.

    Circle values are sorted; vector points are sorted lexicographically.
    Summing in this order makes energies independent of the input order.
    """

    if pts.space == "circle":
        return np.asarray(pts.sorted_values())
    keys = tuple(pts.values[:, axis] for axis in reversed(range(pts.dim)))
    return pts.values[np.lexsort(keys)]


# end canonical_order()


def _check_points(m: ManifoldSpectrum, pts: PointSet):
    """ Validates that ``pts`` lives on ``m`` """

    pts.require_nonempty()
    if pts.space != m.space:
        raise DomainError(f"Points on {pts.space} but manifold is {m.space}")
    if m.space == "torus" and pts.dim != m.dim:
        raise DomainError(f"Points on T^{pts.dim} but manifold is T^{m.dim}")


# end _check_points()


def _direct_energy(m: ManifoldSpectrum, points: np.ndarray, t: float,
                   tol: float) -> float:
    """ Double sum over all ordered pairs in row blocks """

    count = points.shape[0]
    pair_tol = max(tol / float(count) ** 2, _MIN_PAIR_TOL)
    acc = BlockAccumulator()
    for start, stop in row_blocks(count):
        if m.space == "circle":
            rows = points[start:stop, None]
            cols = points[None, :]
        else:
            rows = points[start:stop, None, :]
            cols = points[None, :, :]
        acc.add(m.kernel(rows, cols, t, pair_tol))
    return acc.total() / float(count) ** 2


# end _direct_energy()


def torus_spectral_energy(points: np.ndarray, t: float, tol: float,
                          cap: int = FREQUENCY_CAP):
    """ Fourier-side energy on T^d.

    Computes ``1 + sum_{k != 0} exp(-4 pi^2 |k|^2 t) |a_k|^2`` with the
    exponential sums ``a_k = (1 / N) sum_n exp(2 pi i k . x_n)`` over the
    frequency box ``|k_i| <= L``. Using ``|a_k| <= 1`` the dropped
    frequencies contribute at most ``d theta_t(0)^(d-1)`` times the
    one-dimensional tail, which fixes ``L``.

    Args:
        points (ndarray): Points as an (N, d) array in [0, 1)^d.
        t (float): Heat time.
        tol (float): Absolute tolerance.
        cap (int): Maximal number of frequency vectors.

    Returns:
        The energy.

    Raises:
        ``SpectralInfeasibleError`` if the frequency box exceeds ``cap``.
    """

    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, None]
    count, dim = pts.shape
    diag = theta(0.0, t)
    cutoff = spectral_cutoff(t, tol / (dim * diag ** (dim - 1)))
    width = 2 * cutoff + 1
    needed = width ** dim
    if needed > cap:
        raise SpectralInfeasibleError(needed=needed, cap=cap)
    logger.debug("torus spectral energy uses %d frequencies per axis", width)

    freqs = np.arange(-cutoff, cutoff + 1, dtype=float)
    weights = np.exp(-4.0 * math.pi ** 2 * t * freqs * freqs)

    # Exponential factors per axis, shape (width, N)
    factors = []
    for axis in range(dim):
        phase = circle_phase(np.abs(freqs), pts[:, axis])
        phase = np.sign(freqs)[:, None] * phase
        factors.append(np.exp(1j * phase))

    partial = np.ones((1, count), dtype=complex)
    for factor in factors[:-1]:
        partial = (partial[:, None, :] * factor[None, :, :]).reshape(-1, count)
    sums = (partial @ factors[-1].T).reshape(-1) / count

    box_weights = np.ones(1)
    for _ in range(dim):
        box_weights = np.multiply.outer(box_weights, weights).reshape(-1)

    power = np.abs(sums) ** 2
    zero = needed // 2  # the all-zero frequency sits in the middle of the box
    mask = np.ones(needed, dtype=bool)
    mask[zero] = False
    return 1.0 + pairwise_sum(box_weights[mask] * power[mask])


# end torus_spectral_energy()


def heat_energy(m: ManifoldSpectrum, pts: PointSet, t: float,
                tol: float = DEFAULT_HEAT_TOL,
                method: Method = Method.DIRECT) -> HeatEnergyReport:
    """ Heat-kernel pair energy of a point set.

    Args:
        m (ManifoldSpectrum): The manifold.
        pts (PointSet): Points on ``m``.
        t (float): Heat time.
        tol (float): Absolute tolerance of the returned energy.
        method (Method): ``DIRECT`` double sum, or ``SPECTRAL`` on circle
            and torus.

    Returns:
        A ``HeatEnergyReport``.

    Raises:
        ``DomainError`` for empty or mismatched point sets and inadmissible
        times, ``SpectralInfeasibleError`` when the frequency cap is hit.
    """

    _check_points(m, pts)
    m.check_time(t)
    points = canonical_order(pts)

    if method is Method.DIRECT:
        energy = _direct_energy(m, points, t, tol)
    elif method is Method.SPECTRAL:
        if m.space == "sphere2":
            raise DomainError("Spectral heat energy is not available on sphere2")
        energy = torus_spectral_energy(points, t, tol)
    else:
        raise DomainError(f"Method {method} does not apply to heat energies")
    report = HeatEnergyReport.create(n_points=pts.n, t=t, energy=energy,
                                     volume=m.volume, method=method,
                                     error_bound=tol)

    if report.energy < 1.0 / m.volume - report.error_bound:
        logger.warning("Heat energy %.17g below the floor 1/vol at t=%g",
                       report.energy, t)
    return report


# end heat_energy()


def diagonal_floor(m: ManifoldSpectrum, n_points: int, t: float,
                   tol: float = DEFAULT_HEAT_TOL) -> float:
    """ Diagonal contribution ``K_t(x, x) / N`` to the heat energy """

    if n_points < 1:
        raise DomainError(f"Need at least one point, got {n_points}")
    return m.on_diagonal(t, tol) / float(n_points)


# end diagonal_floor()

