#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Theta pair energies on the circle.

The energy of points ``x_1 .. x_N`` at heat time t is

    E_t = (1 / N^2) sum_{m, n} theta_t(x_n - x_m)

which is at least 1 and decreases in t. Three evaluation paths are
provided: a direct double sum, a neighbor-truncated sum for small t that
only visits pairs within the Gaussian cutoff, and the Fourier-side
identity ``E_t = 1 + 2 sum_l exp(-4 pi^2 l^2 t) |a_l|^2`` with the
exponential sums ``a_l = (1 / N) sum_n exp(2 pi i l x_n)``.

All paths sum over the sorted values in row blocks so that results do not
depend on the input order.
"""

# Standard imports
import logging
import math
from typing import List, Optional, Sequence, Tuple

# Third party imports
import numpy as np

# Application imports
from ..exception import DataCorruptionError, DomainError, SpectralInfeasibleError
from ..kernel.theta import (
    CROSSOVER_T,
    ThetaParams,
    circle_phase,
    image_cutoff,
    spectral_cutoff,
    theta,
)
from ..manifold.heat import FREQUENCY_CAP, Method
from ..pointset import PointSet
from ..summation import BlockAccumulator, pairwise_sum
from .pairs import circular_gap, iter_pairs
from .report import EnergyReport

logger = logging.getLogger(__name__)

DEFAULT_ENERGY_TOL = 1e-12

# Smallest per-pair tolerance handed to the theta evaluators
_MIN_PAIR_TOL = 1e-300

# Bound on the number of (frequency x point) cells per exponential-sum chunk
_CHUNK_CELLS = 1 << 21


def _prepare(pts: PointSet, t: float, tol: float) -> np.ndarray:
    """ Validates the inputs and returns the sorted circle values """

    if not isinstance(pts, PointSet) or pts.space != "circle":
        raise DomainError("Circle energies need a circle PointSet")
    pts.require_nonempty()
    ThetaParams(t=t, tol=tol)
    return np.asarray(pts.sorted_values())


# end _prepare()


def _pair_tol(count: int, tol: float) -> float:
    """ Per-pair tolerance so that N^2 truncation errors stay within ``tol`` """
    return max(tol / float(count) ** 2, _MIN_PAIR_TOL)


# end _pair_tol()


def _pair_energy(values: np.ndarray, t: float, tol: float,
                 radius: Optional[float]) -> float:
    """ ``(2 * sum_{i<j} theta(x_j - x_i) + N theta(0)) / N^2`` over the
    pairs within ``radius``
    """

    count = values.shape[0]
    pair_tol = _pair_tol(count, tol)
    acc = BlockAccumulator()
    for i, j in iter_pairs(values, radius):
        if i.size:
            acc.add(theta(values[j] - values[i], t, pair_tol))
    diagonal = count * theta(0.0, t, pair_tol)
    return (2.0 * acc.total() + diagonal) / float(count) ** 2


# end _pair_energy()


def theta_energy(pts: PointSet, t: float,
                 tol: float = DEFAULT_ENERGY_TOL) -> EnergyReport:
    """ Direct double sum of the theta energy.

    Args:
        pts (PointSet): Circle points.
        t (float): Heat time.
        tol (float): Absolute tolerance of the energy.

    Returns:
        An ``EnergyReport`` tagged ``Method.DIRECT``.

    Raises:
        ``DomainError`` for an empty point set or invalid ``t``.
    """

    values = _prepare(pts, t, tol)
    energy = _pair_energy(values, t, tol, None)
    return EnergyReport.theta(n_points=pts.n, t=t, energy=energy,
                              method=Method.DIRECT, error_bound=tol,
                              label=pts.label)


# end theta_energy()


def fast_radius(n_points: int, t: float, tol: float) -> float:
    """ Circular distance beyond which pairs are dropped by the fast path.

    Each dropped pair contributes at most
    ``2 (4 pi t)^(-1/2) exp(-r^2 / (4 t))`` which the radius makes at most
    ``tol / N^2``.
    """

    arg = 2.0 * float(n_points) ** 2 / (math.sqrt(4.0 * math.pi * t) * tol)
    if arg <= 1.0:
        return 0.0
    return math.sqrt(4.0 * t * math.log(arg))


# end fast_radius()


def theta_energy_fast(pts: PointSet, t: float,
                      tol: float = DEFAULT_ENERGY_TOL) -> EnergyReport:
    """ Neighbor-truncated theta energy for small t.

    Only pairs within ``fast_radius`` (directly or around the wrap point)
    are evaluated. When the radius reaches 1/2, or t is past the series
    crossover, the direct sum is returned instead.

    Args:
        pts (PointSet): Circle points.
        t (float): Heat time.
        tol (float): Absolute tolerance of the energy.

    Returns:
        An ``EnergyReport`` tagged ``Method.FAST`` (``Method.DIRECT`` after a
        fallback).
    """

    values = _prepare(pts, t, tol)
    radius = fast_radius(values.shape[0], t, tol)
    if t >= CROSSOVER_T or radius >= 0.5:
        logger.debug("theta_energy_fast falls back to direct (r=%g, t=%g)",
                     radius, t)
        return theta_energy(pts, t, tol)

    logger.debug("theta_energy_fast N=%d t=%g r=%g", values.shape[0], t, radius)
    energy = _pair_energy(values, t, tol, radius)
    return EnergyReport.theta(n_points=pts.n, t=t, energy=energy,
                              method=Method.FAST, error_bound=tol,
                              label=pts.label)


# end theta_energy_fast()


def exponential_sums(values: np.ndarray, freqs: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """ Real and imaginary parts of ``(1 / N) sum_n exp(2 pi i l x_n)``.

    Args:
        values (ndarray): Circle values.
        freqs (ndarray): Nonnegative integer frequencies.

    Returns:
        A tuple ``(real, imag)`` of arrays shaped like ``freqs``.
    """

    values = np.asarray(values, dtype=float)
    freqs = np.asarray(freqs, dtype=float)
    count = values.shape[0]
    real = np.zeros(freqs.shape[0])
    imag = np.zeros(freqs.shape[0])
    if count == 0:
        return real, imag

    chunk = max(1, _CHUNK_CELLS // count)
    for start in range(0, freqs.shape[0], chunk):
        stop = min(start + chunk, freqs.shape[0])
        phase = circle_phase(freqs[start:stop], values)
        real[start:stop] = np.sum(np.cos(phase), axis=1) / count
        imag[start:stop] = np.sum(np.sin(phase), axis=1) / count
    return real, imag


# end exponential_sums()


def theta_energy_spectral(pts: PointSet, t: float,
                          tol: float = DEFAULT_ENERGY_TOL,
                          cap: int = FREQUENCY_CAP) -> EnergyReport:
    """ Fourier-side theta energy.

    Args:
        pts (PointSet): Circle points.
        t (float): Heat time.
        tol (float): Absolute tolerance; fixes the number of frequencies.
        cap (int): Maximal number of frequencies.

    Returns:
        An ``EnergyReport`` tagged ``Method.SPECTRAL``; its excess is
        summed directly and does not suffer the cancellation in
        ``energy - 1``.

    Raises:
        ``SpectralInfeasibleError`` if more than ``cap`` frequencies are
        needed.
    """

    values = _prepare(pts, t, tol)
    cutoff = spectral_cutoff(t, tol)
    if cutoff > cap:
        raise SpectralInfeasibleError(needed=cutoff, cap=cap)
    logger.debug("theta_energy_spectral N=%d t=%g uses %d frequencies",
                 values.shape[0], t, cutoff)

    freqs = np.arange(1, cutoff + 1, dtype=float)
    real, imag = exponential_sums(values, freqs)
    weights = np.exp(-4.0 * math.pi ** 2 * t * freqs * freqs)
    excess = 2.0 * pairwise_sum(weights * (real * real + imag * imag))
    return EnergyReport.theta(n_points=pts.n, t=t, energy=1.0 + excess,
                              method=Method.SPECTRAL, error_bound=tol,
                              label=pts.label, excess=excess)


# end theta_energy_spectral()


def _costs(count: int, t: float, tol: float, cap: int):
    """ Rough operation counts of the three paths, ``None`` when unavailable """

    terms = spectral_cutoff(t, tol)
    per_pair = image_cutoff(t, tol) + 1 if t < CROSSOVER_T else terms + 1
    spectral = float(terms) * count if terms <= cap else None
    direct = 0.5 * float(count) ** 2 * per_pair
    radius = fast_radius(count, t, tol)
    fast = None
    if t < CROSSOVER_T and radius < 0.5:
        fast = (count + 2.0 * radius * float(count) ** 2) * per_pair
    return spectral, fast, direct


# end _costs()


def theta_energy_auto(pts: PointSet, t: float,
                      tol: float = DEFAULT_ENERGY_TOL,
                      cap: int = FREQUENCY_CAP) -> EnergyReport:
    """ Theta energy with the cheapest available path.

    The spectral path wins ties since it reports the excess without
    cancellation.
    """

    values = _prepare(pts, t, tol)
    spectral, fast, direct = _costs(values.shape[0], t, tol, cap)
    options = [(cost, rank, method) for rank, (cost, method) in enumerate(
        [(spectral, Method.SPECTRAL), (fast, Method.FAST), (direct, Method.DIRECT)])
        if cost is not None]
    _, _, method = min(options, key=lambda item: (item[0], item[1]))
    logger.debug("theta_energy_auto N=%d t=%g picks %s", values.shape[0], t,
                 method.value)

    if method is Method.SPECTRAL:
        return theta_energy_spectral(pts, t, tol, cap)
    if method is Method.FAST:
        return theta_energy_fast(pts, t, tol)
    return theta_energy(pts, t, tol)


# end theta_energy_auto()


def gaussian_radius(n_points: int, t: float, tol: float) -> float:
    """ Distance beyond which ``t^(-1/2) exp(-d^2 / t) <= tol / N^2`` """

    arg = float(n_points) ** 2 / (math.sqrt(t) * tol)
    if arg <= 1.0:
        return 0.0
    return math.sqrt(t * math.log(arg))


# end gaussian_radius()


def gaussian_energy(pts: PointSet, t: float, tol: float = DEFAULT_ENERGY_TOL,
                    include_diagonal: bool = True) -> float:
    """ Gaussian form ``(1 / N^2) sum t^(-1/2) exp(-d(x_m, x_n)^2 / t)``.

    ``d`` is the minimal circular distance. For equidistributed points and
    ``t -> 0`` slowly the off-diagonal part tends to sqrt(pi).

    Args:
        pts (PointSet): Circle points.
        t (float): Scale.
        tol (float): Absolute tolerance for the dropped far pairs.
        include_diagonal (bool): Whether to add the ``N t^(-1/2)`` terms
            of identical indices.

    Returns:
        The Gaussian energy.
    """

    values = _prepare(pts, t, tol)
    count = values.shape[0]
    radius = gaussian_radius(count, t, tol)
    scale = 1.0 / math.sqrt(t)

    acc = BlockAccumulator()
    for i, j in iter_pairs(values, radius):
        if i.size:
            gap = circular_gap(values, i, j)
            acc.add(scale * np.exp(-gap * gap / t))
    total = 2.0 * acc.total()
    if include_diagonal:
        total += count * scale
    return total / float(count) ** 2


# end gaussian_energy()


def lattice_energy(n_points: int, t: float, tol: float = DEFAULT_ENERGY_TOL) -> float:
    """ Closed-form theta energy of ``n_points`` equally spaced points.

    Only frequencies divisible by N survive, so the energy is
    ``1 + 2 sum_j exp(-4 pi^2 j^2 N^2 t) = theta_{N^2 t}(0)``.
    """

    if n_points < 1:
        raise DomainError(f"Need at least one point, got {n_points}")
    return theta(0.0, float(n_points) ** 2 * t, tol)


# end lattice_energy()


def energy_profile(pts: PointSet, t_list: Sequence[float],
                   tol: float = DEFAULT_ENERGY_TOL,
                   method: Optional[Method] = None) -> List[EnergyReport]:
    """ Theta energies over an ascending list of times.

    Args:
        pts (PointSet): Circle points.
        t_list (list): Strictly ascending positive times.
        tol (float): Absolute tolerance per energy.
        method (Method): Evaluation path; ``None`` picks one per time.

    Returns:
        The reports in time order.

    Raises:
        ``DomainError`` for unsorted or nonpositive times,
        ``DataCorruptionError`` if an energy exceeds its predecessor by
        more than ``2 * tol``.
    """

    times = [float(value) for value in t_list]
    if not times:
        raise DomainError("Energy profile needs at least one time")
    for earlier, later in zip(times, times[1:]):
        if not later > earlier:
            raise DomainError(f"Times must be strictly ascending: {earlier} then {later}")

    compute = {
        None: theta_energy_auto,
        Method.DIRECT: theta_energy,
        Method.FAST: theta_energy_fast,
        Method.SPECTRAL: theta_energy_spectral,
    }.get(method)
    if compute is None:
        raise DomainError(f"Method {method} does not apply to theta energies")

    reports = [compute(pts, t, tol) for t in times]
    for previous, current in zip(reports, reports[1:]):
        if current.energy > previous.energy + 2.0 * tol:
            raise DataCorruptionError(
                f"Energy rose from {previous.energy:.17g} at t={previous.t:g} "
                f"to {current.energy:.17g} at t={current.t:g}")
    return reports


# end energy_profile()
