#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Jacobi theta function module.

The heat kernel of the unit-length circle has two exact series:

* spectral: ``1 + 2 sum_n exp(-4 pi^2 n^2 t) cos(2 pi n x)``, fast for large t
* spatial (image sum): ``(4 pi t)^(-1/2) sum_k exp(-(x + k)^2 / (4 t))``,
  fast for small t

Both are truncated with integral tail bounds so that the absolute error is
at most ``tol``. ``theta`` dispatches between them at ``t = 1 / (4 pi)``
where the decay rates of the two series match.

All functions accept scalars or numpy arrays for the position argument and
return a float for scalar input.
"""

# Standard imports
import logging
import math

# Third party imports
import attr
import numpy as np
from scipy import special

# Application imports
from ..exception import DomainError

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-14

# Dispatch point between the spatial and spectral series
CROSSOVER_T = 1.0 / (4.0 * math.pi)

# Bound on the number of (frequency x position) cells evaluated at once
_CHUNK_CELLS = 1 << 21

# Splitting scale for exact phase reduction
_SPLIT = float(1 << 26)


def _check_t(instance, attribute, value):
    """ attrs validator for the heat time """
    if not (np.isfinite(value) and value > 0):
        raise DomainError(f"Heat time must be positive and finite, got {value}")


# end _check_t()


def _check_tol(instance, attribute, value):
    """ attrs validator for the truncation tolerance """
    if not 0 < value < 1:
        raise DomainError(f"Tolerance must lie in (0, 1), got {value}")


# end _check_tol()


@attr.s(frozen=True)
class ThetaParams:
    """ Heat time and absolute truncation tolerance """

    t = attr.ib(type=float, converter=float, validator=_check_t)
    tol = attr.ib(type=float, default=DEFAULT_TOL, converter=float,
                  validator=_check_tol)

# end class ThetaParams


def spectral_cutoff(t: float, tol: float) -> int:
    """ Number of spectral terms needed for a tail below ``tol``.

    The neglected tail satisfies
    ``sum_{n > n0} 2 exp(-a n^2) <= sqrt(pi / a) erfc(n0 sqrt(a))``
    with ``a = 4 pi^2 t``.

    Args:
        t (float): Heat time.
        tol (float): Absolute tolerance.

    Returns:
        The smallest ``n0 >= 0`` whose tail bound is at most ``tol``.
    """

    rate = 4.0 * math.pi ** 2 * t
    target = tol * math.sqrt(rate / math.pi)
    if target >= 1.0:
        return 0
    if target <= 0.0:
        raise DomainError(f"Tolerance {tol} too small for t = {t}")
    cutoff = int(math.ceil(float(special.erfcinv(target)) / math.sqrt(rate)))
    return max(cutoff, 0)


# end spectral_cutoff()


def _image_tail(images: int, t: float) -> float:
    """ Bound on the image terms with ``|k| > images`` for ``|x| <= 1/2`` """

    start = images + 0.5
    head = 2.0 * math.exp(-start * start / (4.0 * t)) / math.sqrt(4.0 * math.pi * t)
    return head + math.erfc(start / (2.0 * math.sqrt(t)))


# end _image_tail()


def image_cutoff(t: float, tol: float) -> int:
    """ Number of images ``K`` such that images ``|k| <= K`` suffice """

    images = 0
    while _image_tail(images, t) > tol:
        images += 1
    return images


# end image_cutoff()


def _as_array(x):
    """ Converts the input to a float array, rejecting non-finite values """

    array = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(array)):
        raise DomainError("Position must be finite")
    return array


# end _as_array()


def _unwrap(result, scalar: bool):
    """ Returns a float for scalar input """
    return float(result) if scalar else result


# end _unwrap()


def circle_phase(freqs: np.ndarray, x: np.ndarray) -> np.ndarray:
    """ Computes ``2 pi frac(n x)`` with a nearly exact product ``n x``.

    ``x`` is split into a part on the 2^-26 grid and a remainder; for
    integer ``n < 2^26`` both partial products are exact, so only the final
    addition and the multiplication by 2 pi round.
    """

    x_hi = np.floor(x * _SPLIT) / _SPLIT
    x_lo = x - x_hi
    frac = np.mod(np.multiply.outer(freqs, x_hi), 1.0)
    frac += np.multiply.outer(freqs, x_lo)
    return 2.0 * math.pi * frac


# end circle_phase()


def _spectral_sum(x: np.ndarray, t: float, n_terms: int, weights) -> np.ndarray:
    """ Evaluates ``sum_{n=1}^{n_terms} weights(n) * trig(2 pi n x)``.

    ``weights`` maps an integer frequency array to a pair
    ``(coefficients, use_sine)``.

    Terms are laid out as (positions x frequencies) and reduced along the
    contiguous frequency axis, where numpy sums pairwise. Chunk partials
    are then combined with ``math.fsum`` per position.
    """

    flat = np.ravel(x)
    if n_terms == 0 or flat.size == 0:
        return np.zeros(x.shape)

    chunk = max(1, _CHUNK_CELLS // max(flat.size, 1))
    partials = []
    for start in range(1, n_terms + 1, chunk):
        freqs = np.arange(start, min(start + chunk, n_terms + 1), dtype=float)
        coeffs, use_sine = weights(freqs)
        phase = np.ascontiguousarray(circle_phase(freqs, flat).T)
        trig = np.sin(phase) if use_sine else np.cos(phase)
        partials.append(np.sum(trig * coeffs[None, :], axis=1))
    if len(partials) == 1:
        return partials[0].reshape(x.shape)
    stacked = np.stack(partials, axis=1)
    total = np.array([math.fsum(row) for row in stacked])
    return total.reshape(x.shape)


# end _spectral_sum()


def theta_spectral(x, p: ThetaParams):
    """ Spectral series ``1 + 2 sum exp(-4 pi^2 n^2 t) cos(2 pi n x)``.

    Args:
        x (float or ndarray): Circle position(s); reduced to [0, 1).
        p (ThetaParams): Heat time and tolerance.

    Returns:
        The theta value(s) with absolute error at most ``p.tol``.
    """

    array = _as_array(x)
    reduced = np.mod(array, 1.0)
    rate = 4.0 * math.pi ** 2 * p.t
    n_terms = spectral_cutoff(p.t, p.tol)
    logger.debug("theta_spectral t=%g uses %d terms", p.t, n_terms)

    def weights(freqs):
        return 2.0 * np.exp(-rate * freqs * freqs), False

    result = 1.0 + _spectral_sum(reduced, p.t, n_terms, weights)
    return _unwrap(result, array.ndim == 0)


# end theta_spectral()


def theta_spatial(x, p: ThetaParams):
    """ Image sum ``(4 pi t)^(-1/2) sum_k exp(-(x + k)^2 / (4 t))``.

    Args:
        x (float or ndarray): Circle position(s); reduced to [-1/2, 1/2].
        p (ThetaParams): Heat time and tolerance.

    Returns:
        The theta value(s) with absolute error at most ``2 * p.tol``.
    """

    array = _as_array(x)
    reduced = array - np.round(array)
    images = image_cutoff(p.t, p.tol)
    logger.debug("theta_spatial t=%g uses %d images", p.t, images)

    scale = 1.0 / math.sqrt(4.0 * math.pi * p.t)
    total = np.exp(-reduced * reduced / (4.0 * p.t))
    for k in range(1, images + 1):
        right = reduced + k
        left = reduced - k
        total = total + np.exp(-right * right / (4.0 * p.t)) \
            + np.exp(-left * left / (4.0 * p.t))
    return _unwrap(scale * total, array.ndim == 0)


# end theta_spatial()


def theta(x, t: float, tol: float = DEFAULT_TOL):
    """ Evaluates the theta function with the cheaper of the two series.

    Args:
        x (float or ndarray): Circle position(s).
        t (float): Heat time.
        tol (float): Absolute tolerance.

    Returns:
        The theta value(s).
    """

    params = ThetaParams(t=t, tol=tol)
    if params.t < CROSSOVER_T:
        return theta_spatial(x, params)
    return theta_spectral(x, params)


# end theta()


def _erf_difference(upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
    """ Computes ``(erf(upper) - erf(lower)) / 2`` without cancellation """

    positive = 0.5 * (special.erfc(lower) - special.erfc(upper))
    negative = 0.5 * (special.erfc(-upper) - special.erfc(-lower))
    straddle = 0.5 * (special.erf(upper) - special.erf(lower))
    return np.where(lower >= 0, positive, np.where(upper <= 0, negative, straddle))


# end _erf_difference()


def theta_mass(a: float, b: float, p: ThetaParams) -> float:
    """ Integral of the theta function over the arc [a, b].

    The spectral branch integrates the cosine series term by term, the
    spatial branch sums error-function differences over the images. The
    branch is the one ``theta`` would select.

    Args:
        a (float): Left end.
        b (float): Right end, ``a <= b <= a + 1``.
        p (ThetaParams): Heat time and tolerance.

    Returns:
        The mass in [0, 1].

    Raises:
        ``DomainError`` if the arc is inverted or longer than the circle.
    """

    if not (np.isfinite(a) and np.isfinite(b)):
        raise DomainError("Arc ends must be finite")
    width = float(b) - float(a)
    if width < 0:
        raise DomainError(f"Arc end {b} precedes start {a}")
    if width > 1:
        raise DomainError(f"Arc length {width} exceeds the circle")

    # Mass is invariant under integer shifts
    left = float(a) - math.floor(float(a) + 0.5)
    right = left + width

    if p.t >= CROSSOVER_T:
        rate = 4.0 * math.pi ** 2 * p.t
        n_terms = spectral_cutoff(p.t, p.tol)

        def weights(freqs):
            return np.exp(-rate * freqs * freqs) / (math.pi * freqs), True

        ends = np.array([left, right])
        sines = _spectral_sum(np.mod(ends, 1.0), p.t, n_terms, weights)
        mass = width + float(sines[1] - sines[0])
    else:
        images = image_cutoff(p.t, p.tol) + 2
        shifts = np.arange(-images, images + 1, dtype=float)
        scale = 2.0 * math.sqrt(p.t)
        pieces = _erf_difference((right + shifts) / scale, (left + shifts) / scale)
        mass = float(np.sum(pieces))

    return min(max(mass, 0.0), 1.0)


# end theta_mass()


def gaussian_kernel(d, t: float):
    """ Scaled Gaussian ``t^(-1/2) exp(-d^2 / t)``.

    Args:
        d (float or ndarray): Circle distance representative in [-1/2, 1/2].
        t (float): Scale.

    Returns:
        The kernel value(s).
    """

    if not (np.isfinite(t) and t > 0):
        raise DomainError(f"Scale must be positive, got {t}")
    array = _as_array(d)
    result = np.exp(-array * array / t) / math.sqrt(t)
    return _unwrap(result, array.ndim == 0)


# end gaussian_kernel()


def gaussian_lower_bound(x, t: float):
    """ Line heat kernel ``(4 pi t)^(-1/2) exp(-x^2 / (4 t))``.

    The circle kernel dominates it since heat can also loop around the
    circle. ``x`` is reduced to [-1/2, 1/2].
    """

    if not (np.isfinite(t) and t > 0):
        raise DomainError(f"Heat time must be positive, got {t}")
    array = _as_array(x)
    reduced = array - np.round(array)
    result = np.exp(-reduced * reduced / (4.0 * t)) / math.sqrt(4.0 * math.pi * t)
    return _unwrap(result, array.ndim == 0)


# end gaussian_lower_bound()


def lemma_radius(eps: float, t: float) -> float:
    """ Radius ``2 sqrt(log(2 / eps)) sqrt(t)`` holding mass ``>= 1 - eps`` """

    if not 0 < eps < 2:
        raise DomainError(f"eps must lie in (0, 2), got {eps}")
    return 2.0 * math.sqrt(math.log(2.0 / eps)) * math.sqrt(t)


# end lemma_radius()


def lemma_scale(eps: float) -> float:
    """ Heat time ``eps^2 / (100 log(20 / eps))`` used in the discrepancy bound """

    if not 0 < eps <= 1:
        raise DomainError(f"eps must lie in (0, 1], got {eps}")
    return eps * eps / (100.0 * math.log(20.0 / eps))


# end lemma_scale()
