#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Spectral description of compact manifolds.

A ``ManifoldSpectrum`` bundles what is needed to sum the heat kernel
``[exp(t Laplacian) delta_x](y)`` over point pairs: the volume, a kernel
evaluator with a guaranteed absolute error, the geodesic distance and a
base point for on-diagonal values. The eigenpairs stay internal to each
evaluator.

Built-ins:

* ``circle``: the theta function
* ``torus(d)``: product of d circle kernels
* ``sphere2``: Legendre series ``sum (2l + 1) / (4 pi) exp(-l (l + 1) t) P_l``
"""

# Standard imports
import logging
import math
from typing import Callable

# Third party imports
import attr
import numpy as np

# Application imports
from ..exception import DomainError
from ..kernel.theta import theta, DEFAULT_TOL

logger = logging.getLogger(__name__)

# Below this time the sphere series needs more than ~10^3 terms
SPHERE_T_MIN = 1e-4

# Unit-norm tolerance for sphere arguments
_UNIT_TOL = 1e-12


@attr.s(frozen=True)
class ManifoldSpectrum:
    """ A compact manifold seen through its heat kernel """

    # Space tag matching PointSet.space
    space = attr.ib(type=str)

    # Number of coordinates per point
    dim = attr.ib(type=int)

    volume = attr.ib(type=float)

    # (x, y, t, tol) -> kernel values, broadcasting over leading axes
    kernel_evaluator = attr.ib(type=Callable)

    # (x, y) -> geodesic distances
    distance = attr.ib(type=Callable)

    # Any point; on-diagonal values are position independent on built-ins
    base_point = attr.ib(type=np.ndarray)

    # Smallest admissible heat time
    t_min = attr.ib(type=float, default=0.0)

    def check_time(self, t: float):
        """ Raises a ``DomainError`` for inadmissible heat times """

        if not (np.isfinite(t) and t > 0):
            raise DomainError(f"Heat time must be positive, got {t}")
        if t < self.t_min:
            raise DomainError(
                f"Heat time {t} below the floor {self.t_min} for {self.space}"
            )

    # end check_time()

    def kernel(self, x, y, t: float, tol: float = DEFAULT_TOL):
        """ Evaluates the heat kernel between ``x`` and ``y`` """

        self.check_time(t)
        return self.kernel_evaluator(x, y, t, tol)

    # end kernel()

    def on_diagonal(self, t: float, tol: float = DEFAULT_TOL) -> float:
        """ Kernel value ``K_t(x, x)``, the same for every x on built-ins """

        value = self.kernel(self.base_point, self.base_point, t, tol)
        return float(np.asarray(value).reshape(-1)[0])

    # end on_diagonal()

# end class ManifoldSpectrum


def heat_kernel_circle(x, y, t: float, tol: float = DEFAULT_TOL):
    """ Circle heat kernel ``theta_t(x - y)`` """

    diff = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    return theta(diff, t, tol)


# end heat_kernel_circle()


def heat_kernel_torus_d(x, y, t: float, tol: float = DEFAULT_TOL):
    """ Flat torus heat kernel as a product of circle kernels.

    Args:
        x (ndarray): Points with the coordinates on the last axis.
        y (ndarray): Points with the same number of coordinates.
        t (float): Heat time.
        tol (float): Absolute tolerance; each factor uses ``tol / d``.

    Returns:
        The kernel value(s).

    Raises:
        ``DomainError`` on a dimension mismatch.
    """

    x_arr = np.asarray(x, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    if x_arr.ndim == 0 or y_arr.ndim == 0 or x_arr.shape[-1] != y_arr.shape[-1]:
        raise DomainError(
            f"Torus points have mismatched dimensions {x_arr.shape} and {y_arr.shape}"
        )

    dim = x_arr.shape[-1]
    diff = x_arr - y_arr
    result = theta(diff[..., 0], t, tol / dim)
    for axis in range(1, dim):
        result = result * theta(diff[..., axis], t, tol / dim)
    return result


# end heat_kernel_torus_d()


def sphere_cutoff(t: float, tol: float) -> int:
    """ Highest Legendre degree kept in the sphere series.

    Returns the first degree ``L`` past the maximum of
    ``(2l + 1) exp(-l (l + 1) t)`` whose coefficient is below ``tol / 2`` and
    whose tail bound ``exp(-L (L + 1) t) / (4 pi t)`` is also below
    ``tol / 2``.
    """

    top = int(math.sqrt(750.0 / t)) + 2
    degrees = np.arange(top + 1, dtype=float)
    decay = np.exp(-degrees * (degrees + 1.0) * t)
    coeff = (2.0 * degrees + 1.0) * decay / (4.0 * math.pi)
    tail = decay / (4.0 * math.pi * t)
    mode = (math.sqrt(2.0 / t) - 1.0) / 2.0
    ok = (degrees >= mode) & (coeff < tol / 2.0) & (tail < tol / 2.0)
    hits = np.nonzero(ok)[0]
    if hits.size == 0:
        return top
    return int(hits[0])


# end sphere_cutoff()


def heat_kernel_sphere2(x, y, t: float, tol: float = DEFAULT_TOL):
    """ Heat kernel on the unit sphere via the addition theorem.

    Legendre polynomials are generated by the three-term recurrence
    ``l P_l = (2l - 1) c P_{l-1} - (l - 1) P_{l-2}``.

    Args:
        x (ndarray): Unit 3-vectors on the last axis.
        y (ndarray): Unit 3-vectors on the last axis.
        t (float): Heat time, at least ``SPHERE_T_MIN``.
        tol (float): Absolute tolerance.

    Returns:
        The kernel value(s).
    """

    if t < SPHERE_T_MIN:
        raise DomainError(f"Sphere heat time {t} below floor {SPHERE_T_MIN}")
    x_arr = np.asarray(x, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    if x_arr.shape[-1] != 3 or y_arr.shape[-1] != 3:
        raise DomainError("Sphere points must be 3-vectors")
    for arr in (x_arr, y_arr):
        if np.max(np.abs(np.linalg.norm(arr, axis=-1) - 1.0)) > _UNIT_TOL:
            raise DomainError("Sphere points must be unit vectors")

    cosine = np.clip(np.sum(x_arr * y_arr, axis=-1), -1.0, 1.0)
    degree_max = sphere_cutoff(t, tol)
    logger.debug("heat_kernel_sphere2 t=%g uses degree %d", t, degree_max)

    p_prev = np.ones_like(cosine)
    total = np.full_like(cosine, 1.0 / (4.0 * math.pi))
    if degree_max >= 1:
        p_curr = cosine.copy()
        total = total + 3.0 / (4.0 * math.pi) * math.exp(-2.0 * t) * p_curr
        for degree in range(2, degree_max + 1):
            p_prev, p_curr = p_curr, (
                (2.0 * degree - 1.0) * cosine * p_curr - (degree - 1.0) * p_prev
            ) / degree
            weight = (2.0 * degree + 1.0) / (4.0 * math.pi) \
                * math.exp(-degree * (degree + 1.0) * t)
            total = total + weight * p_curr
    return total


# end heat_kernel_sphere2()


def circle_distance(x, y):
    """ Geodesic distance on the unit-length circle """

    diff = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    return np.abs(diff - np.round(diff))


# end circle_distance()


def torus_distance(x, y):
    """ Geodesic distance on the flat torus """

    diff = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    return np.linalg.norm(diff - np.round(diff), axis=-1)


# end torus_distance()


def sphere_distance(x, y):
    """ Great-circle distance, accurate near antipodes """

    x_arr = np.asarray(x, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    cross = np.linalg.norm(np.cross(x_arr, y_arr), axis=-1)
    dot = np.sum(x_arr * y_arr, axis=-1)
    return np.arctan2(cross, dot)


# end sphere_distance()


def circle() -> ManifoldSpectrum:
    """ The unit-length circle """

    return ManifoldSpectrum(space="circle", dim=1, volume=1.0,
                            kernel_evaluator=heat_kernel_circle,
                            distance=circle_distance,
                            base_point=np.array(0.0))

# end circle()


def torus(d: int) -> ManifoldSpectrum:
    """ The flat torus [0, 1)^d """

    if d < 1:
        raise DomainError(f"Torus dimension must be >= 1, got {d}")
    return ManifoldSpectrum(space="torus", dim=int(d), volume=1.0,
                            kernel_evaluator=heat_kernel_torus_d,
                            distance=torus_distance,
                            base_point=np.zeros(int(d)))

# end torus()


def sphere2() -> ManifoldSpectrum:
    """ The unit sphere in R^3 with area 4 pi """

    return ManifoldSpectrum(space="sphere2", dim=3, volume=4.0 * math.pi,
                            kernel_evaluator=heat_kernel_sphere2,
                            distance=sphere_distance,
                            base_point=np.array([0.0, 0.0, 1.0]),
                            t_min=SPHERE_T_MIN)

# end sphere2()


def builtin(space: str, dim: int = 1) -> ManifoldSpectrum:
    """ Returns the built-in manifold for a point-set space tag """

    if space == "circle":
        return circle()
    if space == "torus":
        return torus(dim)
    if space == "sphere2":
        return sphere2()
    raise DomainError(f"Unknown space {space}")


# end builtin()
