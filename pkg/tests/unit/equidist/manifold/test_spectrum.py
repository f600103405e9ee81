#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" Tests the manifold heat kernels """

# Standard imports
import logging
import math

# Third party imports
import numpy as np
import pytest
from scipy import integrate

# Application imports
from equidist.exception import DomainError
from equidist.kernel.theta import theta
from equidist.manifold import spectrum
from equidist.manifold.spectrum import SPHERE_T_MIN, sphere_cutoff

logger = logging.getLogger(__name__)

NORTH = np.array([0.0, 0.0, 1.0])


def _sphere_point(c: float) -> np.ndarray:
    """ Unit vector at polar cosine ``c`` """
    return np.array([math.sqrt(max(1.0 - c * c, 0.0)), 0.0, c])


def test_builtin():
    """ Tests built-in lookup """

    assert spectrum.builtin("circle").volume == 1.0
    assert spectrum.builtin("torus", 3).dim == 3
    assert spectrum.builtin("sphere2").volume == pytest.approx(4.0 * math.pi)
    with pytest.raises(DomainError):
        spectrum.builtin("hyperbolic")
    with pytest.raises(DomainError):
        spectrum.torus(0)

# end test_builtin()


def test_circle_semigroup():
    """ K_s * K_t = K_(s+t) on the circle """

    m = spectrum.circle()
    s, t, x = 0.01, 0.03, 0.2
    value, _ = integrate.quad(
        lambda z: float(m.kernel(x, z, s)) * float(m.kernel(z, 0.0, t)),
        0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
    assert value == pytest.approx(theta(x, s + t), abs=1e-9)

# end test_circle_semigroup()


def test_torus_product():
    """ Torus kernel factors over coordinates """

    m = spectrum.torus(2)
    x = np.array([0.1, 0.7])
    y = np.array([0.4, 0.2])
    t = 0.05
    expected = theta(-0.3, t) * theta(0.5, t)
    assert float(m.kernel(x, y, t)) == pytest.approx(expected, rel=1e-12)
    assert m.on_diagonal(t) == pytest.approx(theta(0.0, t) ** 2, rel=1e-12)

    with pytest.raises(DomainError):
        m.kernel(np.zeros(2), np.zeros(3), t)

# end test_torus_product()


def test_sphere_mass_and_semigroup():
    """ Sphere kernel integrates to one and satisfies the semigroup law """

    m = spectrum.sphere2()
    t = 0.1

    def kernel_at(c, time):
        return float(m.kernel(NORTH, _sphere_point(c), time))

    # Case 1: Unit mass, with dA = 2 pi dc for zonal functions
    mass, _ = integrate.quad(lambda c: 2.0 * math.pi * kernel_at(c, t),
                             -1.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
    assert mass == pytest.approx(1.0, abs=1e-9)

    # Case 2: int K_t(x, z)^2 dz = K_2t(x, x)
    square, _ = integrate.quad(lambda c: 2.0 * math.pi * kernel_at(c, t) ** 2,
                               -1.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
    assert square == pytest.approx(m.on_diagonal(2.0 * t), rel=1e-8)

    # Case 3: Long times flatten to 1 / (4 pi)
    assert m.on_diagonal(20.0) == pytest.approx(1.0 / (4.0 * math.pi), abs=1e-12)

# end test_sphere_mass_and_semigroup()


def test_sphere_errors():
    """ Sphere domain checks """

    m = spectrum.sphere2()
    with pytest.raises(DomainError):
        m.kernel(NORTH, NORTH, SPHERE_T_MIN / 2.0)
    with pytest.raises(DomainError):
        m.kernel(NORTH, np.array([0.0, 0.0, 2.0]), 0.1)
    with pytest.raises(DomainError):
        m.kernel(NORTH, np.array([0.0, 1.0]), 0.1)
    with pytest.raises(DomainError):
        m.check_time(0.0)

# end test_sphere_errors()


def test_sphere_cutoff():
    """ Degree cutoff grows as t shrinks and bounds the tail """

    small = sphere_cutoff(1e-3, 1e-12)
    large = sphere_cutoff(0.5, 1e-12)
    assert small > large >= 1
    degree = small
    tail = math.exp(-degree * (degree + 1) * 1e-3) / (4.0 * math.pi * 1e-3)
    assert tail < 1e-12

# end test_sphere_cutoff()


def test_distances():
    """ Geodesic distances on the built-ins """

    assert spectrum.circle().distance(0.9, 0.1) == pytest.approx(0.2)
    torus = spectrum.torus(2)
    assert float(torus.distance(np.array([0.0, 0.0]), np.array([0.9, 0.5]))) \
        == pytest.approx(math.hypot(0.1, 0.5))
    sphere = spectrum.sphere2()
    assert float(sphere.distance(NORTH, -NORTH)) == pytest.approx(math.pi)
    assert float(sphere.distance(NORTH, _sphere_point(0.0))) \
        == pytest.approx(math.pi / 2.0)

# end test_distances()
