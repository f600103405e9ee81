#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" Tests energies of user-defined kernels """

# Standard imports
import logging

# Third party imports
import numpy as np
import pytest

# Application imports
from equidist.energy import kernel_energy, kernel_energy_report, theta_energy
from equidist.exception import DomainError
from equidist.kernel.spec import KernelSpec
from equidist.manifold.heat import Method
from equidist.pointset import PointSet

logger = logging.getLogger(__name__)


def test_theta_kernel():
    """ The theta coefficients reproduce the theta energy """

    rng = np.random.Generator(np.random.PCG64(21))
    pts = PointSet.circle(rng.random(50))
    t = 0.02
    k = KernelSpec.from_theta(t)
    expected = theta_energy(pts, t).energy
    assert kernel_energy(pts, k) == pytest.approx(expected, abs=1e-12)
    assert kernel_energy(pts, k, method=Method.DIRECT) == pytest.approx(expected, abs=1e-10)

# end test_theta_kernel()


def test_fejer_like_kernel():
    """ A finite kernel sees only its frequencies """

    # Lattice of 8 points: a_l vanishes unless 8 divides l
    pts = PointSet.circle(np.arange(8) / 8.0)
    k = KernelSpec(coeffs={0: 1.0, 3: 0.5, 8: 0.25})
    assert kernel_energy(pts, k) == pytest.approx(1.5, abs=1e-14)
    assert kernel_energy(pts, k, method=Method.DIRECT) == pytest.approx(1.5, abs=1e-12)

    # Mean-only kernel
    assert kernel_energy(pts, KernelSpec(coeffs={0: 1.0})) == 1.0

# end test_fejer_like_kernel()


def test_report_carries_tail_bound():
    """ The truncation bound of the kernel becomes the error bound """

    rng = np.random.Generator(np.random.PCG64(4))
    pts = PointSet.circle(rng.random(40))

    # Case 1: Truncated theta coefficients
    k = KernelSpec.from_theta(0.05, tol=1e-9)
    report = kernel_energy_report(pts, k)
    assert report.error_bound == 1e-9
    assert report.energy == kernel_energy(pts, k)
    assert report.excess == report.energy - 1.0
    assert report.method == Method.SPECTRAL
    assert report.label == k.description
    assert abs(report.energy - theta_energy(pts, 0.05).energy) <= report.error_bound + 1e-12

    # Case 2: A declared tail passes through unchanged
    k = KernelSpec(coeffs={0: 1.0, 1: 0.2}, tail_bound=0.3)
    report = kernel_energy_report(pts, k, method=Method.DIRECT)
    assert report.error_bound == 0.3
    assert report.energy >= 1.0 - 1e-12

# end test_report_carries_tail_bound()


def test_errors():
    """ Invalid inputs """

    pts = PointSet.circle([0.1, 0.4])
    k = KernelSpec(coeffs={0: 1.0, 1: 0.1})
    with pytest.raises(DomainError):
        kernel_energy(pts, {0: 1.0})
    with pytest.raises(DomainError):
        kernel_energy(PointSet.circle([]), k)
    with pytest.raises(DomainError):
        kernel_energy(pts, k, method=Method.FAST)

# end test_errors()
