#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" Tests circle theta energies """

# Standard imports
import logging
import math

# Third party imports
import numpy as np
import pytest

# Application imports
from equidist.energy import (energy_profile, fast_radius, gaussian_energy,
                             lattice_energy, theta_energy, theta_energy_auto,
                             theta_energy_fast, theta_energy_spectral)
from equidist.exception import DomainError, SpectralInfeasibleError
from equidist.kernel.theta import theta
from equidist.manifold.heat import Method
from equidist.pointset import PointSet

logger = logging.getLogger(__name__)


def _uniform(n: int, seed: int) -> PointSet:
    rng = np.random.Generator(np.random.PCG64(seed))
    return PointSet.circle(rng.random(n), label=f"uniform-{seed}")


def _lattice(n: int) -> PointSet:
    return PointSet.circle(np.arange(n) / n, label="lattice")


def test_spectral_equals_direct():
    """ The Fourier side and the pair sum give the same energy """

    pts = _uniform(200, seed=1)
    for t in (1e-3, 1e-2, 0.1):
        direct = theta_energy(pts, t)
        spectral = theta_energy_spectral(pts, t)
        assert direct.method == Method.DIRECT
        assert spectral.method == Method.SPECTRAL
        assert spectral.energy == pytest.approx(direct.energy, rel=1e-9)
        assert spectral.excess == pytest.approx(spectral.energy - 1.0, abs=1e-15)
        assert direct.label == "uniform-1"

# end test_spectral_equals_direct()


def test_lattice_closed_form():
    """ Equally spaced points have energy theta_{N^2 t}(0) """

    n, t = 100, 1e-5
    expected = lattice_energy(n, t)
    assert expected == pytest.approx(theta(0.0, n * n * t), abs=1e-14)
    pts = _lattice(n)
    assert theta_energy_spectral(pts, t).energy == pytest.approx(expected, abs=1e-12)
    assert theta_energy(pts, t).energy == pytest.approx(expected, abs=1e-11)

    with pytest.raises(DomainError):
        lattice_energy(0, t)

# end test_lattice_closed_form()


def test_fast_path():
    """ Neighbor truncation matches the full sum """

    pts = _uniform(500, seed=2)
    t = 1e-4
    assert fast_radius(500, t, 1e-12) < 0.5
    fast = theta_energy_fast(pts, t)
    assert fast.method == Method.FAST
    assert fast.energy == pytest.approx(theta_energy(pts, t).energy, abs=1e-10)

    # Case 2: Past the crossover the direct sum is used
    assert theta_energy_fast(pts, 0.2).method == Method.DIRECT

# end test_fast_path()


def test_auto_choice():
    """ The automatic path picks the cheapest method """

    small = theta_energy_auto(_uniform(5, seed=3), 0.5)
    assert small.method == Method.SPECTRAL

    dense = _uniform(2000, seed=4)
    report = theta_energy_auto(dense, 1e-6)
    assert report.method == Method.FAST

# end test_auto_choice()


def test_invariances():
    """ Permutations leave energies unchanged; shifts change them by rounding only """

    pts = _uniform(150, seed=5)
    rng = np.random.Generator(np.random.PCG64(6))
    permuted = PointSet.circle(pts.values[rng.permutation(150)])
    shifted = pts.shifted(0.37)

    for t in (1e-3, 0.05):
        assert theta_energy(permuted, t).energy == theta_energy(pts, t).energy
        assert theta_energy_spectral(shifted, t).energy == pytest.approx(
            theta_energy_spectral(pts, t).energy, abs=1e-13)

# end test_invariances()


def test_bounds():
    """ Energies lie between 1 and theta_t(0) """

    pts = _uniform(64, seed=7)
    for t in (1e-4, 1e-2, 1.0):
        energy = theta_energy(pts, t).energy
        assert 1.0 - 1e-12 <= energy <= theta(0.0, t) + 1e-12

    # Case 2: One point gives theta_t(0)
    single = PointSet.circle([0.42])
    assert theta_energy(single, 0.01).energy == pytest.approx(theta(0.0, 0.01), abs=1e-12)

    # Case 3: Repeated points reach the maximum
    repeated = PointSet.circle([0.3] * 10)
    assert theta_energy(repeated, 0.01).energy == pytest.approx(theta(0.0, 0.01), abs=1e-12)

# end test_bounds()


def test_profile():
    """ Energies decrease along an ascending time list """

    pts = _uniform(100, seed=8)
    times = [1e-4, 1e-3, 1e-2, 0.1, 1.0]
    reports = energy_profile(pts, times)
    energies = [report.energy for report in reports]
    assert [report.t for report in reports] == times
    assert all(later <= earlier + 2e-12 for earlier, later in zip(energies, energies[1:]))

    spectral = energy_profile(pts, times[2:], method=Method.SPECTRAL)
    assert all(report.method == Method.SPECTRAL for report in spectral)

    # Case 2: Invalid time lists and methods
    with pytest.raises(DomainError):
        energy_profile(pts, [0.1, 0.01])
    with pytest.raises(DomainError):
        energy_profile(pts, [0.1, 0.1])
    with pytest.raises(DomainError):
        energy_profile(pts, [])
    with pytest.raises(DomainError):
        energy_profile(pts, [0.1], method=Method.GAUSSIAN)

# end test_profile()


def test_gaussian_form():
    """ Off-diagonal Gaussian energy approaches sqrt(pi) """

    # Case 1: Lattice with fine spacing reproduces sqrt(pi) with its diagonal
    lattice = _lattice(1000)
    total = gaussian_energy(lattice, 1e-3)
    assert total == pytest.approx(math.sqrt(math.pi), abs=1e-6)

    # Case 2: Random points, off-diagonal only
    pts = _uniform(4000, seed=9)
    off = gaussian_energy(pts, 1e-3, include_diagonal=False)
    assert abs(off - math.sqrt(math.pi)) < 0.15

    # Case 3: One point
    single = PointSet.circle([0.5])
    assert gaussian_energy(single, 0.04) == pytest.approx(5.0)
    assert gaussian_energy(single, 0.04, include_diagonal=False) == 0.0

# end test_gaussian_form()


def test_gaussian_form_trend_for_random_points():
    """ Off-diagonal Gaussian energies at t = ln(N) / N^2 approach sqrt(pi) """

    root_pi = math.sqrt(math.pi)
    sizes = (2 ** 10, 2 ** 12, 2 ** 14)
    mean_gaps = []
    for n in sizes:
        t = math.log(n) / n ** 2
        gaps = []
        for seed in range(4):
            off = gaussian_energy(_uniform(n, seed), t, include_diagonal=False)
            assert abs(off - root_pi) <= 0.15, (n, seed)
            gaps.append(abs(off - root_pi))
        mean_gaps.append(sum(gaps) / len(gaps))
    logger.debug("Mean gaps to sqrt(pi): %s", mean_gaps)

    # Fluctuations scale like (N sqrt(ln N))^(-1/2)
    assert mean_gaps[-1] < mean_gaps[0]
    assert mean_gaps[-1] < 0.05

# end test_gaussian_form_trend_for_random_points()


def test_errors():
    """ Invalid inputs to the circle energies """

    pts = _uniform(10, seed=10)
    with pytest.raises(DomainError):
        theta_energy(PointSet.circle([]), 0.1)
    with pytest.raises(DomainError):
        theta_energy(pts, 0.0)
    with pytest.raises(DomainError):
        theta_energy(PointSet.torus(np.zeros((2, 2))), 0.1)
    with pytest.raises(SpectralInfeasibleError) as info:
        theta_energy_spectral(pts, 1e-6, cap=10)
    assert info.value.cap == 10
    assert info.value.needed > 10

# end test_errors()
