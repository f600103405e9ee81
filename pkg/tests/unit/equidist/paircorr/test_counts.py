#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" Tests pair counts and pair correlation verdicts """

# Standard imports
import logging

# Third party imports
import numpy as np
import pytest

# Application imports
from equidist.exception import DomainError
from equidist.kernel.theta import theta
from equidist.paircorr.counts import (diagonal_weight, integer_s_agreement,
                                      pair_count, pair_count_raw, pc_curve,
                                      pc_verdict, poissonian_verdict,
                                      weak_verdict)
from equidist.pointset import PointSet
from equidist.sequences.generator import GeneratorSpec, generate

logger = logging.getLogger(__name__)

LARGE_N = 2 ** 14


def _brute_force(values: np.ndarray, radius: float) -> int:
    gaps = np.abs(values[:, None] - values[None, :])
    gaps = np.minimum(gaps, 1.0 - gaps)
    mask = gaps <= radius
    np.fill_diagonal(mask, False)
    return int(np.sum(mask))


def test_raw_counts_match_brute_force():
    """ Ordered pair counts agree with an all-pairs scan """

    rng = np.random.Generator(np.random.PCG64(51))
    values = rng.random(300)
    pts = PointSet.circle(values)
    for s in (0.0, 0.5, 1.0, 3.0, 40.0, 150.0):
        for alpha in (1.0, 0.5):
            radius = s / 300.0 ** alpha
            expected = _brute_force(values, radius)
            assert pair_count_raw(pts, s, alpha) == expected
            assert pair_count_raw(pts, s, alpha, include_diagonal=True) == expected + 300

# end test_raw_counts_match_brute_force()


def test_lattice_counts():
    """ Equally spaced points have step-function counts """

    n = 1000
    pts = PointSet.circle(np.arange(n) / n)
    assert pair_count(pts, 0.5) == 0.0
    assert pair_count(pts, 1.0) == pytest.approx(2.0)
    assert pair_count(pts, 2.5) == pytest.approx(4.0)
    assert pair_count(pts, 2.5, include_diagonal=True) == pytest.approx(5.0)

    # Past half the circle every pair counts
    assert pair_count_raw(pts, n) == n * (n - 1)

# end test_lattice_counts()


def test_uniform_is_poissonian():
    """ Independent uniform points follow 2 s """

    pts = generate(GeneratorSpec(kind="uniform_random", seed=52), LARGE_N)
    grid = [0.5, 1.0, 2.0, 4.0]
    curve = pc_curve(pts, grid)
    assert curve.max_deviation() < 0.2
    assert poissonian_verdict(pts, grid)
    assert weak_verdict(pts, [1.0, 2.0, 4.0, 8.0], alpha=0.5)

    agreement = integer_s_agreement(pts, 2)
    assert agreement == (True, True)

# end test_uniform_is_poissonian()


def test_duplicated_law():
    """ Doubling every point adds one to the Poissonian curve """

    pts = generate(GeneratorSpec(kind="duplicated", seed=53), LARGE_N)
    grid = np.array([0.5, 1.0, 2.0, 4.0])
    curve = pc_curve(pts, grid)
    assert np.allclose(curve.values, 1.0 + 2.0 * grid, atol=0.3)
    assert not pc_verdict(curve)

    # The twins are invisible to weak correlation at this size
    weak = pc_curve(pts, grid, alpha=0.5)
    assert weak.max_deviation() < 0.2

# end test_duplicated_law()


def test_lattice_not_poissonian():
    pts = PointSet.circle(np.arange(500) / 500.0)
    assert not poissonian_verdict(pts, [0.25, 0.5, 1.5])

# end test_lattice_not_poissonian()


def test_diagonal_share():
    """ Included diagonal terms are removed from the deviation """

    pts = generate(GeneratorSpec(kind="uniform_random", seed=54), 4096)
    plain = pc_curve(pts, [1.0, 2.0])
    with_diagonal = pc_curve(pts, [1.0, 2.0], include_diagonal=True)
    assert np.allclose(with_diagonal.values, plain.values + 1.0)
    assert np.allclose(with_diagonal.deviation(), plain.deviation())
    assert with_diagonal.diagonal_share() == 1.0

    weak = pc_curve(pts, [1.0], alpha=0.5, include_diagonal=True)
    assert weak.diagonal_share() == pytest.approx(4096 ** -0.5)

# end test_diagonal_share()


def test_diagonal_weight():
    assert diagonal_weight(10, 0.01) == pytest.approx(theta(0.0, 0.01) / 10.0)
    with pytest.raises(DomainError):
        diagonal_weight(0, 0.01)

# end test_diagonal_weight()


def test_errors():
    """ Invalid scales and exponents """

    pts = PointSet.circle([0.1, 0.2, 0.7])
    with pytest.raises(DomainError):
        pc_curve(pts, [2.0, 1.0])
    with pytest.raises(DomainError):
        pc_curve(pts, [-1.0, 1.0])
    with pytest.raises(DomainError):
        pc_curve(pts, [])
    with pytest.raises(DomainError):
        pc_curve(pts, [1.0], alpha=0.0)
    with pytest.raises(DomainError):
        pair_count(pts, 1.0, alpha=1.5)
    with pytest.raises(DomainError):
        pair_count(pts, -0.5)
    with pytest.raises(DomainError):
        weak_verdict(pts, [1.0], alpha=1.0)
    with pytest.raises(DomainError):
        integer_s_agreement(pts, -1)
    with pytest.raises(DomainError):
        pc_curve(PointSet.circle([]), [1.0])

# end test_errors()
