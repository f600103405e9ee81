#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" Tests the point-set generators """

# Standard imports
import logging
import math

# Third party imports
import numpy as np
import pytest

# Application imports
from equidist.exception import DomainError
from equidist.sequences.generator import (GOLDEN, KINDS, GeneratorSpec,
                                          default_alpha, generate)

logger = logging.getLogger(__name__)

SEEDED = {"uniform_random", "duplicated", "clustered", "sphere_random"}


def _spec(kind: str, **kwargs) -> GeneratorSpec:
    if kind in SEEDED:
        kwargs.setdefault("seed", 7)
    return GeneratorSpec(kind=kind, **kwargs)


def test_kronecker_and_lattice():
    """ Closed forms of the deterministic families """

    pts = generate(_spec("kronecker"), 10)
    expected = np.mod(np.arange(1, 11) * GOLDEN, 1.0)
    assert np.allclose(pts.values, expected, rtol=0, atol=1e-15)
    assert pts.label == "kronecker"

    lattice = generate(_spec("lattice", label="grid"), 8)
    assert np.array_equal(lattice.values, np.arange(8) / 8.0)
    assert lattice.label == "grid"

    custom = generate(_spec("kronecker", alpha=(0.25,)), 4)
    assert np.array_equal(custom.values, [0.25, 0.5, 0.75, 0.0])

# end test_kronecker_and_lattice()


def test_van_der_corput():
    """ Radical inverses in bases 2 and 3 """

    base2 = generate(_spec("van_der_corput"), 7)
    assert np.allclose(base2.values, [0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875])

    base3 = generate(_spec("van_der_corput", base=3), 4)
    assert np.allclose(base3.values, [1 / 3, 2 / 3, 1 / 9, 4 / 9])

# end test_van_der_corput()


def test_random_families():
    """ Seeded families are reproducible and follow their construction """

    first = generate(_spec("uniform_random"), 100)
    second = generate(_spec("uniform_random"), 100)
    assert np.array_equal(first.values, second.values)
    other = generate(_spec("uniform_random", seed=8), 100)
    assert not np.array_equal(first.values, other.values)

    duplicated = generate(_spec("duplicated"), 9)
    assert np.array_equal(duplicated.values[0:8:2], duplicated.values[1:8:2])
    assert duplicated.n == 9

    clustered = generate(_spec("clustered", interval=(0.2, 0.3)), 500)
    assert clustered.values.min() >= 0.2
    assert clustered.values.max() < 0.3

    sphere = generate(_spec("sphere_random"), 50)
    assert sphere.space == "sphere2"
    assert np.allclose(np.linalg.norm(sphere.values, axis=1), 1.0)

# end test_random_families()


def test_prefix_consistency():
    """ Larger N extends the smaller sequence """

    for kind in ("kronecker", "van_der_corput", "uniform_random", "duplicated",
                 "clustered", "sphere_random"):
        small = generate(_spec(kind), 33)
        large = generate(_spec(kind), 100)
        assert np.array_equal(large.values[:33], small.values), kind

# end test_prefix_consistency()


def test_torus_kronecker():
    """ Multidimensional Kronecker uses generalized golden increments """

    alpha = default_alpha(2)
    assert len(alpha) == 2
    g = 1.0 / alpha[0]
    assert g ** 3 == pytest.approx(g + 1.0)
    assert alpha[1] == pytest.approx(alpha[0] ** 2)

    pts = generate(_spec("kronecker", d=2), 20)
    assert pts.space == "torus"
    assert pts.values.shape == (20, 2)
    assert _spec("kronecker", d=2).space == "torus"
    assert default_alpha(1) == (GOLDEN,)

# end test_torus_kronecker()


def test_sphere_fibonacci():
    """ Fibonacci points are unit vectors with balanced heights """

    pts = generate(_spec("sphere_fibonacci"), 101)
    assert np.allclose(np.linalg.norm(pts.values, axis=1), 1.0)
    assert abs(np.mean(pts.values[:, 2])) < 1e-12

# end test_sphere_fibonacci()


def test_settings():
    """ Specs built from configuration mappings """

    spec = GeneratorSpec.from_settings({"kind": "kronecker", "alpha": 0.3})
    assert spec.alpha == (0.3,)
    spec = GeneratorSpec.from_settings({"kind": "clustered", "seed": 1,
                                        "interval": [0.5, 0.6]})
    assert spec.interval == (0.5, 0.6)
    assert spec.with_seed(5).seed == 5
    assert GeneratorSpec(kind="lattice").with_seed(5).seed is None

    with pytest.raises(DomainError):
        GeneratorSpec.from_settings({"alpha": 0.3})
    with pytest.raises(DomainError):
        GeneratorSpec.from_settings({"kind": "lattice", "colour": "red"})

# end test_settings()


def test_invalid_specs():
    """ Parameter validation """

    with pytest.raises(ValueError):
        GeneratorSpec(kind="halton")
    with pytest.raises(DomainError):
        GeneratorSpec(kind="uniform_random")
    with pytest.raises(DomainError):
        GeneratorSpec(kind="van_der_corput", base=1)
    with pytest.raises(DomainError):
        GeneratorSpec(kind="lattice", d=2)
    with pytest.raises(DomainError):
        GeneratorSpec(kind="clustered", seed=1, interval=(0.5, 0.4))
    with pytest.raises(DomainError):
        GeneratorSpec(kind="kronecker", alpha=(0.1, 0.2))
    with pytest.raises(DomainError):
        GeneratorSpec(kind="kronecker", alpha=(math.inf,))
    with pytest.raises(DomainError):
        GeneratorSpec(kind="uniform_random", seed=-1)
    with pytest.raises(DomainError):
        generate(_spec("lattice"), 0)

    assert set(KINDS) >= SEEDED

# end test_invalid_specs()
