#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" Tests the point-set container """

# Standard imports
import logging

# Third party imports
import numpy as np
import pytest

# Application imports
from equidist.exception import DomainError
from equidist.pointset import PointSet, reduce_mod1

logger = logging.getLogger(__name__)


def test_reduce_mod1():
    """ Reduction always lands in [0, 1) """

    values = reduce_mod1([-1e-20, 1.0, 2.25, -0.75, 0.5])
    assert np.all(values >= 0.0) and np.all(values < 1.0)
    assert values.tolist() == [0.0, 0.0, 0.25, 0.25, 0.5]

# end test_reduce_mod1()


def test_constructors():
    """ Circle, torus and sphere constructors """

    circle = PointSet.circle([1.25, -0.5], label="c")
    assert circle.values.tolist() == [0.25, 0.5]
    assert circle.n == 2 and circle.dim == 1

    torus = PointSet.torus([[0.5, 1.5], [2.0, 0.25]])
    assert torus.dim == 2
    assert torus.values.tolist() == [[0.5, 0.5], [0.0, 0.25]]

    sphere = PointSet.sphere([0.0, 0.0, 1.0])
    assert sphere.n == 1 and sphere.dim == 3

    # Values are frozen
    with pytest.raises(ValueError):
        circle.values[0] = 0.1

# end test_constructors()


def test_sorting_and_prefix():
    """ Sorted views, shifts and prefixes """

    pts = PointSet.circle([0.7, 0.1, 0.4], label="p")
    assert pts.sorted_values().tolist() == [0.1, 0.4, 0.7]
    ordered = pts.as_sorted()
    assert ordered.sorted and ordered.label == "p"
    assert ordered.sorted_values() is ordered.values

    assert pts.prefix(2).values.tolist() == [0.7, 0.1]
    assert pts.shifted(0.5).values == pytest.approx([0.2, 0.6, 0.9])

    with pytest.raises(DomainError):
        PointSet(space="circle", values=np.array([0.5, 0.1]), sorted=True)
    with pytest.raises(DomainError):
        PointSet.torus([[0.1, 0.2]]).sorted_values()
    with pytest.raises(DomainError):
        PointSet.sphere([0.0, 0.0, 1.0]).shifted(0.1)

# end test_sorting_and_prefix()


def test_validation():
    """ Invalid values are rejected """

    with pytest.raises(DomainError):
        PointSet.circle([0.1, float("nan")])
    with pytest.raises(DomainError):
        PointSet(space="circle", values=np.array([1.0]))
    with pytest.raises(DomainError):
        PointSet(space="circle", values=np.zeros((2, 2)))
    with pytest.raises(DomainError):
        PointSet.sphere([[1.0, 1.0, 0.0]])
    with pytest.raises(DomainError):
        PointSet.sphere([[1.0, 0.0]])
    with pytest.raises(ValueError):
        PointSet(space="plane", values=np.zeros(1))
    with pytest.raises(DomainError):
        PointSet.circle([]).require_nonempty()

# end test_validation()
