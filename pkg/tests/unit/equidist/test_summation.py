#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" Tests the deterministic summation helpers """

# Standard imports
import logging
import math

# Third party imports
import numpy as np

# Application imports
from equidist.summation import (BlockAccumulator, pairwise_sum, row_blocks,
                                tree_reduce)

logger = logging.getLogger(__name__)


def test_tree_reduce():
    assert tree_reduce([]) == 0.0
    assert tree_reduce([1.5]) == 1.5
    assert tree_reduce([1.0, 2.0, 3.0, 4.0, 5.0]) == 15.0

# end test_tree_reduce()


def test_pairwise_sum():
    """ Accurate and independent of the block layout within rounding """

    values = np.random.Generator(np.random.PCG64(1)).random(100003)
    exact = math.fsum(values)
    assert abs(pairwise_sum(values) - exact) < 1e-9
    assert abs(pairwise_sum(values, block_size=7) - exact) < 1e-9
    assert pairwise_sum([]) == 0.0

# end test_pairwise_sum()


def test_row_blocks():
    assert list(row_blocks(5, 2)) == [(0, 2), (2, 4), (4, 5)]
    assert list(row_blocks(0)) == []

# end test_row_blocks()


def test_block_accumulator():
    """ Same partials in the same order give the same total """

    acc = BlockAccumulator()
    acc.add(np.array([0.1, 0.2, 0.3]))
    acc.add_scalar(0.4)
    assert len(acc) == 2
    again = BlockAccumulator()
    again.add(np.array([0.1, 0.2, 0.3]))
    again.add_scalar(0.4)
    assert acc.total() == again.total()
    assert abs(acc.total() - 1.0) < 1e-15

# end test_block_accumulator()
