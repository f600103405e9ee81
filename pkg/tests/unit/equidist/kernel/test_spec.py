#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" Tests the kernel coefficient specification """

# Standard imports
import logging
import math
import unittest

# Third party imports
import numpy as np

# Application imports
from equidist.exception import DomainError
from equidist.kernel.spec import KernelSpec, kernel_eval
from equidist.kernel.theta import theta

logger = logging.getLogger(__name__)


class TestKernelSpec(unittest.TestCase):
    """ Validation and evaluation of KernelSpec """

    def test_from_theta(self):
        """ Theta coefficients reproduce the theta function """

        x = np.linspace(0.0, 1.0, 41)
        for t in (0.01, 0.2):
            k = KernelSpec.from_theta(t)
            self.assertEqual(k.coeffs[0], 1.0)
            self.assertAlmostEqual(k.coeffs[1], math.exp(-4.0 * math.pi ** 2 * t))
            self.assertTrue(np.allclose(kernel_eval(k, x), theta(x, t),
                                        rtol=0, atol=1e-12))

    # end test_from_theta()

    def test_frequencies_sorted(self):
        """ frequencies() drops the mean and sorts """

        k = KernelSpec(coeffs={3: 0.1, 0: 1.0, 1: 0.5})
        freqs, coeffs = k.frequencies()
        self.assertEqual(freqs.tolist(), [1.0, 3.0])
        self.assertEqual(coeffs.tolist(), [0.5, 0.1])

    # end test_frequencies_sorted()

    def test_kernel_eval(self):
        """ Direct evaluation of a two-term kernel """

        k = KernelSpec(coeffs={0: 1.0, 2: 0.25}, description="two term")
        self.assertAlmostEqual(kernel_eval(k, 0.0), 1.5)
        self.assertAlmostEqual(kernel_eval(k, 0.25), 0.5)
        self.assertAlmostEqual(kernel_eval(k, 1.125), 1.0)
        self.assertIsInstance(kernel_eval(k, 0.3), float)

        # Mean-only kernel is constant
        flat = KernelSpec(coeffs={0: 1.0})
        self.assertTrue(np.all(kernel_eval(flat, np.array([0.1, 0.9])) == 1.0))

    # end test_kernel_eval()

    def test_invalid(self):
        """ Invalid coefficient maps """

        bad_maps = [
            {1: 0.5},
            {0: 2.0},
            {0: 1.0, 1: -0.1},
            {0: 1.0, -2: 0.1},
            {0: 1.0, 1.5: 0.1},
            {0: 1.0, 1: float("nan")},
        ]
        for coeffs in bad_maps:
            with self.assertRaises(DomainError):
                KernelSpec(coeffs=coeffs)

        with self.assertRaises(DomainError):
            KernelSpec(coeffs={0: 1.0}, tail_bound=-1.0)
        with self.assertRaises(DomainError):
            KernelSpec.from_theta(0.0)
        with self.assertRaises(DomainError):
            kernel_eval({0: 1.0}, 0.2)
        with self.assertRaises(DomainError):
            kernel_eval(KernelSpec(coeffs={0: 1.0}), float("inf"))

    # end test_invalid()

# end class TestKernelSpec
