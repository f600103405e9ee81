#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Pair energies for user-defined circle kernels.
"""

# Standard imports
import logging

# Third party imports
import numpy as np

# Application imports
from ..exception import DomainError
from ..kernel.spec import KernelSpec, kernel_eval
from ..manifold.heat import Method
from ..pointset import PointSet
from ..summation import BlockAccumulator, pairwise_sum
from .circle import exponential_sums
from .pairs import iter_pairs
from .report import EnergyReport

logger = logging.getLogger(__name__)


def _truncated_energy(values: np.ndarray, k: KernelSpec, method: Method) -> float:
    """ Energy of the kernel with exactly the listed coefficients """

    count = values.shape[0]
    if method is Method.SPECTRAL:
        freqs, coeffs = k.frequencies()
        if freqs.size == 0:
            return float(k.coeffs[0])
        real, imag = exponential_sums(values, freqs)
        return float(k.coeffs[0]) + 2.0 * pairwise_sum(coeffs * (real * real + imag * imag))

    if method is Method.DIRECT:
        acc = BlockAccumulator()
        for i, j in iter_pairs(values):
            if i.size:
                acc.add(kernel_eval(k, values[j] - values[i]))
        diagonal = count * kernel_eval(k, 0.0)
        return (2.0 * acc.total() + diagonal) / float(count) ** 2

    raise DomainError(f"Method {method} does not apply to kernel energies")


# end _truncated_energy()


def kernel_energy_report(pts: PointSet, k: KernelSpec,
                         method: Method = Method.SPECTRAL) -> EnergyReport:
    """ Pair energy of a kernel with its error bound.

    Since ``|a_l| <= 1``, coefficients left out of ``k`` change the energy
    by at most ``k.tail_bound``, which is reported as ``error_bound``.

    Args:
        pts (PointSet): Circle points.
        k (KernelSpec): Kernel with nonnegative coefficients.
        method (Method): ``SPECTRAL`` uses ``c_0 + 2 sum c_l |a_l|^2``,
            ``DIRECT`` sums kernel values over all pairs.

    Returns:
        An ``EnergyReport`` without a heat time; ``excess`` is ``energy - 1``.
    """

    if not isinstance(k, KernelSpec):
        raise DomainError("kernel_energy needs a KernelSpec")
    if not isinstance(pts, PointSet) or pts.space != "circle":
        raise DomainError("kernel_energy needs a circle PointSet")
    pts.require_nonempty()
    values = np.asarray(pts.sorted_values())

    energy = _truncated_energy(values, k, method)
    return EnergyReport.theta(n_points=pts.n, t=None, energy=energy, method=method,
                              error_bound=k.tail_bound, label=k.description)


# end kernel_energy_report()


def kernel_energy(pts: PointSet, k: KernelSpec,
                  method: Method = Method.SPECTRAL) -> float:
    """ Pair energy ``(1 / N^2) sum_{m, n} phi(x_n - x_m)`` of a kernel.

    Returns:
        The energy, at least ``c_0 = 1`` up to rounding.
    """
    return kernel_energy_report(pts, k, method).energy


# end kernel_energy()
