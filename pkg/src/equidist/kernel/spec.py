#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
User-defined kernels on the circle.

A ``KernelSpec`` describes an even kernel ``phi`` through its nonnegative
Fourier coefficients ``c_l``:

    phi(x) = c_0 + 2 sum_{l >= 1} c_l cos(2 pi l x)

Unit mass requires ``c_0 = 1``. Nonnegative coefficients make the kernel
positive definite, which is what the energy floor relies on. Coefficients
have finite support; an infinite family is represented by a truncation plus
``tail_bound``, an upper bound on ``2 sum c_l`` over the dropped frequencies.
"""

# Standard imports
import logging
import math
from typing import Dict

# Third party imports
import attr
import numpy as np

# Application imports
from ..exception import DomainError
from .theta import circle_phase, spectral_cutoff, DEFAULT_TOL

logger = logging.getLogger(__name__)

# Allowed deviation of c_0 from 1
MASS_TOL = 1e-12


def _check_coeffs(instance, attribute, value):
    """ attrs validator for the coefficient map """

    if 0 not in value:
        raise DomainError("Kernel needs the mean coefficient c_0")
    if abs(value[0] - 1.0) > MASS_TOL:
        raise DomainError(f"Kernel must have unit mass, got c_0 = {value[0]}")
    for freq, coeff in value.items():
        if not isinstance(freq, (int, np.integer)) or freq < 0:
            raise DomainError(f"Frequencies must be nonnegative integers, got {freq}")
        if not (np.isfinite(coeff) and coeff >= 0):
            raise DomainError(f"Coefficient c_{freq} = {coeff} must be >= 0")


# end _check_coeffs()


def _check_tail(instance, attribute, value):
    """ attrs validator for the tail bound """
    if not (np.isfinite(value) and value >= 0):
        raise DomainError(f"Tail bound must be finite and >= 0, got {value}")


# end _check_tail()


@attr.s(frozen=True)
class KernelSpec:
    """ Even positive-definite circle kernel given by its coefficients.

    ``tail_bound`` bounds ``2 sum c_l`` over the frequencies left out of
    ``coeffs``; energies of the listed coefficients are within it of the
    full kernel's energy.
    """

    coeffs = attr.ib(type=Dict[int, float], validator=_check_coeffs)
    description = attr.ib(type=str, default="")
    tail_bound = attr.ib(type=float, default=0.0, converter=float,
                         validator=_check_tail)

    @classmethod
    def from_theta(cls, t: float, tol: float = DEFAULT_TOL) -> "KernelSpec":
        """ Coefficients ``exp(-4 pi^2 l^2 t)`` of the theta function """

        if not t > 0:
            raise DomainError(f"Heat time must be positive, got {t}")
        n_terms = spectral_cutoff(t, tol)
        rate = 4.0 * math.pi ** 2 * t
        coeffs = {0: 1.0}
        coeffs.update({freq: math.exp(-rate * freq * freq)
                       for freq in range(1, n_terms + 1)})
        return cls(coeffs=coeffs, description=f"theta t={t:g}", tail_bound=tol)

    # end from_theta()

    def frequencies(self):
        """ Returns ``(freqs, coeffs)`` arrays for ``l >= 1``, sorted by frequency """

        items = sorted((freq, coeff) for freq, coeff in self.coeffs.items()
                       if freq > 0)
        freqs = np.array([freq for freq, _ in items], dtype=float)
        values = np.array([coeff for _, coeff in items], dtype=float)
        return freqs, values

    # end frequencies()

# end class KernelSpec


def kernel_eval(k: KernelSpec, x):
    """ Evaluates ``c_0 + 2 sum c_l cos(2 pi l x)``.

    Args:
        k (KernelSpec): The kernel.
        x (float or ndarray): Circle position(s).

    Returns:
        The kernel value(s); a float for scalar input.
    """

    if not isinstance(k, KernelSpec):
        raise DomainError("kernel_eval needs a KernelSpec")
    array = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(array)):
        raise DomainError("Position must be finite")

    freqs, coeffs = k.frequencies()
    flat = np.mod(np.ravel(array), 1.0)
    total = np.full(flat.shape, float(k.coeffs[0]))
    if freqs.size:
        phase = np.ascontiguousarray(circle_phase(freqs, flat).T)
        total = total + 2.0 * np.sum(np.cos(phase) * coeffs[None, :], axis=1)
    result = total.reshape(array.shape)
    return float(result) if array.ndim == 0 else result


# end kernel_eval()
