#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Energy report for circle energies.
"""

# Standard imports
import math

# Third party imports
import attr

# Application imports
from ..manifold.heat import HeatEnergyReport, Method

# Limit of the Gaussian form of the energy for equidistributed sequences
SQRT_PI = math.sqrt(math.pi)


@attr.s(frozen=True)
class EnergyReport(HeatEnergyReport):
    """ Heat energy report for the circle, with any ``Method`` tag.

    ``excess`` is measured against 1 for theta energies and against
    sqrt(pi) for the Gaussian form.
    """

    label = attr.ib(type=str, default="")

    @classmethod
    def theta(cls, n_points: int, t: float, energy: float, method: Method,
              error_bound: float, label: str = "",
              excess: float = None) -> "EnergyReport":
        """ Report for a theta energy; ``excess`` defaults to ``energy - 1`` """

        if excess is None:
            excess = energy - 1.0
        return cls(n_points=n_points, t=t, energy=energy, excess=excess,
                   method=method, error_bound=error_bound, label=label)

    # end theta()

    @classmethod
    def gaussian(cls, n_points: int, t: float, energy: float,
                 error_bound: float, label: str = "") -> "EnergyReport":
        """ Report for the Gaussian form, with excess over sqrt(pi) """

        return cls(n_points=n_points, t=t, energy=energy,
                   excess=energy - SQRT_PI, method=Method.GAUSSIAN,
                   error_bound=error_bound, label=label)

    # end gaussian()

# end class EnergyReport
