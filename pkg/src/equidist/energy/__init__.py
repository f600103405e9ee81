#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .report import EnergyReport  # noqa: F401
from .circle import (  # noqa: F401
    theta_energy,
    theta_energy_fast,
    theta_energy_spectral,
    theta_energy_auto,
    gaussian_energy,
    energy_profile,
    lattice_energy,
    exponential_sums,
    fast_radius,
    gaussian_radius,
    DEFAULT_ENERGY_TOL,
)
from .custom import kernel_energy, kernel_energy_report  # noqa: F401
