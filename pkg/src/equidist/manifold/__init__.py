#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .spectrum import (  # noqa: F401
    ManifoldSpectrum,
    circle,
    torus,
    sphere2,
    builtin,
    heat_kernel_circle,
    heat_kernel_torus_d,
    heat_kernel_sphere2,
    sphere_cutoff,
    SPHERE_T_MIN,
)
from .heat import (  # noqa: F401
    Method,
    HeatEnergyReport,
    heat_energy,
    diagonal_floor,
    torus_spectral_energy,
)
