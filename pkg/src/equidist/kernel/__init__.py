#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .theta import (  # noqa: F401
    ThetaParams,
    theta_spectral,
    theta_spatial,
    theta,
    theta_mass,
    gaussian_kernel,
    gaussian_lower_bound,
    lemma_radius,
    lemma_scale,
    spectral_cutoff,
    image_cutoff,
    CROSSOVER_T,
)
from .spec import KernelSpec, kernel_eval  # noqa: F401
