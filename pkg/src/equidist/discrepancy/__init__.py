#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .arcs import DiscrepancyResult, arc_discrepancy, star_discrepancy  # noqa: F401
from .bound import (  # noqa: F401
    BoundCheck,
    bound_check,
    calibrate_c,
    scale_mass,
    C_GRID_MIN,
    C_GRID_MAX,
)
from .trend import RateFit, fit_log_rate, log_rate_constant  # noqa: F401
