#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .counts import (  # noqa: F401
    PairCorrCurve,
    pair_count,
    pair_count_raw,
    pc_curve,
    pc_verdict,
    poissonian_verdict,
    weak_verdict,
    integer_s_agreement,
    diagonal_weight,
    DEFAULT_PC_TOL,
)
from .step import StepApprox, step_approx_gaussian, energy_from_counts  # noqa: F401
