#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .config import RunConfig, load_config  # noqa: F401
from .schedule import TSchedule, evaluate_schedule  # noqa: F401
from .main import run_config  # noqa: F401
from .corollaries import CorollaryReport, report_corollaries  # noqa: F401
