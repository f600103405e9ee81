#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Finite-N diagnostics for a sequence family.

For each N of the schedule the report computes

* the theta energy at a fixed time (``fixed_t``, default 1),
* the Gaussian energy at ``t`` from the schedule rule (default
  ``ln(N) / N^2``),
* the pair-correlation curve at integer scales and the weak curve at the
  configured exponent,
* the arc discrepancy and the discrepancy bound,

and turns them into pass/fail readings with the configured thresholds.
These readings describe the finite prefixes only; they do not decide
limits.
"""

# Standard imports
import logging
from typing import List, Tuple

# Application imports
from ..discrepancy import bound_check
from ..energy import gaussian_energy, theta_energy_auto
from ..energy.report import SQRT_PI
from ..paircorr import pc_curve
from ..workflow import Workflow, register
from .config import RunConfig
from .output import Row
from .runner import load_points, map_ordered, resolve_c
from .schedule import TSchedule

logger = logging.getLogger(__name__)

DEFAULT_GAUSSIAN_SCHEDULE = TSchedule(rule="log")


def _verdict(flag) -> str:
    if flag is None:
        return "unavailable"
    return "pass" if flag else "fail"


class CorollaryReport(Workflow):
    """ Stages of the diagnostic report; tasks share the run context """

    stages = ["prepare", "energies", "correlations", "discrepancy", "verdicts"]

    @register(stage="prepare", return_value="pointsets")
    def load(self, config: RunConfig):
        """ Point sets for every N of the schedule """
        return map_ordered(lambda n: load_points(config, n), config.n_schedule,
                           config.threads)

    # end load()

    @register(stage="energies", return_value="fixed_time")
    def fixed_time_energy(self, config: RunConfig, pointsets):
        """ Theta energy at the fixed time """

        tol = config.tolerances["energy"]
        return map_ordered(lambda pts: theta_energy_auto(pts, config.fixed_t, tol),
                           pointsets, config.threads)

    # end fixed_time_energy()

    @register(stage="energies", return_value="gaussian")
    def gaussian_form(self, config: RunConfig, pointsets):
        """ Gaussian energy with and without identical pairs """

        schedule = config.t_schedule or DEFAULT_GAUSSIAN_SCHEDULE
        tol = config.tolerances["energy"]

        def job(pts):
            t = schedule.times_for(pts.n)[0]
            return {"N": pts.n, "t": t,
                    "energy": gaussian_energy(pts, t, tol),
                    "off_diagonal": gaussian_energy(pts, t, tol, include_diagonal=False)}

        return map_ordered(job, pointsets, config.threads)

    # end gaussian_form()

    @register(stage="correlations", return_value="poissonian")
    def poissonian(self, config: RunConfig, pointsets):
        """ Pair correlation at the configured scales, alpha = 1 """
        return map_ordered(lambda pts: pc_curve(pts, config.s_grid, 1.0),
                           pointsets, config.threads)

    # end poissonian()

    @register(stage="correlations", return_value="weak")
    def weak(self, config: RunConfig, pointsets):
        """ Weak pair correlation at the configured exponent """

        alpha = config.verdicts["weak_alpha"]
        return map_ordered(lambda pts: pc_curve(pts, config.s_grid, alpha),
                           pointsets, config.threads)

    # end weak()

    @register(stage="discrepancy", return_value="bounds", can_fail=True)
    def discrepancy_bound(self, config: RunConfig, pointsets):
        """ Discrepancy and bound check; degenerate inputs skip this stage """

        c = resolve_c(config)
        tol = config.tolerances["energy"]
        return map_ordered(lambda pts: bound_check(pts, c, tol), pointsets,
                           config.threads)

    # end discrepancy_bound()

    @register(stage="verdicts", return_value="verdicts")
    def verdicts(self, config: RunConfig, fixed_time, gaussian, poissonian, weak, bounds):
        """ Pass/fail readings at the largest N """

        thresholds = config.verdicts
        excesses = [report.excess for report in fixed_time]
        tol = config.tolerances["energy"]
        nonincreasing = all(later <= earlier + 2.0 * tol
                            for earlier, later in zip(excesses, excesses[1:]))
        gaussian_gap = abs(gaussian[-1]["off_diagonal"] - SQRT_PI)

        result = {
            "fixed_time_energy": _verdict(excesses[-1] <= thresholds["energy_tol"]),
            "fixed_time_nonincreasing": nonincreasing,
            "gaussian_energy": _verdict(gaussian_gap <= thresholds["gaussian_tol"]),
            "poissonian_pair_correlation": _verdict(
                poissonian[-1].max_deviation() <= thresholds["poissonian_tol"]),
            "weak_pair_correlation": _verdict(
                weak[-1].max_deviation() <= thresholds["poissonian_tol"]),
            "discrepancy_bound": _verdict(
                None if bounds is None else all(check.holds for check in bounds)),
        }
        logger.info("Corollary verdicts: %s", result)
        return result

    # end verdicts()

# end class CorollaryReport


def _rows(label: str, context: dict) -> List[Row]:
    """ CSV rows of a finished report context """

    rows = []
    bounds = context.get("bounds") or [None] * len(context["fixed_time"])
    for report, gauss, pc, weak, check in zip(context["fixed_time"], context["gaussian"],
                                              context["poissonian"], context["weak"],
                                              bounds):
        n = report.n_points
        rows.append(Row(kind=label, n_points=n, t=report.t,
                        method=f"fixed_time_{report.method.value}", value=report.energy,
                        excess=report.excess, error_bound=report.error_bound))
        rows.append(Row(kind=label, n_points=n, t=gauss["t"], method="gaussian",
                        value=gauss["energy"], excess=gauss["energy"] - SQRT_PI))
        rows.append(Row(kind=label, n_points=n, t=gauss["t"], method="gaussian_off_diagonal",
                        value=gauss["off_diagonal"], excess=gauss["off_diagonal"] - SQRT_PI))
        rows.append(Row(kind=label, n_points=n, t=None, method="pc_max_deviation",
                        value=pc.max_deviation()))
        rows.append(Row(kind=label, n_points=n, t=None,
                        method=f"weak_pc_alpha={weak.alpha:g}_max_deviation",
                        value=weak.max_deviation()))
        if check is not None:
            rows.append(Row(kind=label, n_points=n, t=None, method="discrepancy",
                            value=check.d_n))
            rows.append(Row(kind=label, n_points=n, t=check.t_star, method="bound",
                            value=check.rhs, excess=check.rhs - check.d_n ** 2))
    return rows


# end _rows()


def _records(context: dict) -> list:
    """ Per-N JSON records """

    records = []
    bounds = context.get("bounds") or [None] * len(context["fixed_time"])
    for report, gauss, pc, weak, check in zip(context["fixed_time"], context["gaussian"],
                                              context["poissonian"], context["weak"],
                                              bounds):
        record = {
            "N": report.n_points,
            "fixed_time_excess": report.excess,
            "gaussian": gauss,
            "pc_values": list(pc.values),
            "pc_max_deviation": pc.max_deviation(),
            "weak_values": list(weak.values),
            "weak_max_deviation": weak.max_deviation(),
        }
        if check is not None:
            record.update({"d_n": check.d_n, "c": check.c, "t_star": check.t_star,
                           "rhs": check.rhs, "holds": check.holds})
        records.append(record)
    return records


# end _records()


def report_corollaries(config: RunConfig) -> Tuple[List[Row], dict]:
    """ Runs the diagnostic report.

    Wall times are not recorded so repeated runs give identical files.

    Args:
        config (RunConfig): Input family, N schedule and thresholds.

    Returns:
        A tuple ``(rows, summary)``; the summary is the JSON document.
    """

    workflow = CorollaryReport()
    context = workflow.run({"config": config})
    summary = {
        "fixed_t": config.fixed_t,
        "thresholds": dict(config.verdicts),
        "results": _records(context),
        "verdicts": context["verdicts"],
        "task_status": {name: status.value for name, status in workflow.status.items()},
    }
    return _rows(config.label, context), summary


# end report_corollaries()
