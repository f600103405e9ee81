#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command execution.

Each command expands its schedule into independent jobs, evaluates them
on a thread pool and collects the results in schedule order before the
report is assembled.
"""

# Standard imports
from concurrent.futures import ThreadPoolExecutor
import logging
import time
from typing import Callable, Iterable, List, Tuple

# Application imports
from ..discrepancy import (
    arc_discrepancy,
    bound_check,
    calibrate_c,
    log_rate_constant,
    star_discrepancy,
)
from ..energy import (
    EnergyReport,
    energy_profile,
    gaussian_energy,
    theta_energy,
    theta_energy_auto,
    theta_energy_fast,
    theta_energy_spectral,
)
from ..exception import DomainError, InputError, SpectralInfeasibleError
from ..manifold import Method, builtin, heat_energy
from ..paircorr import pc_curve
from ..pointset import PointSet
from ..sequences import GeneratorSpec, generate, read_pointset
from .config import RunConfig
from .output import Row, write_report

logger = logging.getLogger(__name__)

# Families and sizes used to calibrate the discrepancy constant
CALIBRATION_SIZES = (64, 256, 1024)
CALIBRATION_SEED = 20240601

_THETA_METHODS = {
    "auto": theta_energy_auto,
    "direct": theta_energy,
    "fast": theta_energy_fast,
    "spectral": theta_energy_spectral,
}


def map_ordered(func: Callable, items: Iterable, threads: int) -> List:
    """ Applies ``func`` to the items on a thread pool, keeping item order """

    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))


# end map_ordered()


def timed(func: Callable, *args, **kwargs) -> Tuple[object, int]:
    """ Returns ``(result, elapsed nanoseconds)`` """

    start = time.perf_counter_ns()
    result = func(*args, **kwargs)
    return result, time.perf_counter_ns() - start


# end timed()


def load_points(config: RunConfig, n: int) -> PointSet:
    """ First ``n`` points of the configured input """

    source = config.input
    if isinstance(source, GeneratorSpec):
        return generate(source, n)
    points = read_pointset(source)
    if n > points.n:
        raise InputError(f"{source} holds {points.n} points, {n} requested")
    return points.prefix(n)


# end load_points()


def energy_report(pts: PointSet, t: float, method: str, tol: float,
                  heat_tol: float) -> EnergyReport:
    """ Energy of a point set with the configured method """

    if pts.space == "circle":
        if method == "gaussian":
            value = gaussian_energy(pts, t, tol)
            return EnergyReport.gaussian(n_points=pts.n, t=t, energy=value,
                                         error_bound=tol, label=pts.label)
        return _THETA_METHODS[method](pts, t, tol)

    manifold = builtin(pts.space, pts.dim)
    if method in ("fast", "gaussian"):
        raise DomainError(f"Method {method} is only available on the circle")
    if method == "direct" or (method == "auto" and pts.space == "sphere2"):
        return heat_energy(manifold, pts, t, heat_tol, Method.DIRECT)
    try:
        return heat_energy(manifold, pts, t, heat_tol, Method.SPECTRAL)
    except SpectralInfeasibleError:
        if method == "spectral":
            raise
        logger.debug("Falling back to the direct heat energy at t=%g", t)
        return heat_energy(manifold, pts, t, heat_tol, Method.DIRECT)


# end energy_report()


def _report_row(config: RunConfig, report, elapsed: int) -> Row:
    return Row(kind=config.label, n_points=report.n_points, t=report.t,
               method=report.method.value, value=report.energy,
               excess=report.excess, error_bound=report.error_bound,
               wall_time_ns=elapsed if config.record_wall_time else 0)


def _floor(pts_space: str, dim: int) -> float:
    return 1.0 / builtin(pts_space, dim).volume


def run_energy(config: RunConfig):
    """ One energy per (N, t) """

    jobs = [(n, t) for n in config.n_schedule for t in config.t_schedule.times_for(n)]
    tol, heat_tol = config.tolerances["energy"], config.tolerances["heat"]

    def job(item):
        n, t = item
        pts = load_points(config, n)
        report, elapsed = timed(energy_report, pts, t, config.method, tol, heat_tol)
        return pts, report, elapsed

    results = map_ordered(job, jobs, config.threads)
    rows, entries, floor_ok = [], [], True
    for pts, report, elapsed in results:
        rows.append(_report_row(config, report, elapsed))
        ok = True
        if report.method is not Method.GAUSSIAN:
            ok = report.energy >= _floor(pts.space, pts.dim) - report.error_bound
        floor_ok = floor_ok and ok
        entries.append({"N": report.n_points, "t": report.t,
                        "method": report.method.value, "energy": report.energy,
                        "excess": report.excess, "floor_ok": ok})
    return rows, {"results": entries, "verdicts": {"floor": floor_ok}}


# end run_energy()


def run_profile(config: RunConfig):
    """ Energy profiles over the ascending time list, one per N """

    times = config.t_schedule.times
    tol = config.tolerances["energy"]
    method = None if config.method == "auto" else Method(config.method)
    if method is Method.GAUSSIAN:
        raise DomainError("Profiles are computed for theta energies")

    def job(n):
        pts = load_points(config, n)
        reports, elapsed = timed(energy_profile, pts, times, tol, method)
        return pts, reports, elapsed

    rows, entries = [], []
    monotone, floor_ok = True, True
    for pts, reports, elapsed in map_ordered(job, config.n_schedule, config.threads):
        share = elapsed // len(reports)
        for report in reports:
            rows.append(_report_row(config, report, share))
        energies = [report.energy for report in reports]
        decreasing = all(later <= earlier + 2.0 * tol
                         for earlier, later in zip(energies, energies[1:]))
        above = all(energy >= _floor(pts.space, pts.dim) - tol for energy in energies)
        monotone = monotone and decreasing
        floor_ok = floor_ok and above
        entries.append({"N": reports[0].n_points, "energies": energies,
                        "monotone": decreasing, "floor_ok": above})
    return rows, {"results": entries, "times": list(times),
                  "verdicts": {"monotone": monotone, "floor": floor_ok}}


# end run_profile()


def run_discrepancy(config: RunConfig):
    """ Arc and star discrepancy per N """

    def job(n):
        pts = load_points(config, n)
        arc, elapsed = timed(arc_discrepancy, pts)
        star = star_discrepancy(pts)
        return arc, star, elapsed

    rows, entries, arcs = [], [], []
    wall = config.record_wall_time
    for arc, star, elapsed in map_ordered(job, config.n_schedule, config.threads):
        arcs.append(arc)
        rows.append(Row(kind=config.label, n_points=arc.n_points, t=None,
                        method="arc", value=arc.d_n,
                        wall_time_ns=elapsed if wall else 0))
        rows.append(Row(kind=config.label, n_points=arc.n_points, t=None,
                        method="star", value=star))
        entries.append({"N": arc.n_points, "d_n": arc.d_n, "star": star,
                        "witness_arc": list(arc.witness_arc), "closed": arc.closed})
    trend = entries[-1]["d_n"] < entries[0]["d_n"] if len(entries) > 1 else None
    fitted = log_rate_constant(arcs) if any(arc.n_points >= 2 for arc in arcs) else None
    return rows, {"results": entries, "log_rate_constant": fitted,
                  "verdicts": {"decreasing": trend}}


# end run_discrepancy()


def run_paircorr(config: RunConfig):
    """ Pair-correlation curve per N """

    def job(n):
        pts = load_points(config, n)
        return timed(pc_curve, pts, config.s_grid, config.alpha, config.include_diagonal)

    tol = config.verdicts["poissonian_tol"]
    rows, entries = [], []
    for curve, elapsed in map_ordered(job, config.n_schedule, config.threads):
        deviation = curve.deviation()
        for index, s in enumerate(curve.s_grid):
            rows.append(Row(kind=config.label, n_points=curve.n_points, t=None,
                            method=f"pc_alpha={curve.alpha:g}_s={s:g}",
                            value=curve.values[index], excess=deviation[index],
                            wall_time_ns=elapsed if (config.record_wall_time and index == 0) else 0))
        entries.append({"N": curve.n_points, "values": list(curve.values),
                        "max_deviation": curve.max_deviation()})
    verdict = "pass" if entries[-1]["max_deviation"] <= tol else "fail"
    return rows, {"results": entries, "s_grid": list(config.s_grid),
                  "alpha": config.alpha, "verdicts": {"pair_correlation": verdict}}


# end run_paircorr()


def calibration_families(seed: int = CALIBRATION_SEED) -> List[PointSet]:
    """ Lattice, Kronecker, clustered and uniform sets at the calibration sizes """

    specs = [GeneratorSpec(kind="lattice"),
             GeneratorSpec(kind="kronecker"),
             GeneratorSpec(kind="clustered", seed=seed, interval=(0.0, 0.1)),
             GeneratorSpec(kind="uniform_random", seed=seed)]
    return [generate(spec, n) for spec in specs for n in CALIBRATION_SIZES]


# end calibration_families()


def resolve_c(config: RunConfig) -> float:
    """ Configured constant, or a calibrated one """

    if config.c != "calibrate":
        return config.c
    seed = config.seed if config.seed is not None else CALIBRATION_SEED
    c = calibrate_c(calibration_families(seed), config.tolerances["energy"])
    logger.info("Using calibrated c=%.6g", c)
    return c


# end resolve_c()


def run_bound(config: RunConfig):
    """ Discrepancy bound per N """

    c = resolve_c(config)
    tol = config.tolerances["energy"]

    def job(n):
        pts = load_points(config, n)
        return timed(bound_check, pts, c, tol)

    rows, entries = [], []
    for (check, elapsed), n in zip(map_ordered(job, config.n_schedule, config.threads),
                                   config.n_schedule):
        rows.append(Row(kind=config.label, n_points=n, t=check.t_star, method="bound",
                        value=check.rhs, excess=check.rhs - check.d_n ** 2,
                        error_bound=tol,
                        wall_time_ns=elapsed if config.record_wall_time else 0))
        entries.append({"N": n, "d_n": check.d_n, "c": check.c, "t_star": check.t_star,
                        "rhs": check.rhs, "holds": check.holds,
                        "spatial_scale": check.spatial_scale})
    return rows, {"c": c, "results": entries,
                  "verdicts": {"holds": all(entry["holds"] for entry in entries)}}


# end run_bound()

