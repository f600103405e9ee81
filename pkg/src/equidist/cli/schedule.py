#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Heat-time schedules.

A schedule is an explicit list of times or a rule evaluated per N:

* ``constant``: ``t = c``
* ``log``: ``t = c ln(N) / N^2``
* ``sqrt_log``: ``t = c sqrt(ln N) / N^2``
* ``power``: ``t = c N^(-2 alpha)``

``log`` and ``sqrt_log`` are slowly growing choices of ``f(N)`` in
``t = f(N) / N^2``; which one to use is a configuration choice.
"""

# Standard imports
import logging
import math
from typing import List, Optional, Tuple

# Third party imports
import attr

# Application imports
from ..exception import ConfigError

logger = logging.getLogger(__name__)

RULES = ("constant", "log", "sqrt_log", "power")


@attr.s(frozen=True)
class TSchedule:
    """ Explicit times or a rule with its parameters """

    times = attr.ib(type=Optional[Tuple[float, ...]], default=None)
    rule = attr.ib(type=Optional[str], default=None)
    c = attr.ib(type=float, default=1.0, converter=float)
    alpha = attr.ib(type=float, default=1.0, converter=float)

    def __attrs_post_init__(self):
        if (self.times is None) == (self.rule is None):
            raise ConfigError("t_schedule needs either a list of times or a rule")
        if self.times is not None:
            if not self.times:
                raise ConfigError("t_schedule list is empty")
            if not all(math.isfinite(t) and t > 0 for t in self.times):
                raise ConfigError(f"t_schedule times must be positive: {self.times}")
        elif self.rule not in RULES:
            raise ConfigError(f"Unknown t_schedule rule {self.rule!r}, expected one of {RULES}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ConfigError(f"t_schedule factor must be positive, got {self.c}")
        if not self.alpha > 0:
            raise ConfigError(f"t_schedule alpha must be positive, got {self.alpha}")

    # end __attrs_post_init__()

    @classmethod
    def from_settings(cls, settings) -> "TSchedule":
        """ Accepts a number, a list of numbers or a rule mapping """

        if isinstance(settings, (int, float)) and not isinstance(settings, bool):
            return cls(times=(float(settings),))
        if isinstance(settings, (list, tuple)):
            try:
                return cls(times=tuple(float(value) for value in settings))
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"t_schedule entries must be numbers: {exc}") from exc
        if isinstance(settings, dict):
            unknown = set(settings) - {"rule", "c", "alpha"}
            if unknown:
                raise ConfigError(f"Unknown t_schedule settings {sorted(unknown)}")
            try:
                return cls(rule=settings.get("rule"), c=settings.get("c", 1.0),
                           alpha=settings.get("alpha", 1.0))
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"Invalid t_schedule: {exc}") from exc
        raise ConfigError(f"Cannot read t_schedule {settings!r}")

    # end from_settings()

    @property
    def is_ascending(self) -> bool:
        """ Strictly ascending explicit list; rules yield one time per N """

        if self.times is None:
            return True
        return all(later > earlier for earlier, later in zip(self.times, self.times[1:]))

    # end is_ascending()

    def times_for(self, n: int) -> List[float]:
        """ Times to evaluate at N points """
        return evaluate_schedule(self, n)

    # end times_for()

# end class TSchedule


def evaluate_schedule(schedule: TSchedule, n: int) -> List[float]:
    """ Evaluates the schedule at N.

    Raises:
        ``ConfigError`` when a rule gives a nonpositive time, as ``log``
        does at ``N = 1``.
    """

    if schedule.times is not None:
        return list(schedule.times)

    size = float(n)
    if schedule.rule == "constant":
        value = schedule.c
    elif schedule.rule == "log":
        value = schedule.c * math.log(size) / size ** 2
    elif schedule.rule == "sqrt_log":
        value = schedule.c * math.sqrt(math.log(size)) / size ** 2
    else:
        value = schedule.c * size ** (-2.0 * schedule.alpha)

    if not value > 0:
        raise ConfigError(f"Rule {schedule.rule} gives t = {value} at N = {n}")
    return [value]


# end evaluate_schedule()
