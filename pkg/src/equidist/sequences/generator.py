#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Point-set generators.

Random kinds draw from ``numpy.random.Generator`` on the PCG64 bit
generator seeded with the spec's seed. Doubles are drawn in a single
stream, so ``generate(spec, n)`` is a prefix of ``generate(spec, m)`` for
``n <= m``. The ``lattice`` and ``sphere_fibonacci`` kinds are finite
designs that depend on n and are not prefix consistent.
"""

# Standard imports
import logging
import math
from typing import Optional, Tuple

# Third party imports
import attr
import numpy as np
from numpy.random import Generator, PCG64

# Application imports
from ..exception import DomainError
from ..pointset import PointSet, reduce_mod1

logger = logging.getLogger(__name__)

KINDS = (
    "kronecker",
    "van_der_corput",
    "uniform_random",
    "duplicated",
    "clustered",
    "lattice",
    "sphere_fibonacci",
    "sphere_random",
)

RANDOM_KINDS = ("uniform_random", "duplicated", "clustered", "sphere_random")

# Name of the bit generator, written into point-set file headers
RNG_NAME = "PCG64"

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _generalized_golden(d: int) -> float:
    """ Root of ``x^(d+1) = x + 1`` by fixed-point iteration """

    x = 2.0
    for _ in range(64):
        x = (1.0 + x) ** (1.0 / (d + 1))
    return x


# end _generalized_golden()


def default_alpha(d: int) -> Tuple[float, ...]:
    """ Kronecker increments ``frac(g^-k)``, k = 1..d, for the generalized
    golden ratio ``g``; ``d = 1`` gives ``(sqrt(5) - 1) / 2``.
    """

    if d == 1:
        return (GOLDEN,)
    g = _generalized_golden(d)
    return tuple(math.fmod(g ** -(k + 1), 1.0) for k in range(d))


# end default_alpha()


@attr.s(frozen=True)
class GeneratorSpec:
    """ Kind tag with its validated parameters """

    kind = attr.ib(type=str, validator=attr.validators.in_(KINDS))
    alpha = attr.ib(type=Optional[Tuple[float, ...]], default=None)
    base = attr.ib(type=int, default=2)
    seed = attr.ib(type=Optional[int], default=None)
    interval = attr.ib(type=Tuple[float, float], default=(0.0, 0.1))
    d = attr.ib(type=int, default=1)
    label = attr.ib(type=str, default="")

    def __attrs_post_init__(self):
        """ Per-kind parameter checks """

        if self.d < 1:
            raise DomainError(f"Dimension must be at least 1, got {self.d}")
        if self.kind in ("van_der_corput", "lattice") and self.d != 1:
            raise DomainError(f"Kind {self.kind} is one-dimensional")
        if self.kind == "van_der_corput" and self.base < 2:
            raise DomainError(f"Base must be at least 2, got {self.base}")
        if self.kind in RANDOM_KINDS and self.seed is None:
            raise DomainError(f"Kind {self.kind} needs a seed")
        if self.seed is not None and self.seed < 0:
            raise DomainError(f"Seed must be nonnegative, got {self.seed}")
        if self.kind == "clustered":
            low, high = self.interval
            if not 0.0 <= low < high <= 1.0:
                raise DomainError(f"Cluster interval {self.interval} not inside [0, 1)")
        if self.kind == "kronecker" and self.alpha is not None:
            if len(self.alpha) != self.d:
                raise DomainError(f"Kronecker needs {self.d} increments, got {len(self.alpha)}")
            if not all(math.isfinite(value) for value in self.alpha):
                raise DomainError("Kronecker increments must be finite")

    # end __attrs_post_init__()

    @classmethod
    def from_settings(cls, settings: dict) -> "GeneratorSpec":
        """ Builds a spec from a configuration mapping """

        if not isinstance(settings, dict) or "kind" not in settings:
            raise DomainError("Generator settings need a 'kind'")
        kwargs = dict(settings)
        if kwargs.get("alpha") is not None:
            alpha = kwargs["alpha"]
            kwargs["alpha"] = tuple(float(value) for value in
                                    (alpha if isinstance(alpha, (list, tuple)) else [alpha]))
        if "interval" in kwargs:
            kwargs["interval"] = tuple(float(value) for value in kwargs["interval"])
        unknown = set(kwargs) - {field.name for field in attr.fields(cls)}
        if unknown:
            raise DomainError(f"Unknown generator settings: {sorted(unknown)}")
        return cls(**kwargs)

    # end from_settings()

    def with_seed(self, seed: int) -> "GeneratorSpec":
        """ Copy with another seed; nonrandom kinds are returned unchanged """

        if self.kind not in RANDOM_KINDS:
            return self
        return attr.evolve(self, seed=seed)

    # end with_seed()

    @property
    def space(self) -> str:
        if self.kind.startswith("sphere"):
            return "sphere2"
        return "torus" if self.d > 1 else "circle"

    # end space()

# end class GeneratorSpec


def _rng(seed: int) -> Generator:
    return Generator(PCG64(seed))


def _kronecker(spec: GeneratorSpec, n: int) -> np.ndarray:
    alpha = np.array(spec.alpha if spec.alpha is not None else default_alpha(spec.d))
    index = np.arange(1, n + 1, dtype=float)
    return np.mod(np.multiply.outer(index, alpha), 1.0)


def _van_der_corput(spec: GeneratorSpec, n: int) -> np.ndarray:
    """ Radical inverse of 1 .. n in the spec's base """

    index = np.arange(1, n + 1, dtype=np.int64)
    values = np.zeros(n)
    scale = 1.0 / spec.base
    while np.any(index > 0):
        index, digit = np.divmod(index, spec.base)
        values += digit * scale
        scale /= spec.base
    return values


def _sphere_fibonacci(n: int) -> np.ndarray:
    """ Golden-angle spiral with ``n`` points of equal area """

    index = np.arange(n, dtype=float) + 0.5
    polar = np.arccos(1.0 - 2.0 * index / n)
    azimuth = 2.0 * math.pi * index / ((1.0 + math.sqrt(5.0)) / 2.0)
    points = np.column_stack((np.cos(azimuth) * np.sin(polar),
                              np.sin(azimuth) * np.sin(polar),
                              np.cos(polar)))
    return points / np.linalg.norm(points, axis=1)[:, None]


def generate(spec: GeneratorSpec, n: int) -> PointSet:
    """ Generates the first ``n`` points of a family.

    Args:
        spec (GeneratorSpec): The family.
        n (int): Number of points, at least 1.

    Returns:
        A ``PointSet`` on the circle, on T^d when ``spec.d > 1``, or on the
        sphere for the sphere kinds.
    """

    if n < 1:
        raise DomainError(f"Need at least one point, got {n}")
    kind = spec.kind
    label = spec.label or kind
    logger.debug("Generating %d points of kind %s", n, kind)

    if kind == "sphere_fibonacci":
        return PointSet.sphere(_sphere_fibonacci(n), label=label)
    if kind == "sphere_random":
        normals = _rng(spec.seed).standard_normal((n, 3))
        return PointSet.sphere(normals / np.linalg.norm(normals, axis=1)[:, None],
                               label=label)

    if kind == "kronecker":
        values = _kronecker(spec, n)
    elif kind == "van_der_corput":
        values = _van_der_corput(spec, n)[:, None]
    elif kind == "uniform_random":
        values = _rng(spec.seed).random((n, spec.d))
    elif kind == "duplicated":
        # x_{2k} = x_{2k-1}
        draws = _rng(spec.seed).random(((n + 1) // 2, spec.d))
        values = np.repeat(draws, 2, axis=0)[:n]
    elif kind == "clustered":
        low, high = spec.interval
        values = low + (high - low) * _rng(spec.seed).random((n, spec.d))
        values = np.minimum(values, np.nextafter(high, low))
    else:
        values = (np.arange(n, dtype=float) / n)[:, None]

    values = reduce_mod1(values)
    if spec.d == 1:
        return PointSet.circle(values[:, 0], label=label)
    return PointSet.torus(values, label=label)


# end generate()
