#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Point set module.

A ``PointSet`` is a finite ordered list of points on one of the supported
spaces:

* ``circle``: reals in [0, 1), stored as a 1-d array
* ``torus``: vectors in [0, 1)^d, stored as an (N, d) array
* ``sphere2``: unit vectors in R^3, stored as an (N, 3) array

Point sets are immutable; the stored array is flagged read-only.
"""

# Standard imports
import logging

# Third party imports
import attr
import numpy as np

# Application imports
from .exception import DomainError

logger = logging.getLogger(__name__)

SPACES = ("circle", "torus", "sphere2")

# Unit-norm tolerance for sphere points
UNIT_TOL = 1e-12


def reduce_mod1(values):
    """ Reduces values to [0, 1).

    ``np.mod`` may return exactly 1.0 for tiny negative inputs, which is
    mapped back to 0.

    Args:
        values (array_like): Real values.

    Returns:
        A float array with entries in [0, 1).
    """

    reduced = np.mod(np.asarray(values, dtype=float), 1.0)
    reduced[reduced >= 1.0] = 0.0
    return reduced


# end reduce_mod1()


def _check_values(instance, attribute, value):
    """ attrs validator for the point array """

    if not isinstance(value, np.ndarray):
        raise DomainError("Point values must be a numpy array")
    if not np.all(np.isfinite(value)):
        raise DomainError("Point values must be finite")

    space = instance.space
    if space == "circle":
        if value.ndim != 1:
            raise DomainError(f"Circle points must be 1-d, got shape {value.shape}")
    elif value.ndim != 2:
        raise DomainError(f"{space} points must be 2-d, got shape {value.shape}")

    if space in ("circle", "torus"):
        if value.size and (value.min() < 0.0 or value.max() >= 1.0):
            raise DomainError(f"{space} points must lie in [0, 1)")
    else:
        if value.shape[1] != 3:
            raise DomainError("Sphere points must be 3-vectors")
        norms = np.linalg.norm(value, axis=1)
        if value.size and np.max(np.abs(norms - 1.0)) > UNIT_TOL:
            raise DomainError("Sphere points must be unit vectors")


# end _check_values()


@attr.s(frozen=True, eq=False)
class PointSet:
    """ Finite ordered point set with its space tag """

    # Space tag, one of SPACES. Declared first since the values
    # validator depends on it.
    space = attr.ib(type=str, default="circle",
                    validator=attr.validators.in_(SPACES))

    values = attr.ib(type=np.ndarray, factory=lambda: np.zeros(0),
                     validator=_check_values)

    label = attr.ib(type=str, default="")

    # Set when the values are known to be nondecreasing (circle only)
    sorted = attr.ib(type=bool, default=False)

    def __attrs_post_init__(self):
        """ Freezes the underlying array and checks the sorted flag """

        self.values.setflags(write=False)
        if self.sorted and self.space == "circle" and self.n > 1:
            if np.any(np.diff(self.values) < 0):
                raise DomainError("Point set flagged sorted but is not")

    # end __attrs_post_init__()

    @classmethod
    def circle(cls, values, label: str = "") -> "PointSet":
        """ Creates a circle point set, reducing the values mod 1 """

        reduced = reduce_mod1(np.ravel(values))
        return cls(space="circle", values=reduced, label=label)

    # end circle()

    @classmethod
    def torus(cls, values, label: str = "") -> "PointSet":
        """ Creates a torus point set from an (N, d) array, reduced mod 1 """

        array = np.asarray(values, dtype=float)
        if array.ndim == 1:
            array = array[:, None]
        return cls(space="torus", values=reduce_mod1(array), label=label)

    # end torus()

    @classmethod
    def sphere(cls, values, label: str = "") -> "PointSet":
        """ Creates a sphere point set from an (N, 3) array of unit vectors """

        array = np.array(values, dtype=float)
        if array.ndim == 1:
            array = array[None, :]
        return cls(space="sphere2", values=array, label=label)

    # end sphere()

    @property
    def n(self) -> int:
        """ Number of points """
        return int(self.values.shape[0])

    # end n()

    @property
    def dim(self) -> int:
        """ Number of coordinates per point """
        if self.space == "circle":
            return 1
        return int(self.values.shape[1])

    # end dim()

    def sorted_values(self) -> np.ndarray:
        """ Returns the circle values in nondecreasing order """

        if self.space != "circle":
            raise DomainError("Only circle point sets can be sorted")
        if self.sorted:
            return self.values
        return np.sort(self.values, kind="stable")

    # end sorted_values()

    def as_sorted(self) -> "PointSet":
        """ Returns a sorted copy of a circle point set """

        return PointSet(space="circle", values=np.array(self.sorted_values()),
                        label=self.label, sorted=True)

    # end as_sorted()

    def shifted(self, shift: float) -> "PointSet":
        """ Returns the point set translated by ``shift`` modulo 1 """

        if self.space == "sphere2":
            raise DomainError("Translations are defined on circle and torus only")
        return PointSet(space=self.space,
                        values=reduce_mod1(self.values + shift),
                        label=self.label)

    # end shifted()

    def prefix(self, n: int) -> "PointSet":
        """ Returns the first ``n`` points """

        return PointSet(space=self.space, values=np.array(self.values[:n]),
                        label=self.label)

    # end prefix()

    def require_nonempty(self):
        """ Raises a ``DomainError`` if the point set is empty """

        if self.n == 0:
            raise DomainError("Empty point set")

    # end require_nonempty()

# end class PointSet
