#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exceptions raised by the equidist library.
"""


class EquidistError(Exception):
    """ Base class for all library errors """


# end class EquidistError


class DomainError(EquidistError, ValueError):
    """ Argument outside the domain of a numerical operation """


# end class DomainError


class SpectralInfeasibleError(EquidistError):
    """ The Fourier-side method would exceed its frequency cap """

    def __init__(self, needed: int, cap: int):
        self.needed = needed
        self.cap = cap
        super().__init__(
            f"Spectral method infeasible at this scale: needs {needed} "
            f"frequencies, cap is {cap}"
        )

    # end __init__()


# end class SpectralInfeasibleError


class DataCorruptionError(EquidistError):
    """ An invariant that holds mathematically failed numerically """


# end class DataCorruptionError


class BoundInapplicableError(EquidistError):
    """ The discrepancy bound is undefined for the input """


# end class BoundInapplicableError


class CalibrationError(EquidistError):
    """ No constant on the search grid satisfies all constraints """


# end class CalibrationError


class ConfigError(EquidistError):
    """ Invalid run configuration """


# end class ConfigError


class InputError(EquidistError):
    """ Unreadable or malformed input """


# end class InputError
