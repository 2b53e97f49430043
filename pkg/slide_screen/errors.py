# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Exceptions raised by slide-screen."""


class SlideScreenError(Exception):
    """Base class for all domain failures."""


class DimensionError(SlideScreenError, ValueError):
    """A matrix or class has the wrong shape for the operation."""


class ArithmeticOverflowError(SlideScreenError, OverflowError):
    """A value left the signed 64-bit range."""


class InvalidMatrixError(SlideScreenError, ValueError):
    """A matrix violates the invariant of the type it was given to."""


class InvalidMoveError(SlideScreenError, ValueError):
    """A handle slide does not make sense for the link it acts on."""


class InvalidSurfaceError(SlideScreenError, ValueError):
    """Fiber surface or curve bookkeeping was given inconsistent data."""


class ConstraintError(SlideScreenError, ValueError):
    """A screening constraint, bound or class is unusable."""


class SchemaError(SlideScreenError, ValueError):
    """Structured input could not be parsed into the expected shape."""
