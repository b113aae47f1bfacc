"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RecolorError(Exception):
    """Base class for all errors raised by :mod:`recolor`."""


# graph construction / structure

class InvalidEdge(RecolorError, ValueError):
    pass


class VertexOutOfRange(RecolorError, ValueError):
    pass


class NotIndependent(RecolorError, ValueError):
    pass


class NotBipartite(RecolorError, ValueError):
    pass


class NotBipartition(RecolorError, ValueError):
    pass


# colorings and sequences

class ShapeError(RecolorError, ValueError):
    pass


class NotProper(RecolorError, ValueError):
    pass


class SequenceError(RecolorError, ValueError):
    """A recoloring sequence failed verification at step ``index``."""

    def __init__(self, index: int | None, message: str = "") -> None:
        self.index = index
        where = f"step {index}" if index is not None else "coloring"
        super().__init__(f"{where}: {message}" if message else where)


class ImproperStep(SequenceError):
    pass


class NoOpStep(SequenceError):
    pass


class PaletteError(SequenceError):
    pass


class NotClassConstant(RecolorError, ValueError):
    pass


class BadPermutation(RecolorError, ValueError):
    pass


# search / decision

class TooLarge(RecolorError):
    """State space exceeds the configured budget (or the 63-bit state code)."""


class MethodMismatch(RecolorError, ValueError):
    pass


class NotMixing(RecolorError):
    pass


# reduction

class PaletteTooSmall(RecolorError, ValueError):
    pass


class PaletteClash(RecolorError, ValueError):
    pass


class BadWitness(RecolorError, ValueError):
    pass


# io

class ParseError(RecolorError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
