"""Exception hierarchy shared by every latprim module."""

from __future__ import annotations


class LatprimError(Exception):
    """Base class for all latprim errors."""


class StructureError(LatprimError):
    """Tables are malformed: wrong dimensions, ids out of range, bad names."""


class DimensionError(StructureError):
    pass


class UnknownElementError(LatprimError):
    def __init__(self, name: str):
        super().__init__(f"unknown element name {name!r}")
        self.name = name


class AxiomError(LatprimError):
    """A lattice failed validation; carries the full report."""

    def __init__(self, report):
        first = report.failures[0]
        super().__init__(f"axiom {first.axiom!r} fails at {first.witness_names}")
        self.report = report


class ParseError(LatprimError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MapSpecError(LatprimError):
    """A map spec string could not be parsed or is used in the wrong position."""


class InvalidMapError(LatprimError):
    """A table map failed its expansion or reduction check."""

    def __init__(self, check: str, witness: tuple[str, ...]):
        super().__init__(f"map fails {check} at {', '.join(witness)}")
        self.check = check
        self.witness = witness


class NotProperError(LatprimError):
    def __init__(self, name: str):
        super().__init__(f"element {name} is not proper (it is the top element)")
        self.name = name


class ClaimError(LatprimError):
    """A search claim expression could not be parsed or has no converse."""
