"""Exception types shared across the interpreter."""

from __future__ import annotations


class FuzzylpError(Exception):
    """Base class for all interpreter errors."""


class ParseError(FuzzylpError):
    """Malformed source text; carries the offending position."""

    def __init__(self, message: str, line: int, column: int, source: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = f"{source}: " if source else ""
        super().__init__(f"{where}line {line}, column {column}: {message}")


class LatticeError(FuzzylpError):
    """Invalid lattice definition, or misuse of lattice values."""


class SimilarityError(FuzzylpError):
    """Invalid similarity relation construction."""


class EvalError(FuzzylpError):
    """Runtime failure while evaluating a connective."""


class SessionError(FuzzylpError):
    """Bad interactive command or session misuse."""
