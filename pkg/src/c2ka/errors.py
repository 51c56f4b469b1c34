"""Error types shared across the package.

A StructuralError means the input is not even a well-formed finite
structure (partial table, unknown symbol); an axiom violation is never
raised as an exception but reported through AxiomReport instead.
"""


class StructuralError(ValueError):
    """Table is not total/closed, or a symbol is not in the carrier."""


class DomainError(ValueError):
    """A precondition on an operation's arguments is violated."""
