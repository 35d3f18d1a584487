"""Exception hierarchy shared by all skewrel modules.

Exit-code mapping used by the CLI:
  StructureError / ValidationFailure / PreconditionError -> 1
  PropertyFailure -> 2
  DocumentError -> 3
"""


class SkewRelError(Exception):
    pass


class StructureError(SkewRelError):
    """Malformed input data: duplicate labels, non-injective map, bad table."""


class ValidationFailure(SkewRelError):
    """A candidate partial action violates one of the three axioms."""


class PreconditionError(SkewRelError):
    """An operation was called outside its stated domain."""


class NotFreeError(PreconditionError):
    """Operation requires a free action; carries the fixing (t, x) if known."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PropertyFailure(SkewRelError):
    """A seeded property suite found a counterexample."""


class DocumentError(SkewRelError):
    """JSON document failed to parse or violated the strict schema."""
