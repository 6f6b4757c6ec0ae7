"""Exception types shared across the package."""


class TernError(Exception):
    pass


class DimensionError(TernError, ValueError):
    """Vectors or matrices of incompatible shape."""


class RankError(TernError, ValueError):
    pass


class CapacityError(TernError):
    """An enumeration would exceed the configured dimension cap."""


class DomainError(TernError, ValueError):
    """Parameters outside the regime where a formula holds."""


class AuditError(TernError):
    """Mass-formula bookkeeping is inconsistent (bad |Aut|, duplicates, missing classes)."""


class ParseError(TernError, ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class IntegrityError(TernError):
    """A loaded file decodes but violates a structural invariant."""
