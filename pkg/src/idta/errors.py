"""Exception types shared across the package."""


class IdtaError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(IdtaError):
    """A value violates a structural invariant (bad interval, bad word, ...)."""


class ParseError(IdtaError):
    """Input text could not be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}" + (f", col {column}" if column is not None else "") + f": {message}"
        super().__init__(message)


class AlphabetMismatchError(IdtaError):
    """A word uses letters outside the automaton's alphabet."""


class VocabularyError(IdtaError):
    """A formula mentions intervals or operators outside the target alphabet."""


class UnresolvedBindingError(IdtaError):
    """A recursive operator references a parameter the resolver does not know."""


class StabilizationError(IdtaError):
    """The eventually-periodic pattern did not repeat within the configured
    number of period blocks.  Raised instead of returning a possibly wrong
    answer; retry with a larger block count."""

    def __init__(self, what, blocks):
        self.what = what
        self.blocks = blocks
        super().__init__(f"periodicity not detected for {what} within {blocks} period blocks")


class CapExceededError(IdtaError):
    """A configurable size cap (automaton states, DNF clauses, ...) was hit."""

    def __init__(self, kind, cap, reached=None):
        self.kind = kind
        self.cap = cap
        detail = f" (reached {reached})" if reached is not None else ""
        super().__init__(f"{kind} cap of {cap} exceeded{detail}")


class CyclicReferenceError(IdtaError):
    """The registry reference graph contains a cycle."""
