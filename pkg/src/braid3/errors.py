"""Exception hierarchy.

Errors split into two families: bad input (``InputError``) and internal
consistency failures (``ConsistencyError``).  The CLI maps the first to exit
code 1 and the second to exit code 2.
"""

from __future__ import annotations


class Braid3Error(Exception):
    pass


class InputError(Braid3Error, ValueError):
    pass


class ConsistencyError(Braid3Error, RuntimeError):
    """Raised when an internal cross-check fails; always signals a bug."""


class MalformedWord(InputError):
    def __init__(self, text: str, offset: int, reason: str = "illegal token"):
        self.text = text
        self.offset = offset
        self.reason = reason
        super().__init__(f"{reason} at byte offset {offset} in {text!r}")


class BadModulus(InputError):
    def __init__(self, modulus):
        self.modulus = modulus
        super().__init__(f"modulus must be an integer > 1, got {modulus!r}")


class MalformedSyllables(InputError):
    pass


class NotPureBraid(InputError):
    pass


class ReductionMismatch(ConsistencyError):
    pass


class WitnessVerificationFailed(ConsistencyError):
    pass


class StructureViolation(ConsistencyError):
    pass


class SubdivisionLimit(ConsistencyError):
    pass
