"""Exception taxonomy, aligned with the CLI exit codes.

InputError        -> exit 2 (bad type/rank/levi/word/string bounds)
ConstructionError -> exit 3 (a seed or column could not be assembled)
VerificationError -> exit 4 (an exact cross-check failed; never recoverable)
"""

from __future__ import annotations


class QschubError(Exception):
    """Base class for all package errors."""


class InputError(QschubError):
    """Invalid user-facing input (type, rank, levi set, word, bounds)."""


class GroupTooLargeError(InputError):
    """Exhaustive enumeration refused; cap is QSCHUB_MAX_GROUP."""


class ConstructionError(QschubError):
    """A cluster, column or seed could not be assembled."""


class VerificationError(QschubError):
    """An exact internal cross-check failed (correctness tripwire)."""


class OracleMismatchError(VerificationError):
    """Commutation exponent from the weight formula disagrees with the
    quasi-polynomial oracle.  Carries both values for diagnosis."""

    def __init__(self, message: str, formula=None, oracle=None):
        super().__init__(message)
        self.formula = formula
        self.oracle = oracle
