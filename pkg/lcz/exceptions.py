# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""lcz exceptions and warnings

General exceptions/warnings for all of lcz are specified below.
Exceptions and warnings that are sub-module specific should be in the
respective sub-module.

"""

__all__ = [
    "LczException",
    "SchemaError",
    "LczWarning",
    "HypothesisViolated",
]


class LczException(Exception):
    "Exception base class for all lcz exceptions."


class SchemaError(LczException):
    "A JSON document does not follow the documented lcz schema."


class LczWarning(Warning):
    "Warning base class for all lcz warnings."


class HypothesisViolated(LczWarning):
    "A characterization was checked on a series with a_1 = 0."
