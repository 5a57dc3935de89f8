# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.exactnum.core
=================

Exact scalar arithmetic and the q-analog/combinatorial number kernel.

All scalars are `~fractions.Fraction` instances, which are kept in
canonical form (positive denominator, coprime numerator and denominator)
by construction.  Integer arguments are arbitrary precision.

"""

__all__ = [
    "Rational",
    "RationalFormatError",
    "DegenerateParameterError",
    "as_rational",
    "parse_rational",
    "format_rational",
    "factorial",
    "q_integer",
    "q_factorial",
    "require_valid_q",
    "gaussian_binomial",
    "galois_number",
]

import math
import re
from fractions import Fraction
from numbers import Integral
from typing import Union

from ..exceptions import LczException

Rational = Fraction

RationalLike = Union[int, str, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class RationalFormatError(LczException, ValueError):
    """Text is not a rational of the form ``"p"`` or ``"p/q"``, or q = 0."""


class DegenerateParameterError(LczException, ValueError):
    """A q-integer [i]_q vanishes for the requested parameter q."""


def _check_natural(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}.")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}.")
    return int(value)


def parse_rational(text: str) -> Fraction:
    """Parse the lcz text form of a rational number.


    Parameters
    ----------
    text : str
        ``"p"`` or ``"p/q"``, with an optional sign on ``p``.


    Returns
    -------
    x : `~fractions.Fraction`


    Raises
    ------
    RationalFormatError
        For any other text, or when q is zero.


    Examples
    --------
    >>> from lcz.exactnum import parse_rational
    >>> print(parse_rational("-6/4"))
    -3/2
    >>> parse_rational("1/0")
    Traceback (most recent call last):
    ...
    lcz.exactnum.core.RationalFormatError: zero denominator in '1/0'

    """

    if not isinstance(text, str):
        raise RationalFormatError(f"expected a string, got {type(text).__name__}")

    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise RationalFormatError(f"not a rational number: {text!r}")

    numerator = int(match.group(1))
    denominator = 1 if match.group(2) is None else int(match.group(2))
    if denominator == 0:
        raise RationalFormatError(f"zero denominator in {text!r}")

    return Fraction(numerator, denominator)


def format_rational(x: Fraction) -> str:
    """Text form of ``x``: ``"p/q"``, or ``"p"`` when q = 1."""
    return str(Fraction(x))


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Integers, fractions, and ``"p/q"`` strings are accepted.  Floats are
    refused because their binary expansion is rarely what was meant.

    """

    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers.")
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(
        f"cannot convert {type(value).__name__} to an exact rational; use an"
        " int, Fraction, or 'p/q' string."
    )


def factorial(n: int) -> Fraction:
    """n! as an exact rational.

    Examples
    --------
    >>> from lcz.exactnum import factorial
    >>> print(factorial(10))
    3628800

    """

    return Fraction(math.factorial(_check_natural("n", n)))


def q_integer(i: int, q: RationalLike) -> Fraction:
    """The q-integer [i]_q = 1 + q + ... + q^(i-1).


    Parameters
    ----------
    i : int
        Positive integer.

    q : int, Fraction, or str
        Parameter.


    Examples
    --------
    >>> from lcz.exactnum import q_integer
    >>> print(q_integer(3, 2))
    7

    """

    i = _check_natural("i", i)
    if i < 1:
        raise ValueError("q-integers are defined for i >= 1.")
    q = as_rational(q)

    total = Fraction(0)
    power = Fraction(1)
    for _ in range(i):
        total += power
        power *= q
    return total


def q_factorial(n: int, q: RationalLike) -> Fraction:
    """The q-factorial [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.

    Examples
    --------
    >>> from lcz.exactnum import q_factorial
    >>> print(q_factorial(3, 2))
    21

    """

    n = _check_natural("n", n)
    q = as_rational(q)

    result = Fraction(1)
    for i in range(1, n + 1):
        result *= q_integer(i, q)
    return result


def require_valid_q(n: int, q: RationalLike) -> Fraction:
    """Verify that no q-integer [i]_q, 1 <= i <= n, vanishes.


    Returns
    -------
    q : `~fractions.Fraction`
        The parameter as an exact rational.


    Raises
    ------
    DegenerateParameterError
        Naming the first vanishing factor.

    """

    n = _check_natural("n", n)
    q = as_rational(q)
    for i in range(1, n + 1):
        if q_integer(i, q) == 0:
            raise DegenerateParameterError(
                f"q-integer [{i}]_q vanishes for q = {format_rational(q)}"
            )
    return q


def gaussian_binomial(n: int, k: int, q: RationalLike) -> Fraction:
    """Gaussian binomial coefficient [n]_q! / ([k]_q! [n-k]_q!).


    Parameters
    ----------
    n, k : int
        0 <= k <= n.

    q : int, Fraction, or str
        Parameter; no [i]_q with i <= n may vanish.


    Raises
    ------
    DegenerateParameterError


    Examples
    --------
    >>> from lcz.exactnum import gaussian_binomial
    >>> print(gaussian_binomial(4, 2, 2))
    35

    """

    n = _check_natural("n", n)
    k = _check_natural("k", k)
    if k > n:
        raise ValueError(f"k = {k} exceeds n = {n}.")
    q = require_valid_q(n, q)

    return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q))


def galois_number(n: int, q: RationalLike) -> Fraction:
    """Galois number G_n(q), the sum of all Gaussian binomials [n k]_q.

    For a prime power q this is the number of subspaces of an
    n-dimensional vector space over the field with q elements.

    Examples
    --------
    >>> from lcz.exactnum import galois_number
    >>> print(galois_number(3, 2))
    16

    """

    n = _check_natural("n", n)
    q = require_valid_q(n, q)
    return sum((gaussian_binomial(n, k, q) for k in range(n + 1)),
               Fraction(0))
