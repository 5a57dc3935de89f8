# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.series.core
===============

Truncated formal power series.

A `TruncatedSeries` of order N stores the exact coefficients a_0, ..., a_N
of a formal power series.  Binary operations are valid only up to the
smaller of the two orders, and the result records that order; nothing is
ever padded with zeros.

"""

__all__ = [
    "TruncatedSeries",
    "TruncationError",
    "SeriesComparison",
    "add",
    "scale",
    "cauchy_mul",
    "odot",
    "dilate",
    "truncate",
    "equals_to_order",
]

from fractions import Fraction
from typing import TYPE_CHECKING, Callable, Iterable, NamedTuple, Optional

from ..exceptions import LczException, SchemaError
from ..exactnum import as_rational, factorial
from ..utils import (
    read_json, write_json, require_keys, rationals_from_json,
    rationals_to_json
)

if TYPE_CHECKING:
    from ..bintype import BinomialType


class TruncationError(LczException, IndexError):
    """A coefficient beyond the recorded order was requested."""


class SeriesComparison(NamedTuple):
    """Outcome of `equals_to_order`."""

    equal: bool
    mismatch: Optional[int]


class TruncatedSeries:
    """Formal power series a_0 + a_1 X + ... + a_N X^N, cut at order N.


    Parameters
    ----------
    coeffs : iterable
        Coefficients a_0, ..., a_N as integers, `~fractions.Fraction`, or
        ``"p/q"`` strings.  At least one coefficient is required.


    Examples
    --------
    >>> from lcz.series import TruncatedSeries
    >>> F = TruncatedSeries([1, 1, "1/2"])
    >>> F.order
    2
    >>> print(F * F)
    1 + 2 X + 2 X^2

    Notes
    -----
    Series are immutable.

    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable) -> None:
        self._coeffs = tuple(as_rational(c) for c in coeffs)
        if len(self._coeffs) == 0:
            raise ValueError("a truncated series needs at least a_0.")

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    @classmethod
    def from_function(cls, func: Callable[[int], object],
                      order: int) -> "TruncatedSeries":
        """Series with a_n = func(n) for n = 0, ..., order."""
        if order < 0:
            raise ValueError("order must be non-negative.")
        return cls(func(n) for n in range(order + 1))

    @classmethod
    def exponential(cls, order: int, a1=1) -> "TruncatedSeries":
        """The exponential series a_n = a1^n / n!."""
        a1 = as_rational(a1)
        return cls.from_function(
            lambda n: a1**n / factorial(n), order)

    @property
    def order(self) -> int:
        """Truncation order N."""
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        """Coefficients a_0, ..., a_N."""
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise TruncationError(
                f"coefficient a_{n} is outside the recorded order "
                f"{self.order}")
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} order {self.order}: {self}>"

    def __str__(self) -> str:
        terms = []
        for n, a in enumerate(self._coeffs):
            if a == 0:
                continue
            power = "" if n == 0 else (" X" if n == 1 else f" X^{n}")
            if n > 0 and a == 1:
                terms.append(power.strip())
            else:
                terms.append(f"{a}{power}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return scale(-1, self)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return cauchy_mul(self, other)
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return scale(c, self)

    def __rmul__(self, other):
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return scale(c, self)

    def to_dict(self) -> dict:
        """JSON-ready form ``{"order": N, "coeffs": [...]}``."""
        return {"order": self.order, "coeffs": rationals_to_json(self._coeffs)}

    @classmethod
    def from_dict(cls, document) -> "TruncatedSeries":
        """Series from its JSON form, validating the coefficient count."""

        require_keys(document, ["order", "coeffs"], "series")
        order = document["order"]
        if isinstance(order, bool) or not isinstance(order, int) or order < 0:
            raise SchemaError("series order must be a non-negative integer")
        coeffs = rationals_from_json(document["coeffs"], "coeffs")
        if len(coeffs) != order + 1:
            raise SchemaError(
                f"series of order {order} needs {order + 1} coefficients, "
                f"got {len(coeffs)}")
        return cls(coeffs)

    @classmethod
    def read(cls, path) -> "TruncatedSeries":
        return cls.from_dict(read_json(path))

    def write(self, path=None) -> str:
        return write_json(self.to_dict(), path)


def _common_order(F: TruncatedSeries, G: TruncatedSeries) -> int:
    return min(F.order, G.order)


def add(F: TruncatedSeries, G: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise sum, to order min(N_F, N_G)."""
    N = _common_order(F, G)
    return TruncatedSeries(F[n] + G[n] for n in range(N + 1))


def scale(c, F: TruncatedSeries) -> TruncatedSeries:
    """Multiply every coefficient by the rational ``c``."""
    c = as_rational(c)
    return TruncatedSeries(c * a for a in F)


def cauchy_mul(F: TruncatedSeries, G: TruncatedSeries) -> TruncatedSeries:
    """Series product, c_n = sum_k a_k b_(n-k), to order min(N_F, N_G).

    Examples
    --------
    >>> from lcz.series import TruncatedSeries, cauchy_mul
    >>> G = TruncatedSeries([1, 1, 1, 1])
    >>> print(cauchy_mul(G, G))
    1 + 2 X + 3 X^2 + 4 X^3

    """

    N = _common_order(F, G)
    a, b = F.coeffs, G.coeffs
    return TruncatedSeries(
        sum((a[k] * b[n - k] for k in range(n + 1)), Fraction(0))
        for n in range(N + 1)
    )


def odot(B: "BinomialType", F: TruncatedSeries,
         G: TruncatedSeries) -> TruncatedSeries:
    """B-weighted coefficient product, sum_n B(n) a_n b_n X^n.

    With B(n) = n! this is the product of exponential-type series; with
    B(n) = 1 it is the plain coefficient-wise product.


    Parameters
    ----------
    B : `~lcz.bintype.BinomialType`
        Parameter table, tabulated at least to min(N_F, N_G).

    F, G : `TruncatedSeries`


    Raises
    ------
    TruncationError
        If ``B`` is too short.

    """

    N = _common_order(F, G)
    if B.order < N:
        raise TruncationError(
            f"binomial type {B.name!r} is tabulated to order {B.order}, "
            f"but order {N} is needed")
    return TruncatedSeries(B[n] * F[n] * G[n] for n in range(N + 1))


def dilate(c, F: TruncatedSeries) -> TruncatedSeries:
    """Substitute X -> cX, i.e., a_n -> c^n a_n."""
    c = as_rational(c)
    return TruncatedSeries(c**n * a for n, a in enumerate(F))


def truncate(F: TruncatedSeries, order: int) -> TruncatedSeries:
    """Drop the coefficients above ``order``."""
    if order > F.order:
        raise TruncationError(
            f"cannot extend a series of order {F.order} to order {order}")
    if order < 0:
        raise ValueError("order must be non-negative.")
    return TruncatedSeries(F.coeffs[:order + 1])


def equals_to_order(F: TruncatedSeries, G: TruncatedSeries,
                    up_to: int) -> SeriesComparison:
    """Compare coefficients a_n and b_n for n <= ``up_to``.


    Returns
    -------
    comparison : `SeriesComparison`
        ``equal`` is `True` when all coefficients agree, otherwise
        ``mismatch`` is the smallest index where they differ.


    Raises
    ------
    TruncationError
        If ``up_to`` exceeds either order.

    """

    if up_to > _common_order(F, G):
        raise TruncationError(
            f"cannot compare to order {up_to}; series are known to orders "
            f"{F.order} and {G.order}")
    for n in range(up_to + 1):
        if F[n] != G[n]:
            return SeriesComparison(False, n)
    return SeriesComparison(True, None)
