# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.bintype.core
================

Binomial types.

A binomial type is a parameter sequence B(0), B(1), ..., B(N) with
B(0) = B(1) = 1 and no zero entries.  It defines the binomial
coefficients (m k) = B(m) / (B(k) B(m - k)), the numbers
t(n) = sum_k (n k), and a convolution on functions of 0, 1, 2, ...:

    (f *_B g)(m) = sum_k (m k) f(k) g(m - k).

Three families are built in: ``factorial`` (B(n) = n!), ``ones``
(B(n) = 1), and ``q_factorial`` (B(n) = [n]_q!).  Custom tables are
accepted whether or not they are realized by some combinatorial
structure; all checks built on them are purely algebraic.

"""

__all__ = [
    "BinomialType",
    "BinomialArithFun",
    "BinomialTypeError",
    "DegenerateTypeWarning",
    "FAMILIES",
    "make_binomial_type",
    "ell_binomial",
    "t_number",
    "m_convolution",
    "eta_M",
    "eta_M_inv",
    "eta",
    "binomial_classify",
    "closed_form_series",
]

import os
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Tuple
from warnings import warn

from astropy import log

from ..defaults import working_order
from ..exceptions import LczException, LczWarning, SchemaError
from ..exactnum import (
    as_rational, factorial, format_rational, q_factorial, require_valid_q
)
from ..series import TruncatedSeries, TruncationError
from ..arithfun import ArithFun, BoundError, Classification, max_omega, omega
from ..utils import (
    read_json, write_json, require_keys, rationals_from_json,
    rationals_to_json
)

FAMILIES = ("factorial", "ones", "q_factorial", "custom")


class BinomialTypeError(LczException, ValueError):
    """Invalid binomial type family, parameter, or table."""


class DegenerateTypeWarning(LczWarning):
    """t(n) = 2 for some n >= 2.

    The particular-product condition then leaves a_n undetermined, so it
    is no longer equivalent to the closed form.

    """


class BinomialType:
    """Parameter table B(0), ..., B(N) of a binomial type.


    Parameters
    ----------
    parameters : sequence
        B(0), ..., B(N), N >= 1, as integers, fractions, or ``"p/q"``
        strings.

    family : str, optional
        One of `FAMILIES`; informational once the table is built.

    name : str, optional
        Label used in reports.  Defaults to the family name.

    q : rational, optional
        Parameter of the ``q_factorial`` family.


    Raises
    ------
    BinomialTypeError
        If B(0) != 1, B(1) != 1, or some B(n) = 0.  The message names the
        offending index.


    Examples
    --------
    >>> from lcz.bintype import BinomialType
    >>> B = BinomialType.from_family("q_factorial", 3, q=2)
    >>> [str(b) for b in B.parameters]
    ['1', '1', '3', '21']
    >>> print(B.ell_binomial(3, 1), B.t_number(3))
    7 16

    """

    def __init__(self, parameters: Sequence, family: str = "custom",
                 name: Optional[str] = None, q=None) -> None:
        if family not in FAMILIES:
            raise BinomialTypeError(
                f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")

        table = tuple(as_rational(b) for b in parameters)
        if len(table) < 2:
            raise BinomialTypeError("a binomial type needs N >= 1")
        for n, b in enumerate(table):
            if b == 0:
                raise BinomialTypeError(f"B({n}) = 0; parameters must be nonzero")
        for n in (0, 1):
            if table[n] != 1:
                raise BinomialTypeError(
                    f"B({n}) = {format_rational(table[n])}, but B(0) = B(1) = 1 "
                    "is required")

        self._parameters = table
        self._family = family
        self._q = None if q is None else as_rational(q)
        self._name = family if name is None else name

        degenerate = [n for n in range(2, self.order + 1)
                      if self.t_number(n) == 2]
        if degenerate:
            warn(f"binomial type {self._name!r} has t(n) = 2 at n = "
                 f"{degenerate[0]}", DegenerateTypeWarning)

    @classmethod
    def from_family(cls, family: str, order: int, q=None,
                    table: Optional[Sequence] = None) -> "BinomialType":
        """Tabulate a built-in family, or wrap a custom table.


        Parameters
        ----------
        family : str
            ``factorial``, ``ones``, ``q_factorial``, or ``custom``.

        order : int
            N >= 1, the largest tabulated index.

        q : rational, optional
            Required for ``q_factorial``; no [i]_q with i <= N may vanish.

        table : sequence, optional
            Required for ``custom``; at least N + 1 entries.

        """

        if order < 1:
            raise BinomialTypeError("a binomial type needs N >= 1")

        if family == "factorial":
            return cls([factorial(n) for n in range(order + 1)], family)
        elif family == "ones":
            return cls([1] * (order + 1), family)
        elif family == "q_factorial":
            if q is None:
                raise BinomialTypeError("the q_factorial family needs q")
            q = require_valid_q(order, q)
            return cls([q_factorial(n, q) for n in range(order + 1)], family,
                       name=f"q_factorial(q={format_rational(q)})", q=q)
        elif family == "custom":
            if table is None:
                raise BinomialTypeError("the custom family needs a table")
            if len(table) < order + 1:
                raise BinomialTypeError(
                    f"custom table has {len(table)} entries; order {order} "
                    f"needs {order + 1}")
            return cls(list(table)[:order + 1], family)

        raise BinomialTypeError(
            f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")

    @classmethod
    def from_spec(cls, text: str, order: int) -> "BinomialType":
        """Binomial type from a short command-line description.

        ``factorial``, ``ones``, ``q:<rational>`` (q-factorials), or the
        path of a binomial-type JSON file.

        """

        if text in ("factorial", "ones"):
            return cls.from_family(text, order)
        for prefix in ("q:", "q_factorial:"):
            if text.startswith(prefix):
                return cls.from_family("q_factorial", order,
                                       q=text[len(prefix):])
        if os.path.exists(text):
            return cls.read(text)
        raise BinomialTypeError(
            f"cannot interpret binomial type {text!r}; use factorial, ones, "
            "q:<rational>, or a JSON file")

    @property
    def name(self) -> str:
        return self._name

    @property
    def family(self) -> str:
        return self._family

    @property
    def q(self) -> Optional[Fraction]:
        return self._q

    @property
    def order(self) -> int:
        """Largest tabulated index N."""
        return len(self._parameters) - 1

    @property
    def parameters(self) -> Tuple[Fraction, ...]:
        """B(0), ..., B(N)."""
        return self._parameters

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise TruncationError(
                f"B({n}) is outside the tabulated range 0..{self.order} of "
                f"{self._name!r}")
        return self._parameters[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinomialType):
            return NotImplemented
        return self._parameters == other._parameters

    def __hash__(self) -> int:
        return hash(self._parameters)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self._name!r} to order {self.order}>"

    def ell_binomial(self, m: int, k: int) -> Fraction:
        """(m k) = B(m) / (B(k) B(m - k)), 0 <= k <= m <= N."""
        if not 0 <= k <= m:
            raise ValueError(f"need 0 <= k <= m, got m = {m}, k = {k}")
        return self[m] / (self[k] * self[m - k])

    def t_number(self, n: int) -> Fraction:
        """t(n) = sum over k of (n k)."""
        return sum((self.ell_binomial(n, k) for k in range(n + 1)),
                   Fraction(0))

    def to_dict(self) -> dict:
        document = {"family": self._family, "N": self.order}
        if self._family == "q_factorial":
            document["q"] = format_rational(self._q)
        if self._family == "custom":
            document["B"] = rationals_to_json(self._parameters)
        return document

    @classmethod
    def from_dict(cls, document) -> "BinomialType":
        """Binomial type from ``{"family": ..., "q": ..., "N": ..., "B": ...}``."""

        require_keys(document, ["family"], "binomial type")
        family = document["family"]
        if family not in FAMILIES:
            raise SchemaError(f"unknown binomial type family {family!r}")

        table = None
        if family == "custom":
            require_keys(document, ["B"], "custom binomial type")
            table = rationals_from_json(document["B"], "B")
            order = document.get("N", len(table) - 1)
        else:
            require_keys(document, ["N"], "binomial type")
            order = document["N"]
        if isinstance(order, bool) or not isinstance(order, int):
            raise SchemaError("binomial type N must be an integer")

        q = None
        if family == "q_factorial":
            require_keys(document, ["q"], "q_factorial binomial type")
            q = rationals_from_json([document["q"]], "q")[0]

        return cls.from_family(family, order, q=q, table=table)

    @classmethod
    def read(cls, path) -> "BinomialType":
        return cls.from_dict(read_json(path))

    def write(self, path=None) -> str:
        return write_json(self.to_dict(), path)


def make_binomial_type(family: str, param=None,
                       N: Optional[int] = None) -> BinomialType:
    """Build a binomial type; ``param`` is q for ``q_factorial`` and the
    table for ``custom``.  ``N`` defaults to the working order."""

    N = working_order.get() if N is None else N

    if family == "custom":
        return BinomialType.from_family(family, N, table=param)
    return BinomialType.from_family(family, N, q=param)


def ell_binomial(B: BinomialType, m: int, k: int) -> Fraction:
    return B.ell_binomial(m, k)


def t_number(B: BinomialType, n: int) -> Fraction:
    return B.t_number(n)


class BinomialArithFun:
    """Function on 0..N, an element of the convolution algebra of a
    binomial type.

    >>> from lcz.bintype import BinomialArithFun
    >>> f = BinomialArithFun([1, 2, 4])
    >>> f.bound
    2

    """

    def __init__(self, values: Iterable) -> None:
        self._values = tuple(as_rational(v) for v in values)
        if len(self._values) == 0:
            raise ValueError("a function on 0..N needs at least f(0).")

    @classmethod
    def from_function(cls, func: Callable[[int], object],
                      bound: int) -> "BinomialArithFun":
        return cls(func(m) for m in range(bound + 1))

    @property
    def bound(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> Tuple[Fraction, ...]:
        """f(0), ..., f(N)."""
        return self._values

    def __call__(self, m: int) -> Fraction:
        if not (isinstance(m, int) and 0 <= m <= self.bound):
            raise BoundError(
                f"f({m}) is outside the tabulated range 0..{self.bound}")
        return self._values[m]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinomialArithFun):
            return NotImplemented
        return self._values == other._values

    def __hash__(self) -> int:
        return hash(self._values)

    def __repr__(self) -> str:
        shown = ", ".join(str(v) for v in self._values[:8])
        more = ", ..." if self.bound >= 8 else ""
        return f"<{type(self).__name__} on 0..{self.bound}: [{shown}{more}]>"

    def to_dict(self) -> dict:
        return {"bound": self.bound, "values": rationals_to_json(self._values)}

    @classmethod
    def from_dict(cls, document) -> "BinomialArithFun":
        require_keys(document, ["bound", "values"], "function")
        bound = document["bound"]
        if isinstance(bound, bool) or not isinstance(bound, int) or bound < 0:
            raise SchemaError("function bound must be a non-negative integer")
        values = rationals_from_json(document["values"], "values")
        if len(values) != bound + 1:
            raise SchemaError(
                f"function on 0..{bound} needs {bound + 1} values, got "
                f"{len(values)}")
        return cls(values)

    @classmethod
    def read(cls, path) -> "BinomialArithFun":
        return cls.from_dict(read_json(path))

    def write(self, path=None) -> str:
        return write_json(self.to_dict(), path)


def _check_covered(B: BinomialType, order: int, what: str) -> None:
    if order > B.order:
        raise TruncationError(
            f"{what} of order {order} exceeds binomial type {B.name!r} "
            f"tabulated to {B.order}")


def m_convolution(B: BinomialType, f: BinomialArithFun,
                  g: BinomialArithFun) -> BinomialArithFun:
    """(f *_B g)(m) = sum_k (m k) f(k) g(m - k).

    Examples
    --------
    >>> from lcz.bintype import BinomialType, BinomialArithFun, m_convolution
    >>> B = BinomialType.from_family("factorial", 4)
    >>> ones = BinomialArithFun([1] * 5)
    >>> [str(v) for v in m_convolution(B, ones, ones).values]
    ['1', '2', '4', '8', '16']

    """

    if f.bound != g.bound:
        raise BoundError(f"bound mismatch: {f.bound} and {g.bound}")
    _check_covered(B, f.bound, "function")
    return BinomialArithFun(
        sum((B.ell_binomial(m, k) * f(k) * g(m - k) for k in range(m + 1)),
            Fraction(0))
        for m in range(f.bound + 1)
    )


def eta_M(B: BinomialType, F: TruncatedSeries) -> BinomialArithFun:
    """Embed a series in the convolution algebra of B: m -> a_m B(m).

    This is an algebra isomorphism: products of series become
    ``m_convolution`` products.

    """

    _check_covered(B, F.order, "series")
    return BinomialArithFun(F[m] * B[m] for m in range(F.order + 1))


def eta_M_inv(B: BinomialType, f: BinomialArithFun) -> TruncatedSeries:
    """Inverse of `eta_M`: a_m = f(m) / B(m)."""
    _check_covered(B, f.bound, "function")
    return TruncatedSeries(f(m) / B[m] for m in range(f.bound + 1))


def eta(F: TruncatedSeries, M: int) -> ArithFun:
    """Embed a series in the unitary ring: m -> omega(m)! a_omega(m).

    The function is evaluated lazily, so large bounds only cost what is
    actually looked at.


    Raises
    ------
    TruncationError
        If some m <= M has omega(m) above the order of ``F``.


    Examples
    --------
    >>> from lcz.series import TruncatedSeries
    >>> from lcz.bintype import eta
    >>> f = eta(TruncatedSeries([5, 7, 11]), 29)
    >>> print(f(1), f(7), f(12))
    5 7 22

    """

    needed = max_omega(M)
    if needed > F.order:
        raise TruncationError(
            f"eta on 1..{M} needs coefficients up to omega = {needed}, but "
            f"the series has order {F.order}")

    def value(m: int) -> Fraction:
        w = omega(m)
        return factorial(w) * F[w]

    return ArithFun.from_function(value, M, lazy=True)


_BINOMIAL_KINDS = {
    "binomial_multiplicative": lambda x, y: x * y,
    "binomial_additive": lambda x, y: x + y,
}


def binomial_classify(f: BinomialArithFun, kind: str) -> Classification:
    """Test f(m + n) = f(m) f(n) (or f(m) + f(n)) for all m + n <= N.


    Parameters
    ----------
    f : `BinomialArithFun`
        Bound N >= 2.

    kind : str
        ``binomial_multiplicative`` or ``binomial_additive``.


    Returns
    -------
    classification : `~lcz.arithfun.Classification`
        The witness is the lexicographically first failing (m, n).

    """

    try:
        combine = _BINOMIAL_KINDS[kind]
    except KeyError:
        raise ValueError(
            f"kind must be one of {', '.join(_BINOMIAL_KINDS)}") from None
    N = f.bound
    if N < 2:
        raise BoundError("binomial classification needs bound N >= 2")

    for m in range(N + 1):
        for n in range(N - m + 1):
            if f(m + n) != combine(f(m), f(n)):
                return Classification(kind, False, (m, n))

    vacuous = kind == "binomial_multiplicative" and all(
        v == 0 for v in f.values)
    return Classification(kind, True, None, vacuous)


def closed_form_series(B: BinomialType, variant: str, a1,
                       order: Optional[int] = None) -> TruncatedSeries:
    """The series characterized by B: a_n = a1^n / B(n) (multiplicative)
    or a_n = n a1 / B(n) (additive).

    Examples
    --------
    >>> from lcz.bintype import BinomialType, closed_form_series
    >>> B = BinomialType.from_family("q_factorial", 3, q=2)
    >>> print(closed_form_series(B, "additive", 1))
    X + 2/3 X^2 + 1/7 X^3

    """

    a1 = as_rational(a1)
    order = B.order if order is None else order
    _check_covered(B, order, "series")

    if variant == "multiplicative":
        series = TruncatedSeries.from_function(lambda n: a1**n / B[n], order)
    elif variant == "additive":
        series = TruncatedSeries.from_function(lambda n: n * a1 / B[n], order)
    else:
        raise ValueError("variant must be 'multiplicative' or 'additive'")

    log.debug(f"Generated {variant} closed form for {B.name!r}, a_1 = {a1}, "
              f"order {order}.")
    return series
