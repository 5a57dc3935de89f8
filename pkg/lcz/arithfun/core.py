# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.arithfun.core
=================

Classical arithmetical functions tabulated on 1..M.

Evaluation outside 1..M is an error: convolutions near the bound would
otherwise be computed from silently invented zeros.

"""

__all__ = [
    "ArithFun",
    "Factorization",
    "Classification",
    "BoundError",
    "OutOfRangeError",
    "MAX_FACTORIZABLE",
    "factorize",
    "omega",
    "big_omega",
    "first_primes",
    "primorial",
    "max_omega",
    "divisors",
    "unitary_divisors",
    "coprime_divisor_pairs",
    "dirichlet_conv",
    "unitary_conv",
    "dirichlet_conv_at",
    "unitary_conv_at",
    "pointwise",
    "scale",
    "builtin",
    "BUILTINS",
    "CLASSIFY_KINDS",
    "classify",
]

import math
import operator
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import (Callable, Dict, Iterable, Iterator, List, NamedTuple,
                    Optional, Tuple)

from ..exceptions import LczException, SchemaError
from ..exactnum import as_rational
from ..utils import (
    read_json, write_json, require_keys, rationals_from_json,
    rationals_to_json
)

MAX_FACTORIZABLE = 2**63 - 1


class BoundError(LczException, ValueError):
    """Argument outside the tabulated range, or mismatched bounds."""


class OutOfRangeError(LczException, ValueError):
    """Integer too large for trial-division factorization."""


class Factorization(NamedTuple):
    """Canonical factorization m = p_1^e_1 ... p_r^e_r, p_1 < ... < p_r."""

    m: int
    prime_powers: Tuple[Tuple[int, int], ...]

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.prime_powers)

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for p, e in self.prime_powers)

    @property
    def squarefree(self) -> bool:
        return all(e == 1 for p, e in self.prime_powers)


@lru_cache(maxsize=65536)
def factorize(m: int) -> Factorization:
    """Factor ``m`` by trial division.


    Parameters
    ----------
    m : int
        1 <= m <= 2**63 - 1.


    Returns
    -------
    factorization : `Factorization`
        m = 1 gives an empty list of prime powers.


    Examples
    --------
    >>> from lcz.arithfun import factorize
    >>> factorize(12).prime_powers
    ((2, 2), (3, 1))

    """

    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError("m must be an integer.")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}.")
    if m > MAX_FACTORIZABLE:
        raise OutOfRangeError(
            f"{m} exceeds the supported factorization range 2**63 - 1")

    powers = []
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            powers.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        powers.append((rest, 1))

    return Factorization(m, tuple(powers))


def omega(m: int) -> int:
    """Number of distinct prime factors of ``m``; omega(1) = 0."""
    return factorize(m).omega


def big_omega(m: int) -> int:
    """Number of prime factors of ``m`` counted with multiplicity."""
    return factorize(m).big_omega


def first_primes(k: int) -> List[int]:
    """The first ``k`` primes."""
    primes: List[int] = []
    candidate = 2
    while len(primes) < k:
        if all(candidate % p for p in primes if p * p <= candidate):
            primes.append(candidate)
        candidate += 1
    return primes


def primorial(k: int) -> int:
    """Product of the first ``k`` primes; primorial(0) = 1."""
    return math.prod(first_primes(k))


def max_omega(M: int) -> int:
    """Largest omega(m) over 1 <= m <= M.

    The smallest integer with k distinct prime factors is the product of
    the first k primes.

    """

    if M < 1:
        raise ValueError("M must be positive.")
    k = 0
    while primorial(k + 1) <= M:
        k += 1
    return k


def divisors(m: int) -> List[int]:
    """All positive divisors of ``m`` in increasing order."""
    result = [1]
    for p, e in factorize(m).prime_powers:
        result = [d * p**i for d in result for i in range(e + 1)]
    return sorted(result)


def unitary_divisors(m: int) -> List[int]:
    """Divisors d of ``m`` with gcd(d, m/d) = 1, in increasing order."""
    blocks = [p**e for p, e in factorize(m).prime_powers]
    result = []
    for r in range(len(blocks) + 1):
        for chosen in combinations(blocks, r):
            result.append(math.prod(chosen))
    return sorted(result)


def coprime_divisor_pairs(M: int) -> Iterator[Tuple[int, int]]:
    """Pairs (m, n), m n | M and gcd(m, n) = 1, in lexicographic order."""
    for m in divisors(M):
        for n in divisors(M // m):
            if math.gcd(m, n) == 1:
                yield (m, n)


class ArithFun:
    """Arithmetical function f tabulated on 1..M.


    Parameters
    ----------
    values : iterable
        f(1), ..., f(M) as integers, `~fractions.Fraction`, or ``"p/q"``
        strings.


    Examples
    --------
    >>> from lcz.arithfun import ArithFun
    >>> f = ArithFun.from_function(lambda n: n**2, 10)
    >>> print(f(3))
    9
    >>> f(11)
    Traceback (most recent call last):
    ...
    lcz.arithfun.core.BoundError: f(11) is outside the tabulated range 1..10


    Notes
    -----
    Functions built with ``lazy=True`` evaluate and memoize a value the
    first time it is requested; all other behavior is unchanged.

    """

    def __init__(self, values: Iterable) -> None:
        self._table: Dict[int, Fraction] = {
            n: as_rational(v) for n, v in enumerate(values, 1)
        }
        self._bound = len(self._table)
        self._func: Optional[Callable[[int], object]] = None
        if self._bound < 1:
            raise ValueError("an arithmetical function needs bound M >= 1.")

    @classmethod
    def from_function(cls, func: Callable[[int], object], bound: int,
                      lazy: bool = False) -> "ArithFun":
        """Tabulate ``func`` on 1..``bound``, optionally on demand."""
        if bound < 1:
            raise ValueError("bound must be at least 1.")
        if not lazy:
            return cls(func(n) for n in range(1, bound + 1))

        f = cls.__new__(cls)
        f._table = {}
        f._bound = bound
        f._func = func
        return f

    @property
    def bound(self) -> int:
        """Largest tabulated argument M."""
        return self._bound

    @property
    def lazy(self) -> bool:
        return self._func is not None

    @property
    def values(self) -> Tuple[Fraction, ...]:
        """f(1), ..., f(M); forces evaluation of a lazy function."""
        return tuple(self(n) for n in range(1, self._bound + 1))

    def __call__(self, n: int) -> Fraction:
        try:
            return self._table[n]
        except KeyError:
            pass
        if not (isinstance(n, int) and 1 <= n <= self._bound):
            raise BoundError(
                f"f({n}) is outside the tabulated range 1..{self._bound}")
        value = as_rational(self._func(n))
        self._table[n] = value
        return value

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArithFun):
            return NotImplemented
        return self.bound == other.bound and self.values == other.values

    def __repr__(self) -> str:
        shown = ", ".join(str(self(n)) for n in range(1, min(self.bound, 8) + 1))
        more = ", ..." if self.bound > 8 else ""
        return f"<{type(self).__name__} on 1..{self.bound}: [{shown}{more}]>"

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def to_dict(self) -> dict:
        """JSON-ready form ``{"bound": M, "values": [...]}``."""
        return {"bound": self.bound, "values": rationals_to_json(self.values)}

    @classmethod
    def from_dict(cls, document) -> "ArithFun":
        require_keys(document, ["bound", "values"], "function")
        bound = document["bound"]
        if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
            raise SchemaError("function bound must be a positive integer")
        values = rationals_from_json(document["values"], "values")
        if len(values) != bound:
            raise SchemaError(
                f"function with bound {bound} needs {bound} values, "
                f"got {len(values)}")
        return cls(values)

    @classmethod
    def read(cls, path) -> "ArithFun":
        return cls.from_dict(read_json(path))

    def write(self, path=None) -> str:
        return write_json(self.to_dict(), path)


def _same_bound(f: ArithFun, g: ArithFun) -> int:
    if f.bound != g.bound:
        raise BoundError(
            f"bound mismatch: {f.bound} and {g.bound}")
    return f.bound


def _convolve(f: ArithFun, g: ArithFun, unitary: bool) -> ArithFun:
    M = _same_bound(f, g)
    total = [Fraction(0)] * (M + 1)
    for d in range(1, M + 1):
        fd = f(d)
        if fd == 0:
            continue
        for e in range(1, M // d + 1):
            if unitary and math.gcd(d, e) != 1:
                continue
            total[d * e] += fd * g(e)
    return ArithFun(total[1:])


def dirichlet_conv(f: ArithFun, g: ArithFun) -> ArithFun:
    """Dirichlet convolution, (f * g)(n) = sum over d | n of f(d) g(n/d).

    Examples
    --------
    >>> from lcz.arithfun import builtin, dirichlet_conv
    >>> zeta = builtin("zeta", 12)
    >>> print(dirichlet_conv(zeta, zeta)(12))
    6

    """

    return _convolve(f, g, unitary=False)


def unitary_conv(f: ArithFun, g: ArithFun) -> ArithFun:
    """Unitary convolution: the Dirichlet sum restricted to gcd(d, n/d) = 1."""
    return _convolve(f, g, unitary=True)


def dirichlet_conv_at(f: ArithFun, g: ArithFun, n: int) -> Fraction:
    """(f *_D g)(n) alone; only f and g at divisors of n are evaluated."""
    _same_bound(f, g)
    return sum((f(d) * g(n // d) for d in divisors(n)), Fraction(0))


def unitary_conv_at(f: ArithFun, g: ArithFun, n: int) -> Fraction:
    """(f *_U g)(n) alone; only f and g at unitary divisors are evaluated."""
    _same_bound(f, g)
    return sum((f(d) * g(n // d) for d in unitary_divisors(n)), Fraction(0))


_POINTWISE = {"mul": operator.mul, "add": operator.add}


def pointwise(op: str, f: ArithFun, g: ArithFun) -> ArithFun:
    """Coordinate-wise product (``op="mul"``) or sum (``op="add"``)."""
    try:
        func = _POINTWISE[op]
    except KeyError:
        raise ValueError(f"op must be 'mul' or 'add', got {op!r}") from None
    M = _same_bound(f, g)
    return ArithFun(func(f(n), g(n)) for n in range(1, M + 1))


def scale(c, f: ArithFun) -> ArithFun:
    """Multiply every value by the rational ``c``."""
    c = as_rational(c)
    return ArithFun(c * v for v in f.values)


def _zeta(M, k):
    return ArithFun([1] * M)


def _tau(M, k):
    zeta = _zeta(M, k)
    return dirichlet_conv(zeta, zeta)


def _identity_eps(M, k):
    return ArithFun([1] + [0] * (M - 1))


def _nth_power(M, k):
    if k is None:
        raise ValueError("nth_power needs the exponent k.")
    return ArithFun.from_function(lambda n: n**k, M)


def _big_omega(M, k):
    return ArithFun.from_function(big_omega, M)


def _small_omega(M, k):
    return ArithFun.from_function(omega, M)


BUILTINS: Dict[str, Callable[[int, Optional[int]], ArithFun]] = {
    "zeta": _zeta,
    "tau": _tau,
    "identity_eps": _identity_eps,
    "nth_power": _nth_power,
    "big_omega": _big_omega,
    "small_omega": _small_omega,
}


def builtin(name: str, M: int, k: Optional[int] = None) -> ArithFun:
    """A built-in arithmetical function on 1..M.


    Parameters
    ----------
    name : str
        One of ``zeta`` (constant 1), ``tau`` (number of divisors,
        computed as zeta *_D zeta), ``identity_eps`` (1 at 1, else 0),
        ``nth_power`` (n**k), ``big_omega``, ``small_omega``.

    M : int
        Bound.

    k : int, optional
        Exponent for ``nth_power``.


    Examples
    --------
    >>> from lcz.arithfun import builtin
    >>> [str(v) for v in builtin("tau", 6).values]
    ['1', '2', '2', '3', '2', '4']

    """

    if M < 1:
        raise ValueError("M must be at least 1.")
    try:
        factory = BUILTINS[name]
    except KeyError:
        raise ValueError(
            f"unknown built-in function {name!r}; choose from "
            f"{', '.join(BUILTINS)}") from None
    return factory(M, k)


CLASSIFY_KINDS = (
    "completely_multiplicative",
    "multiplicative",
    "completely_additive",
    "additive",
)


class Classification(NamedTuple):
    """Outcome of `classify`.

    ``witness`` is the first pair (m, n) violating the functional
    equation, or `None`.  ``vacuous`` marks the identically zero function,
    which satisfies the multiplicative equations without having f(1) = 1.

    """

    kind: str
    holds: bool
    witness: Optional[Tuple[int, int]]
    vacuous: bool = False


def _all_pairs(M: int, coprime: bool) -> Iterator[Tuple[int, int]]:
    for m in range(1, M + 1):
        for n in range(1, M // m + 1):
            if coprime and math.gcd(m, n) != 1:
                continue
            yield (m, n)


def classify(f: ArithFun, kind: str,
             pairs: Optional[Iterable[Tuple[int, int]]] = None
             ) -> Classification:
    """Test a multiplicativity or additivity functional equation.


    Parameters
    ----------
    f : `ArithFun`
        Function with bound M >= 4.

    kind : str
        ``completely_multiplicative``: f(mn) = f(m) f(n) for all m n <= M;
        ``multiplicative``: the same for gcd(m, n) = 1;
        ``completely_additive`` and ``additive``: f(mn) = f(m) + f(n).

    pairs : iterable of (m, n), optional
        Restrict the test to these pairs, e.g., when f is only evaluated
        lazily at a few points.  By default every admissible pair with
        m n <= M is tested, in lexicographic order.


    Returns
    -------
    classification : `Classification`


    Examples
    --------
    >>> from lcz.arithfun import builtin, classify
    >>> classify(builtin("tau", 100), "completely_multiplicative").witness
    (2, 2)

    """

    if kind not in CLASSIFY_KINDS:
        raise ValueError(f"kind must be one of {', '.join(CLASSIFY_KINDS)}")
    M = f.bound
    if M < 4:
        raise BoundError("classification needs bound M >= 4")

    coprime = not kind.startswith("completely")
    combine = operator.mul if kind.endswith("multiplicative") else operator.add

    if pairs is None:
        pairs = _all_pairs(M, coprime)

    tested = set()
    for m, n in pairs:
        if coprime and math.gcd(m, n) != 1:
            continue
        if f(m * n) != combine(f(m), f(n)):
            return Classification(kind, False, (m, n))
        tested.update((m, n, m * n))

    # only the tested points are known; for the default pairs that is 1..M
    vacuous = combine is operator.mul and all(f(x) == 0 for x in tested)
    return Classification(kind, True, None, vacuous)
