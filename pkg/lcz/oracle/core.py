# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.oracle.core
===============

Brute-force counts behind the built-in binomial types.

Maximal chains of subsets of an n-set number n!, the parameters of the
factorial family.  Complete flags of subspaces of GF(q)^n number
[n]_q!, the parameters of the q-factorial family, and k-dimensional
subspaces number the Gaussian binomial [n k]_q.

Field arithmetic is modular, so q must be prime.  Enumeration sizes are
capped; exceeding a cap raises `FeasibilityError` rather than
truncating.

"""

__all__ = [
    "FeasibilityError",
    "FlagCountRequest",
    "OracleResult",
    "MAX_CHAIN_N",
    "MAX_SUBSPACE_SIZE",
    "MAX_FLAG_SIZE",
    "MAX_SPAN_EXTENSIONS",
    "rref",
    "count_subset_chains",
    "iter_subspaces",
    "count_subspaces",
    "count_all_subspaces",
    "count_complete_flags",
    "run_oracle",
]

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np
from astropy import log

from ..exceptions import LczException
from ..exactnum import factorial, galois_number, gaussian_binomial, q_factorial
from ..arithfun import factorize

MAX_CHAIN_N = 8
MAX_SUBSPACE_SIZE = 2**16
MAX_FLAG_SIZE = 2**12
# the flag recursion visits every subspace once
MAX_FLAG_SUBSPACES = 10**5
# row reductions spent growing subspaces one vector at a time
MAX_SPAN_EXTENSIONS = 2 * 10**5


class FeasibilityError(LczException, ValueError):
    """An enumeration request exceeds its cap, or q is not prime."""


def _require_prime(q: int) -> int:
    if isinstance(q, bool) or not isinstance(q, int) or q < 2 \
            or factorize(q).prime_powers != ((q, 1),):
        raise FeasibilityError(
            f"q = {q} is not prime; the oracle supports prime fields only")
    return q


@dataclass(frozen=True)
class FlagCountRequest:
    """Validated enumeration request.


    Parameters
    ----------
    n : int
        Dimension, or set size for subset chains.

    q : int, optional
        Field size; must be prime with q^n <= `MAX_SUBSPACE_SIZE`.

    """

    n: int
    q: Optional[int] = None

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) \
                or self.n < 0:
            raise ValueError("n must be a non-negative integer")
        if self.q is not None:
            _require_prime(self.q)
            if self.size > MAX_SUBSPACE_SIZE:
                raise FeasibilityError(
                    f"q^n = {self.size} exceeds the enumeration cap "
                    f"{MAX_SUBSPACE_SIZE}")

    @property
    def size(self) -> int:
        """Number of vectors, q^n."""
        return self.q**self.n

    def require_flag_feasible(self) -> None:
        if self.q is None:
            raise ValueError("flag counts need q")
        if self.size > MAX_FLAG_SIZE:
            raise FeasibilityError(
                f"q^n = {self.size} exceeds the flag enumeration cap "
                f"{MAX_FLAG_SIZE}")
        subspaces = galois_number(self.n, self.q)
        if subspaces > MAX_FLAG_SUBSPACES:
            raise FeasibilityError(
                f"GF({self.q})^{self.n} has {subspaces} subspaces, above the "
                f"flag enumeration cap {MAX_FLAG_SUBSPACES}")


class OracleResult(NamedTuple):
    """An enumerated count beside its closed-form value."""

    kind: str
    params: Dict[str, int]
    count: int
    expected: int

    @property
    def agrees(self) -> bool:
        return self.count == self.expected

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": dict(self.params),
                "count": str(self.count), "expected": str(self.expected)}


def rref(rows, q: int) -> np.ndarray:
    """Reduced row echelon form over GF(q), with zero rows dropped.


    Parameters
    ----------
    rows : array-like
        Two-dimensional integer array; entries are reduced modulo q.

    q : int
        Prime.


    Returns
    -------
    basis : `~numpy.ndarray`
        Canonical basis of the row space: two row sets span the same
        subspace exactly when their RREFs are equal.


    Examples
    --------
    >>> from lcz.oracle import rref
    >>> rref([[0, 2, 1], [1, 1, 0]], 3).tolist()
    [[1, 0, 1], [0, 1, 2]]

    """

    q = _require_prime(q)
    A = np.array(rows, dtype=np.int64)
    if A.ndim != 2:
        raise ValueError("rows must be a two-dimensional array")
    A %= q
    nrows, ncols = A.shape

    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if len(nonzero) == 0:
            continue
        p = r + nonzero[0]
        A[[r, p]] = A[[p, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, q)) % q
        for i in range(nrows):
            if i != r and A[i, c] != 0:
                A[i] = (A[i] - A[i, c] * A[r]) % q
        r += 1

    return A[:r]


def _key(basis: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in basis.tolist())


def count_subset_chains(n: int) -> int:
    """Count chains {} = S_0 < S_1 < ... < S_n = {1, ..., n}, |S_i| = i.

    Every chain is enumerated explicitly; n is capped at `MAX_CHAIN_N`.

    Examples
    --------
    >>> from lcz.oracle import count_subset_chains
    >>> count_subset_chains(5)
    120

    """

    FlagCountRequest(n)
    if n > MAX_CHAIN_N:
        raise FeasibilityError(
            f"subset chains are enumerated for n <= {MAX_CHAIN_N}, got {n}")

    full = (1 << n) - 1

    def chains(subset: int) -> int:
        if subset == full:
            return 1
        return sum(chains(subset | (1 << x)) for x in range(n)
                   if not subset & (1 << x))

    return chains(0)


def _pivot_patterns(n: int, k: int) -> Iterator[Tuple[Tuple[int, ...],
                                                       List[Tuple[int, int]]]]:
    # free cells of an RREF basis: row i, non-pivot column right of pivot i
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots)
                for j in range(p + 1, n) if j not in pivot_set]
        yield pivots, free


def _check_subspace_request(n: int, k: int, q: int) -> None:
    if q is None:
        raise ValueError("subspace counts need q")
    FlagCountRequest(n, q)
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n = {n}, k = {k}")


def iter_subspaces(n: int, k: int, q: int) -> Iterator[np.ndarray]:
    """Yield every k-dimensional subspace of GF(q)^n as its RREF basis.

    Examples
    --------
    >>> from lcz.oracle import iter_subspaces
    >>> [b.tolist() for b in iter_subspaces(2, 1, 2)]
    [[[1, 0]], [[1, 1]], [[0, 1]]]

    """

    _check_subspace_request(n, k, q)
    for pivots, free in _pivot_patterns(n, k):
        for filling in itertools.product(range(q), repeat=len(free)):
            basis = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                basis[i, p] = 1
            for (i, j), value in zip(free, filling):
                basis[i, j] = value
            yield basis


def _spans(n: int, q: int, k: int) -> List[set]:
    # level j: RREF keys of every span of j independent vectors
    steps = q**n * sum(gaussian_binomial(n, j, q) for j in range(k))
    if steps > MAX_SPAN_EXTENSIONS:
        raise FeasibilityError(
            f"growing the subspaces of GF({q})^{n} to dimension {k} takes "
            f"{steps} row reductions, above the cap {MAX_SPAN_EXTENSIONS}")

    vectors = np.array(list(itertools.product(range(q), repeat=n)),
                       dtype=np.int64).reshape(-1, n)
    level = {_key(np.zeros((0, n), dtype=np.int64))}
    levels = [level]
    for j in range(k):
        grown = set()
        for key in level:
            basis = np.array(key, dtype=np.int64).reshape(j, n)
            for v in vectors:
                extended = rref(np.vstack([basis, v]), q)
                if len(extended) > j:
                    grown.add(_key(extended))
        level = grown
        levels.append(level)
    return levels


def count_subspaces(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n.

    Subspaces are grown from the zero space by adding one vector at a
    time, and the spans reached at dimension k are told apart by their
    RREF.  Nothing here uses the pivot patterns of `iter_subspaces`.


    Raises
    ------
    FeasibilityError
        If q is not prime, q^n exceeds `MAX_SUBSPACE_SIZE`, or the growth
        needs more than `MAX_SPAN_EXTENSIONS` row reductions.


    Examples
    --------
    >>> from lcz.oracle import count_subspaces
    >>> count_subspaces(4, 2, 2)
    35

    """

    _check_subspace_request(n, k, q)
    count = len(_spans(n, q, k)[k])
    log.debug(f"Reached {count} subspaces of dimension {k} in GF({q})^{n}.")
    return count


def count_all_subspaces(n: int, q: int) -> int:
    """Total number of subspaces of GF(q)^n, all dimensions."""
    _check_subspace_request(n, 0, q)
    return sum(len(level) for level in _spans(n, q, n))


def count_complete_flags(n: int, q: int) -> int:
    """Count chains 0 = V_0 < V_1 < ... < V_n = GF(q)^n, dim V_i = i.

    Each subspace is extended by every vector outside it, the distinct
    extensions are found by their RREF, and the recursion is memoized on
    that canonical form.


    Raises
    ------
    FeasibilityError
        If q is not prime, q^n exceeds `MAX_FLAG_SIZE`, or the space has
        too many subspaces to visit.


    Examples
    --------
    >>> from lcz.oracle import count_complete_flags
    >>> count_complete_flags(3, 2)
    21

    """

    request = FlagCountRequest(n, q)
    request.require_flag_feasible()
    if n == 0:
        return 1

    vectors = np.array(list(itertools.product(range(q), repeat=n)),
                       dtype=np.int64).reshape(-1, n)
    memo: Dict[Tuple[Tuple[int, ...], ...], int] = {}

    def flags(basis: np.ndarray) -> int:
        key = _key(basis)
        if key in memo:
            return memo[key]
        if len(basis) == n:
            return 1

        extensions = {}
        for v in vectors:
            extended = rref(np.vstack([basis, v]), q)
            if len(extended) > len(basis):
                extensions.setdefault(_key(extended), extended)
        memo[key] = sum(flags(w) for w in extensions.values())
        return memo[key]

    count = flags(np.zeros((0, n), dtype=np.int64))
    log.debug(f"Visited {len(memo)} proper subspaces of GF({q})^{n}.")
    return count


def run_oracle(kind: str, n: int, k: Optional[int] = None,
               q: Optional[int] = None) -> OracleResult:
    """Enumerate one count and pair it with its closed form.


    Parameters
    ----------
    kind : str
        ``chains`` (n! expected), ``flags`` ([n]_q!), ``subspaces``
        ([n k]_q), or ``galois`` (the Galois number G_n(q)).

    n, k, q : int
        Parameters of the count; ``k`` for subspaces only.


    Examples
    --------
    >>> from lcz.oracle import run_oracle
    >>> result = run_oracle("flags", 3, q=2)
    >>> result.count, result.expected, result.agrees
    (21, 21, True)

    """

    if kind == "chains":
        count, expected = count_subset_chains(n), factorial(n)
        params = {"n": n}
    elif kind == "flags":
        count, expected = count_complete_flags(n, q), q_factorial(n, q)
        params = {"n": n, "q": q}
    elif kind == "subspaces":
        if k is None:
            raise ValueError("subspace counts need k")
        count = count_subspaces(n, k, q)
        expected = gaussian_binomial(n, k, q)
        params = {"n": n, "k": k, "q": q}
    elif kind == "galois":
        count, expected = count_all_subspaces(n, q), galois_number(n, q)
        params = {"n": n, "q": q}
    else:
        raise ValueError(
            "kind must be 'chains', 'flags', 'subspaces', or 'galois'")

    return OracleResult(kind, params, int(count), int(expected))
