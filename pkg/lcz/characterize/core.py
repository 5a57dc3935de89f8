# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.characterize.core
=====================

Equivalence suites for power series and arithmetical functions.

A series F with a_1 != 0 and a binomial type B are tested against five
conditions, each of which is equivalent to the others:

1. closed-form: a_n = a_1^n / B(n), or a_n = n a_1 / B(n)
2. embedded: the embedded function is (binomial) multiplicative, or
   additive
3. lambek: F (.)_B (G H) = (F (.)_B G)(F (.)_B H) for all series G, H,
   or the additive form
4. carlitz-square: the same with G = H
5. particular: sum t(n) a_n X^n = F^2, or 2 (sum X^n / B(n)) F

An arithmetical function f is tested against four: it is completely
multiplicative (additive); f distributes over every Dirichlet product;
f distributes over every Dirichlet square; f tau = f * f, or
f tau = 2 (f * zeta).

Conditions quantified over all series or functions are sampled with
seeded random trials.  Their passing verdict means "no counterexample in
N trials", every failure carries a witness that `replay` recomputes
exactly.

Every series check needs a working order N >= 2: a series or binomial
type of order 1 raises `~lcz.series.TruncationError`.

"""

__all__ = [
    "CheckReport",
    "SuiteVerdict",
    "CONDITIONS",
    "DIRICHLET_CONDITIONS",
    "VARIANTS",
    "suite_label",
    "theorem_number",
    "derive_seed",
    "random_series",
    "random_function",
    "check_closed_form",
    "check_embedded",
    "check_lambek",
    "check_carlitz_square",
    "check_particular",
    "check_condition",
    "check_dirichlet",
    "run_suite",
    "replay",
]

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional
from warnings import warn

import numpy as np
from astropy import log
from astropy.table import Table

from ..defaults import (
    CoefficientSampler, coefficient_sampler, default_trials,
    seed_from_environment
)
from ..exceptions import HypothesisViolated
from ..exactnum import factorial, format_rational
from ..series import (
    TruncatedSeries, TruncationError, add, cauchy_mul, equals_to_order,
    odot, scale
)
from ..arithfun import (
    ArithFun, BoundError, builtin, classify, coprime_divisor_pairs,
    dirichlet_conv, pointwise, primorial
)
from ..arithfun import scale as scale_function
from ..bintype import BinomialType, binomial_classify, eta, eta_M

VARIANTS = ("multiplicative", "additive")

CONDITIONS = {
    1: "closed-form",
    2: "embedded",
    3: "lambek",
    4: "carlitz-square",
    5: "particular",
}

DIRICHLET_CONDITIONS = {
    1: "classify",
    2: "lambek",
    3: "carlitz-square",
    4: "tau-identity",
}

_FAMILY_LABELS = {
    "factorial": "exponential",
    "q_factorial": "q-exponential",
    "ones": "geometric",
    "custom": "binomial",
}

# characterization verified by each (family, variant) suite
_THEOREMS = {
    ("dirichlet", "multiplicative"): "1.1",
    ("dirichlet", "additive"): "1.2",
    ("factorial", "multiplicative"): "1.3",
    ("factorial", "additive"): "1.4",
    ("ones", "multiplicative"): "2.1",
    ("custom", "multiplicative"): "2.1",
    ("ones", "additive"): "2.2",
    ("custom", "additive"): "2.2",
    ("q_factorial", "additive"): "2.2",
    ("q_factorial", "multiplicative"): "2.3",
}

# largest primorial tabulated by the classical embedding check
_MAX_PRIMORIAL_INDEX = 7

_MASK64 = 2**64 - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


@dataclass
class CheckReport:
    """Verdict for one condition of a suite.


    Attributes
    ----------
    suite : str
        Suite label, e.g., ``"exponential-multiplicative"``.

    condition : int
        Condition number within the suite.

    name : str
        Condition name, e.g., ``"lambek"``.

    variant : str
        ``"multiplicative"`` or ``"additive"``.

    holds : bool

    mode : str
        ``"exact"`` for conditions decided at the working order or bound,
        ``"randomized"`` for sampled conditions.

    witness : dict or None
        JSON-ready failure data; present whenever ``holds`` is `False`.

    trials, seed : int or None
        Randomized conditions only.

    order, bound : int or None
        Working order of a series check, bound of a function check.

    hypothesis_violated : bool
        The series has a_1 = 0, where the equivalence is not claimed.

    note : str
        Free-form detail, e.g., the pair set of a classification.

    theorem : str
        Number of the characterization the suite verifies, e.g.,
        ``"1.3"``; see `theorem_number`.

    """

    suite: str
    condition: int
    name: str
    variant: str
    holds: bool
    mode: str
    witness: Optional[Dict[str, Any]] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    order: Optional[int] = None
    bound: Optional[int] = None
    hypothesis_violated: bool = False
    note: str = ""
    theorem: str = ""

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def verdict(self) -> str:
        """Human-readable verdict, distinguishing sampled from decided."""
        if not self.holds:
            return "fails"
        if self.mode == "randomized":
            return f"no counterexample in {self.trials} trials"
        if self.order is not None:
            return f"verified to order {self.order}"
        return f"verified on 1..{self.bound}"

    def to_dict(self) -> dict:
        document = {
            "id": self.condition,
            "name": self.name,
            "holds": self.holds,
            "mode": self.mode,
        }
        if self.mode == "randomized":
            document["trials"] = self.trials
            document["seed"] = self.seed
        if self.order is not None:
            document["order"] = self.order
        if self.bound is not None:
            document["bound"] = self.bound
        document["witness"] = self.witness
        if self.hypothesis_violated:
            document["hypothesis_violated"] = True
        if self.note:
            document["note"] = self.note
        return document


@dataclass
class SuiteVerdict:
    """All condition reports of one suite.

    The suite is consistent when every condition agrees, i.e., all hold
    or all fail.

    """

    label: str
    variant: str
    reports: List[CheckReport] = field(default_factory=list)
    hypothesis_violated: bool = False
    theorem: str = ""

    @property
    def consistent(self) -> bool:
        return len({r.holds for r in self.reports}) <= 1

    @property
    def holds(self) -> bool:
        """`True` if every condition holds."""
        return all(r.holds for r in self.reports)

    def __getitem__(self, condition: int) -> CheckReport:
        for report in self.reports:
            if report.condition == condition:
                return report
        raise KeyError(condition)

    def to_dict(self) -> dict:
        document = {
            "theorem": self.theorem,
            "suite": self.label,
            "variant": self.variant,
            "conditions": [r.to_dict() for r in self.reports],
            "consistent": self.consistent,
        }
        if self.hypothesis_violated:
            document["hypothesis_violated"] = True
        return document

    def to_table(self) -> Table:
        return Table(
            rows=[(r.condition, r.name, r.holds, r.mode, r.verdict)
                  for r in self.reports],
            names=("id", "condition", "holds", "mode", "verdict"),
        )

    def pformat(self) -> str:
        """Aligned text report with one line per witness."""

        lines = [f"suite: {self.label} (theorem {self.theorem})"]
        lines.extend(self.to_table().pformat(max_lines=-1, max_width=-1))
        for r in self.reports:
            if r.witness is not None:
                detail = ", ".join(f"{k}={_brief(v)}"
                                   for k, v in r.witness.items())
                lines.append(f"witness ({r.condition}) {r.name}: {detail}")
        if self.hypothesis_violated:
            lines.append("warning: a_1 = 0, the conditions need not agree")
        lines.append("consistent: " + ("yes" if self.consistent else "NO"))
        return "\n".join(lines)


def _brief(value) -> str:
    if isinstance(value, list):
        shown = ", ".join(str(v) for v in value[:6])
        return f"[{shown}{', ...' if len(value) > 6 else ''}]"
    return str(value)


def suite_label(B: BinomialType, variant: str) -> str:
    """Descriptive suite label, e.g., ``"q-exponential-additive"``."""
    return f"{_FAMILY_LABELS[B.family]}-{variant}"


def theorem_number(family: str, variant: str) -> str:
    """Number of the characterization a suite verifies.

    ``family`` is a binomial type family, or ``"dirichlet"`` for the
    arithmetical-function suites.

    Examples
    --------
    >>> from lcz.characterize import theorem_number
    >>> theorem_number("q_factorial", "multiplicative")
    '2.3'
    >>> theorem_number("dirichlet", "additive")
    '1.2'

    """

    try:
        return _THEOREMS[(family, variant)]
    except KeyError:
        raise ValueError(
            f"no characterization for family {family!r} and variant "
            f"{variant!r}") from None


def derive_seed(seed: int, trial: int) -> int:
    """Per-trial seed: the splitmix64 output for state seed + trial * gamma.

    Trials are independent of one another and of the order they run in.

    Examples
    --------
    >>> from lcz.characterize import derive_seed
    >>> derive_seed(42, 0) == derive_seed(42, 0)
    True
    >>> derive_seed(42, 0) != derive_seed(42, 1)
    True

    """

    z = (seed + trial * _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _draw(rng: np.random.Generator, size: int,
          sampler: Optional[CoefficientSampler]) -> List[Fraction]:
    sampler = coefficient_sampler.get() if sampler is None else sampler
    lo, hi = sampler.numerators
    numerators = rng.integers(lo, hi + 1, size=size)
    denominators = rng.choice(np.array(sampler.denominators), size=size)
    return [Fraction(int(p), int(q))
            for p, q in zip(numerators, denominators)]


def random_series(rng: np.random.Generator, order: int,
                  sampler: Optional[CoefficientSampler] = None
                  ) -> TruncatedSeries:
    """Series with coefficients drawn from the coefficient sampler."""
    return TruncatedSeries(_draw(rng, order + 1, sampler))


def random_function(rng: np.random.Generator, bound: int,
                    sampler: Optional[CoefficientSampler] = None) -> ArithFun:
    """Arithmetical function on 1..``bound`` with sampled values."""
    return ArithFun(_draw(rng, bound, sampler))


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {', '.join(VARIANTS)}")
    return variant


def _working_order(F: TruncatedSeries, B: BinomialType,
                   order: Optional[int]) -> int:
    N = min(F.order, B.order)
    if order is not None:
        if order > N:
            raise TruncationError(
                f"order {order} exceeds the series order {F.order} or the "
                f"binomial type order {B.order}")
        N = order
    if N < 2:
        raise TruncationError(
            f"series checks need working order N >= 2, got N = {N}")
    return N


def _violates_hypothesis(F: TruncatedSeries) -> bool:
    return F.order >= 1 and F[1] == 0


def _warn_hypothesis(F: TruncatedSeries, what: str) -> bool:
    violated = _violates_hypothesis(F)
    if violated:
        log.warning(f"{what}: a_1 = 0, the characterizations are only "
                    "claimed for a_1 != 0")
    return violated


def _report(B, variant, condition, F, **kwargs) -> CheckReport:
    return CheckReport(
        suite=suite_label(B, variant), condition=condition,
        name=CONDITIONS[condition], variant=variant,
        hypothesis_violated=_violates_hypothesis(F),
        theorem=theorem_number(B.family, variant), **kwargs)


def _mismatch_witness(index: int, lhs: Fraction, rhs: Fraction) -> dict:
    return {"index": index, "lhs": format_rational(lhs),
            "rhs": format_rational(rhs)}


# condition 1

def _closed_form(F, B, variant, order=None) -> CheckReport:
    N = _working_order(F, B, order)
    a1 = F[1]
    for n in range(N + 1):
        target = a1**n if variant == "multiplicative" else n * a1
        if F[n] * B[n] != target:
            return _report(B, variant, 1, F, holds=False, mode="exact",
                           order=N, witness={
                               "index": n,
                               "expected": format_rational(target / B[n]),
                               "actual": format_rational(F[n])})
    return _report(B, variant, 1, F, holds=True, mode="exact", order=N)


def check_closed_form(F: TruncatedSeries, B: BinomialType, variant: str,
                      order: Optional[int] = None) -> CheckReport:
    """Test a_n B(n) = a_1^n (multiplicative) or n a_1 (additive).


    Parameters
    ----------
    F : `~lcz.series.TruncatedSeries`

    B : `~lcz.bintype.BinomialType`

    variant : str
        ``"multiplicative"`` or ``"additive"``.

    order : int, optional
        Working order; defaults to the smaller of the series and type
        orders.


    Returns
    -------
    report : `CheckReport`
        On failure the witness is the first index n where a_n differs
        from the closed form.


    Raises
    ------
    TruncationError
        If the working order is below 2, or ``order`` exceeds the order
        of F or B.


    Examples
    --------
    >>> from lcz.series import TruncatedSeries
    >>> from lcz.bintype import BinomialType
    >>> from lcz.characterize import check_closed_form
    >>> B = BinomialType.from_family("factorial", 16)
    >>> check_closed_form(TruncatedSeries.exponential(16), B,
    ...                   "multiplicative").verdict
    'verified to order 16'

    """

    _check_variant(variant)
    _warn_hypothesis(F, "closed-form check")
    return _closed_form(F, B, variant, order)


# condition 2

def _embedded_binomial(F, B, variant, N) -> CheckReport:
    f = eta_M(B, TruncatedSeries(F.coeffs[:N + 1]))
    result = binomial_classify(f, "binomial_" + variant)
    note = "embedded function is identically zero" if result.vacuous else ""
    witness = None
    if not result.holds:
        m, n = result.witness
        witness = {"m": m, "n": n, "f(m+n)": format_rational(f(m + n)),
                   "f(m)": format_rational(f(m)),
                   "f(n)": format_rational(f(n))}
    return _report(B, variant, 2, F, holds=result.holds, mode="exact",
                   order=N, witness=witness, note=note)


def _embedded_classical(F, B, variant, N) -> CheckReport:
    k = min(N, _MAX_PRIMORIAL_INDEX)
    M = primorial(k)
    f = eta(F, M)
    result = classify(f, variant, pairs=coprime_divisor_pairs(M))
    note = f"coprime divisor pairs of {M}"
    if not result.holds:
        m, n = result.witness
        witness = {"m": m, "n": n, "f(mn)": format_rational(f(m * n)),
                   "f(m)": format_rational(f(m)),
                   "f(n)": format_rational(f(n))}
        return _report(B, variant, 2, F, holds=False, mode="exact", order=N,
                       bound=M, witness=witness, note=note)

    # omega classes above k: eta takes the value i! a_i on every squarefree
    # m with omega(m) = i, and omega(mn) = omega(m) + omega(n) for coprime
    # m, n
    def g(i):
        return factorial(i) * F[i]

    for i in range(N + 1):
        for j in range(N - i + 1):
            if i + j <= k:
                continue
            rhs = g(i) * g(j) if variant == "multiplicative" else g(i) + g(j)
            if g(i + j) != rhs:
                witness = {"omega_m": i, "omega_n": j,
                           "f(mn)": format_rational(g(i + j)),
                           "f(m)": format_rational(g(i)),
                           "f(n)": format_rational(g(j))}
                return _report(B, variant, 2, F, holds=False, mode="exact",
                               order=N, bound=M, witness=witness,
                               note=note + f", omega classes to {N}")

    if N > k:
        note += f", omega classes to {N}"
    if result.vacuous:
        note += "; embedded function is identically zero"
    return _report(B, variant, 2, F, holds=True, mode="exact", order=N,
                   bound=M, note=note)


def _embedded(F, B, variant, mode="auto", order=None) -> CheckReport:
    N = _working_order(F, B, order)
    if mode == "auto":
        mode = "classical" if B.family == "factorial" else "binomial"
    if mode == "binomial":
        return _embedded_binomial(F, B, variant, N)
    elif mode == "classical":
        if B.family != "factorial":
            raise ValueError(
                "the classical embedding applies to the factorial family "
                "only")
        return _embedded_classical(F, B, variant, N)
    raise ValueError("mode must be 'auto', 'binomial', or 'classical'")


def check_embedded(F: TruncatedSeries, B: BinomialType, variant: str,
                   mode: str = "auto",
                   order: Optional[int] = None) -> CheckReport:
    """Test that the embedded function is multiplicative or additive.


    Parameters
    ----------
    F : `~lcz.series.TruncatedSeries`

    B : `~lcz.bintype.BinomialType`

    variant : str
        ``"multiplicative"`` or ``"additive"``.

    mode : str, optional
        ``"binomial"``: classify m -> a_m B(m) on 0..N with
        `~lcz.bintype.binomial_classify`.  ``"classical"`` (factorial
        family only): classify m -> omega(m)! a_omega(m) on the coprime
        divisor pairs of the product of the first min(N, 7) primes, and
        the remaining omega classes up to N directly.  ``"auto"`` picks
        classical for the factorial family.

    order : int, optional
        Working order, at least 2.

    """

    _check_variant(variant)
    _warn_hypothesis(F, "embedded check")
    return _embedded(F, B, variant, mode, order)


# conditions 3 and 4

def _lambek_sides(B, F, G, H, variant):
    lhs = odot(B, F, cauchy_mul(G, H))
    if variant == "multiplicative":
        rhs = cauchy_mul(odot(B, F, G), odot(B, F, H))
    else:
        rhs = add(cauchy_mul(odot(B, F, G), H), cauchy_mul(odot(B, F, H), G))
    return lhs, rhs


def _square_sides(B, F, G, variant):
    lhs = odot(B, F, cauchy_mul(G, G))
    FG = odot(B, F, G)
    if variant == "multiplicative":
        rhs = cauchy_mul(FG, FG)
    else:
        rhs = scale(2, cauchy_mul(FG, G))
    return lhs, rhs


def _draw_trial(trial_seed: int, N: int, count: int):
    rng = np.random.default_rng(trial_seed)
    return [random_series(rng, N) for _ in range(count)]


def _randomized(F, B, variant, condition, trials, seed, order):
    N = _working_order(F, B, order)
    trials = default_trials.get() if trials is None else trials
    if trials < 1:
        raise ValueError("trials must be at least 1")
    seed = seed_from_environment(seed)

    for trial in range(trials):
        trial_seed = derive_seed(seed, trial)
        if condition == 3:
            G, H = _draw_trial(trial_seed, N, 2)
            lhs, rhs = _lambek_sides(B, F, G, H, variant)
        else:
            G, = _draw_trial(trial_seed, N, 1)
            H = None
            lhs, rhs = _square_sides(B, F, G, variant)

        comparison = equals_to_order(lhs, rhs, N)
        if not comparison.equal:
            n = comparison.mismatch
            log.debug(f"{CONDITIONS[condition]}: trial {trial} fails at "
                      f"index {n}")
            witness = {"trial": trial, "trial_seed": trial_seed}
            witness.update(_mismatch_witness(n, lhs[n], rhs[n]))
            witness["G"] = G.to_dict()["coeffs"]
            if H is not None:
                witness["H"] = H.to_dict()["coeffs"]
            return _report(B, variant, condition, F, holds=False,
                           mode="randomized", trials=trials, seed=seed,
                           order=N, witness=witness)

    return _report(B, variant, condition, F, holds=True, mode="randomized",
                   trials=trials, seed=seed, order=N)


def check_lambek(F: TruncatedSeries, B: BinomialType, variant: str,
                 trials: Optional[int] = None, seed: Optional[int] = None,
                 order: Optional[int] = None) -> CheckReport:
    """Test distributivity of F (.)_B over products of random series.

    Multiplicative: F (.)_B (G H) = (F (.)_B G)(F (.)_B H).  Additive:
    F (.)_B (G H) = (F (.)_B G) H + (F (.)_B H) G.


    Parameters
    ----------
    F : `~lcz.series.TruncatedSeries`

    B : `~lcz.bintype.BinomialType`

    variant : str

    trials : int, optional
        Number of random (G, H) pairs; default
        `~lcz.defaults.default_trials`.

    seed : int, optional
        Base seed; default from `~lcz.defaults.seed_from_environment`.
        Trial t draws from ``numpy.random.default_rng(derive_seed(seed,
        t))``.

    order : int, optional
        Working order, at least 2.


    Returns
    -------
    report : `CheckReport`
        On failure the witness holds the first failing trial, its seed,
        G and H, and the first mismatching coefficient.

    """

    _check_variant(variant)
    _warn_hypothesis(F, "lambek check")
    return _randomized(F, B, variant, 3, trials, seed, order)


def check_carlitz_square(F: TruncatedSeries, B: BinomialType, variant: str,
                         trials: Optional[int] = None,
                         seed: Optional[int] = None,
                         order: Optional[int] = None) -> CheckReport:
    """As `check_lambek`, against squares G G of single random series.

    The additive form is F (.)_B (G G) = 2 (F (.)_B G) G.

    """

    _check_variant(variant)
    _warn_hypothesis(F, "carlitz-square check")
    return _randomized(F, B, variant, 4, trials, seed, order)


# condition 5

def _particular(F, B, variant, order=None) -> CheckReport:
    N = _working_order(F, B, order)
    lhs = TruncatedSeries.from_function(lambda n: B.t_number(n) * F[n], N)
    if variant == "multiplicative":
        rhs = cauchy_mul(F, F)
    else:
        reciprocal = TruncatedSeries.from_function(lambda n: 1 / B[n], N)
        rhs = scale(2, cauchy_mul(reciprocal, F))

    comparison = equals_to_order(lhs, rhs, N)
    if comparison.equal:
        return _report(B, variant, 5, F, holds=True, mode="exact", order=N)
    n = comparison.mismatch
    return _report(B, variant, 5, F, holds=False, mode="exact", order=N,
                   witness=_mismatch_witness(n, lhs[n], rhs[n]))


def check_particular(F: TruncatedSeries, B: BinomialType, variant: str,
                     order: Optional[int] = None) -> CheckReport:
    """Test sum t(n) a_n X^n against F^2 or 2 (sum X^n / B(n)) F.

    For the factorial family t(n) = 2^n, for the q-factorials t(n) is
    the Galois number G_n(q).

    Examples
    --------
    >>> from lcz.bintype import BinomialType, closed_form_series
    >>> from lcz.characterize import check_particular
    >>> B = BinomialType.from_family("q_factorial", 12, q=2)
    >>> F = closed_form_series(B, "multiplicative", 1)
    >>> check_particular(F, B, "multiplicative").holds
    True

    """

    _check_variant(variant)
    _warn_hypothesis(F, "particular check")
    return _particular(F, B, variant, order)


_CHECKS = {
    1: lambda F, B, v, trials, seed, order, mode: _closed_form(F, B, v, order),
    2: lambda F, B, v, trials, seed, order, mode: _embedded(
        F, B, v, mode, order),
    3: lambda F, B, v, trials, seed, order, mode: _randomized(
        F, B, v, 3, trials, seed, order),
    4: lambda F, B, v, trials, seed, order, mode: _randomized(
        F, B, v, 4, trials, seed, order),
    5: lambda F, B, v, trials, seed, order, mode: _particular(
        F, B, v, order),
}


def check_condition(condition: int, F: TruncatedSeries, B: BinomialType,
                    variant: str, trials: Optional[int] = None,
                    seed: Optional[int] = None, order: Optional[int] = None,
                    mode: str = "auto") -> CheckReport:
    """Run a single condition, given by number 1..5 or by name.

    Needs a working order of at least 2, as every series check does.

    """

    if isinstance(condition, str):
        names = {name: i for i, name in CONDITIONS.items()}
        if condition not in names:
            raise ValueError(f"unknown condition {condition!r}")
        condition = names[condition]
    if condition not in _CHECKS:
        raise ValueError("condition must be 1, 2, 3, 4, or 5")
    _check_variant(variant)
    _warn_hypothesis(F, f"{CONDITIONS[condition]} check")
    return _CHECKS[condition](F, B, variant, trials, seed, order, mode)


def run_suite(F: TruncatedSeries, B: BinomialType, variant: str,
              trials: Optional[int] = None, seed: Optional[int] = None,
              order: Optional[int] = None,
              mode: str = "auto") -> SuiteVerdict:
    """Run all five conditions on one series.

    Conditions 1, 2 and 5 are decided exactly at the working order;
    conditions 3 and 4 are sampled with ``trials`` seeded trials.


    Parameters
    ----------
    F : `~lcz.series.TruncatedSeries`

    B : `~lcz.bintype.BinomialType`

    variant : str
        ``"multiplicative"`` or ``"additive"``.

    trials, seed : int, optional
        See `check_lambek`.

    order : int, optional
        Working order, at most min(F.order, B.order).

    mode : str, optional
        Embedding mode of condition 2, see `check_embedded`.


    Returns
    -------
    verdict : `SuiteVerdict`


    Warns
    -----
    `~lcz.exceptions.HypothesisViolated`
        If a_1 = 0.


    Raises
    ------
    TruncationError
        If the working order is below 2; see `check_closed_form`.


    Examples
    --------
    >>> from lcz.series import TruncatedSeries
    >>> from lcz.bintype import BinomialType
    >>> from lcz.characterize import run_suite
    >>> B = BinomialType.from_family("factorial", 16)
    >>> verdict = run_suite(TruncatedSeries.exponential(16), B,
    ...                     "multiplicative", trials=5)
    >>> verdict.label, verdict.holds, verdict.consistent
    ('exponential-multiplicative', True, True)

    """

    _check_variant(variant)
    seed = seed_from_environment(seed)
    verdict = SuiteVerdict(suite_label(B, variant), variant,
                           hypothesis_violated=_violates_hypothesis(F),
                           theorem=theorem_number(B.family, variant))
    if verdict.hypothesis_violated:
        warn(f"{verdict.label}: a_1 = 0, the conditions need not agree",
             HypothesisViolated)

    for condition in CONDITIONS:
        verdict.reports.append(
            _CHECKS[condition](F, B, variant, trials, seed, order, mode))

    log.debug(f"{verdict.label}: "
             f"{sum(r.holds for r in verdict.reports)}/{len(CONDITIONS)} "
             f"conditions hold, "
             f"{'consistent' if verdict.consistent else 'INCONSISTENT'}.")
    return verdict


def _first_mismatch(f: ArithFun, g: ArithFun) -> Optional[int]:
    for n in range(1, f.bound + 1):
        if f(n) != g(n):
            return n
    return None


def _dirichlet_report(variant, condition, M, mismatch, lhs, rhs,
                      witness=None, mode="exact", **kwargs) -> CheckReport:
    if mismatch is None:
        witness = None
    else:
        witness = dict(witness or {})
        witness.update({"n": mismatch,
                        "lhs": format_rational(lhs(mismatch)),
                        "rhs": format_rational(rhs(mismatch))})
    return CheckReport(
        suite=f"dirichlet-{variant}", condition=condition,
        name=DIRICHLET_CONDITIONS[condition], variant=variant,
        holds=mismatch is None, mode=mode, witness=witness, bound=M,
        theorem=theorem_number("dirichlet", variant), **kwargs)


def _dirichlet_randomized(f, variant, condition, trials, seed):
    M = f.bound
    product = pointwise
    for trial in range(trials):
        trial_seed = derive_seed(seed, trial)
        rng = np.random.default_rng(trial_seed)
        g = random_function(rng, M)
        if condition == 2:
            h = random_function(rng, M)
            lhs = product("mul", f, dirichlet_conv(g, h))
            fg, fh = product("mul", f, g), product("mul", f, h)
            if variant == "multiplicative":
                rhs = dirichlet_conv(fg, fh)
            else:
                rhs = product("add", dirichlet_conv(fg, h),
                              dirichlet_conv(g, fh))
        else:
            lhs = product("mul", f, dirichlet_conv(g, g))
            fg = product("mul", f, g)
            if variant == "multiplicative":
                rhs = dirichlet_conv(fg, fg)
            else:
                rhs = scale_function(2, dirichlet_conv(fg, g))

        mismatch = _first_mismatch(lhs, rhs)
        if mismatch is not None:
            return _dirichlet_report(
                variant, condition, M, mismatch, lhs, rhs,
                mode="randomized", trials=trials, seed=seed,
                witness={"trial": trial, "trial_seed": trial_seed})

    return _dirichlet_report(variant, condition, M, None, None, None,
                             mode="randomized", trials=trials, seed=seed)


def check_dirichlet(f: ArithFun, variant: str, trials: Optional[int] = None,
                    seed: Optional[int] = None) -> SuiteVerdict:
    """Run the four arithmetical-function conditions on f.

    1. f is completely multiplicative (additive).
    2. f (g * h) = f g * f h, or f (g * h) = f g * h + g * f h, for
       random g, h.
    3. f (g * g) = f g * f g, or f (g * g) = 2 (f g * g), for random g.
    4. f tau = f * f, or f tau = 2 (f * zeta), exactly on 1..M.

    Here * is the Dirichlet convolution and juxtaposition the pointwise
    product.


    Parameters
    ----------
    f : `~lcz.arithfun.ArithFun`
        Bound M >= 16.

    variant : str

    trials, seed : int, optional
        See `check_lambek`.


    Returns
    -------
    verdict : `SuiteVerdict`


    Examples
    --------
    >>> from lcz.arithfun import builtin
    >>> from lcz.characterize import check_dirichlet
    >>> verdict = check_dirichlet(builtin("tau", 50), "multiplicative",
    ...                           trials=5)
    >>> verdict.holds, verdict.consistent, verdict[4].witness["n"]
    (False, True, 4)

    """

    _check_variant(variant)
    M = f.bound
    if M < 16:
        raise BoundError("Dirichlet suites need bound M >= 16")
    trials = default_trials.get() if trials is None else trials
    if trials < 1:
        raise ValueError("trials must be at least 1")
    seed = seed_from_environment(seed)

    verdict = SuiteVerdict(f"dirichlet-{variant}", variant,
                           theorem=theorem_number("dirichlet", variant))

    result = classify(f, "completely_" + variant)
    witness = None
    if not result.holds:
        m, n = result.witness
        witness = {"m": m, "n": n, "f(mn)": format_rational(f(m * n)),
                   "f(m)": format_rational(f(m)),
                   "f(n)": format_rational(f(n))}
    verdict.reports.append(CheckReport(
        suite=verdict.label, condition=1, name=DIRICHLET_CONDITIONS[1],
        variant=variant, holds=result.holds, mode="exact", witness=witness,
        bound=M, note="identically zero" if result.vacuous else "",
        theorem=verdict.theorem))

    verdict.reports.append(_dirichlet_randomized(f, variant, 2, trials, seed))
    verdict.reports.append(_dirichlet_randomized(f, variant, 3, trials, seed))

    tau = builtin("tau", M)
    lhs = pointwise("mul", f, tau)
    if variant == "multiplicative":
        rhs = dirichlet_conv(f, f)
    else:
        rhs = scale_function(2, dirichlet_conv(f, builtin("zeta", M)))
    verdict.reports.append(
        _dirichlet_report(variant, 4, M, _first_mismatch(lhs, rhs), lhs, rhs))

    log.debug(f"{verdict.label}: "
             f"{sum(r.holds for r in verdict.reports)}/4 conditions hold on "
             f"1..{M}, "
             f"{'consistent' if verdict.consistent else 'INCONSISTENT'}.")
    return verdict


def replay(report: CheckReport, F: TruncatedSeries,
           B: BinomialType) -> bool:
    """Recompute a randomized series failure from its recorded trial seed.


    Parameters
    ----------
    report : `CheckReport`
        A failing report of condition 3 or 4 from a series suite.

    F, B
        The series and binomial type the report was computed for.


    Returns
    -------
    confirmed : bool
        `True` if the regenerated trial reproduces the recorded series,
        and both sides differ exactly as recorded.

    """

    if report.holds or report.mode != "randomized" \
            or report.condition not in (3, 4) \
            or report.suite.startswith("dirichlet"):
        raise ValueError("only failing randomized series reports replay")

    w = report.witness
    N = report.order
    if report.condition == 3:
        G, H = _draw_trial(w["trial_seed"], N, 2)
        lhs, rhs = _lambek_sides(B, F, G, H, report.variant)
        if H.to_dict()["coeffs"] != w["H"]:
            return False
    else:
        G, = _draw_trial(w["trial_seed"], N, 1)
        lhs, rhs = _square_sides(B, F, G, report.variant)
    if G.to_dict()["coeffs"] != w["G"]:
        return False

    n = w["index"]
    return (lhs[n] != rhs[n]
            and format_rational(lhs[n]) == w["lhs"]
            and format_rational(rhs[n]) == w["rhs"]
            and equals_to_order(lhs, rhs, N).mismatch == n)
