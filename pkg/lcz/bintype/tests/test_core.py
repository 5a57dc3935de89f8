# Licensed under a 3-clause BSD style license - see LICENSE.rst

import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ..core import *
from ...arithfun import (
    ArithFun, BoundError, factorize, unitary_conv, unitary_conv_at
)
from ...exactnum import gaussian_binomial, galois_number, q_factorial
from ...exceptions import SchemaError
from ...series import TruncatedSeries, TruncationError, cauchy_mul, odot


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=3)


def series(order):
    return st.lists(rationals, min_size=order + 1,
                    max_size=order + 1).map(TruncatedSeries)


SQUAREFREE = [m for m in range(1, 2311)
              if all(e == 1 for _, e in factorize(m).prime_powers)]


FAMILY_TYPES = [
    ("factorial", None),
    ("ones", None),
    ("q_factorial", 2),
]


class TestBinomialType:
    def test_families(self):
        assert make_binomial_type("factorial", N=5).parameters == (
            1, 1, 2, 6, 24, 120)
        assert make_binomial_type("ones", N=4).parameters == (1,) * 5
        assert make_binomial_type("q_factorial", 2, 3).parameters == (
            1, 1, 3, 21)
        assert make_binomial_type("factorial").order == 16

    def test_custom(self):
        B = make_binomial_type("custom", [1, 1, 3, "5/2"], 3)
        assert B.family == "custom"
        assert B[3] == Fraction(5, 2)

    def test_invalid_tables(self):
        with pytest.raises(BinomialTypeError, match=r"B\(2\) = 0"):
            BinomialType([1, 1, 0, 4])
        with pytest.raises(BinomialTypeError, match=r"B\(0\)"):
            BinomialType([2, 1, 2])
        with pytest.raises(BinomialTypeError, match=r"B\(1\)"):
            BinomialType([1, 3, 2])
        with pytest.raises(BinomialTypeError):
            BinomialType([1])
        with pytest.raises(BinomialTypeError):
            BinomialType.from_family("catalan", 4)
        with pytest.raises(BinomialTypeError):
            BinomialType.from_family("factorial", 0)
        with pytest.raises(BinomialTypeError):
            BinomialType.from_family("q_factorial", 4)
        with pytest.raises(BinomialTypeError):
            BinomialType.from_family("custom", 4, table=[1, 1, 2])

    def test_invalid_q(self):
        # [2]_q = 1 + q vanishes at q = -1
        with pytest.raises(ValueError, match=r"\[2\]_q"):
            BinomialType.from_family("q_factorial", 3, q=-1)

    def test_degenerate_warning(self):
        # t(4) = 2 + 2 B(4) / B(3) + B(4) / B(2)^2 vanishes past 2 when
        # B(3) = -2 B(2)^2
        with pytest.warns(DegenerateTypeWarning, match="n = 4"):
            B = BinomialType([1, 1, 1, -2, 1])
        assert B.t_number(4) == 2

    def test_no_warning_for_builtin_families(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error", DegenerateTypeWarning)
            for family, q in FAMILY_TYPES:
                BinomialType.from_family(family, 12, q=q)

    def test_getitem(self):
        B = BinomialType.from_family("factorial", 4)
        assert B[4] == 24
        with pytest.raises(TruncationError):
            B[5]

    def test_ell_binomial(self):
        fac = BinomialType.from_family("factorial", 8)
        ones = BinomialType.from_family("ones", 8)
        q2 = BinomialType.from_family("q_factorial", 8, q=2)
        assert fac.ell_binomial(4, 2) == 6
        assert ell_binomial(ones, 7, 3) == 1
        assert ell_binomial(q2, 4, 2) == 35
        assert ell_binomial(q2, 4, 2) == gaussian_binomial(4, 2, 2)
        with pytest.raises(ValueError):
            fac.ell_binomial(3, 4)
        with pytest.raises(TruncationError):
            fac.ell_binomial(9, 1)

    @pytest.mark.parametrize("family, q", FAMILY_TYPES + [("q_factorial", 3)])
    def test_ell_binomial_symmetry_and_integrality(self, family, q):
        B = BinomialType.from_family(family, 10, q=q)
        for m in range(11):
            for k in range(m + 1):
                c = B.ell_binomial(m, k)
                assert c == B.ell_binomial(m, m - k)
                assert c.denominator == 1 and c > 0

    def test_t_number(self):
        fac = BinomialType.from_family("factorial", 6)
        assert t_number(fac, 5) == 32
        assert t_number(BinomialType.from_family("ones", 4), 4) == 5
        q2 = BinomialType.from_family("q_factorial", 6, q=2)
        assert t_number(q2, 3) == 16
        for n in range(7):
            assert q2.t_number(n) == galois_number(n, 2)
            assert fac.t_number(n) == 2**n

    def test_from_spec(self, tmp_path):
        assert BinomialType.from_spec("factorial", 5) == \
            BinomialType.from_family("factorial", 5)
        B = BinomialType.from_spec("q:1/2", 4)
        assert B.q == Fraction(1, 2)
        assert B[2] == Fraction(3, 2)

        path = tmp_path / "type.json"
        BinomialType.from_family("ones", 6).write(path)
        assert BinomialType.from_spec(str(path), 3).order == 6

        with pytest.raises(BinomialTypeError):
            BinomialType.from_spec("nonsense", 4)

    def test_dict(self):
        B = BinomialType.from_family("q_factorial", 16, q=2)
        assert B.to_dict() == {"family": "q_factorial", "N": 16, "q": "2"}
        assert BinomialType.from_dict(B.to_dict()) == B

        C = BinomialType([1, 1, "1/2", 7])
        assert C.to_dict()["B"] == ["1", "1", "1/2", "7"]
        assert BinomialType.from_dict(C.to_dict()) == C

        with pytest.raises(SchemaError):
            BinomialType.from_dict({"family": "factorial"})
        with pytest.raises(SchemaError):
            BinomialType.from_dict({"family": "fibonacci", "N": 3})
        with pytest.raises(SchemaError):
            BinomialType.from_dict({"family": "custom"})


class TestBinomialArithFun:
    def test_init(self):
        f = BinomialArithFun([1, "1/2", 3])
        assert f.bound == 2
        assert f(0) == 1
        with pytest.raises(BoundError):
            f(3)
        with pytest.raises(ValueError):
            BinomialArithFun([])

    def test_dict(self, tmp_path):
        f = BinomialArithFun.from_function(lambda m: Fraction(m, 3), 5)
        assert f.to_dict()["values"][:3] == ["0", "1/3", "2/3"]
        path = tmp_path / "f.json"
        f.write(path)
        assert BinomialArithFun.read(path) == f
        with pytest.raises(SchemaError):
            BinomialArithFun.from_dict({"bound": 2, "values": ["1"]})


class TestMConvolution:
    @given(series(6))
    def test_identity(self, F):
        B = BinomialType.from_family("q_factorial", 6, q=3)
        f = BinomialArithFun(F)
        delta = BinomialArithFun([1] + [0] * 6)
        assert m_convolution(B, f, delta) == f
        assert m_convolution(B, delta, f) == f

    def test_factorial_ones(self):
        B = BinomialType.from_family("factorial", 8)
        ones = BinomialArithFun([1] * 9)
        assert m_convolution(B, ones, ones).values == tuple(
            2**m for m in range(9))

    @given(series(6), series(6))
    def test_ones_is_cauchy(self, F, G):
        B = BinomialType.from_family("ones", 6)
        conv = m_convolution(B, BinomialArithFun(F), BinomialArithFun(G))
        assert conv.values == cauchy_mul(F, G).coeffs

    def test_errors(self):
        B = BinomialType.from_family("factorial", 4)
        with pytest.raises(BoundError):
            m_convolution(B, BinomialArithFun([1] * 3),
                          BinomialArithFun([1] * 4))
        with pytest.raises(TruncationError):
            m_convolution(B, BinomialArithFun([1] * 6),
                          BinomialArithFun([1] * 6))


class TestEtaM:
    def test_reciprocal_is_ones(self):
        for family, q in FAMILY_TYPES:
            B = BinomialType.from_family(family, 10, q=q)
            F = TruncatedSeries.from_function(lambda n: 1 / B[n], 10)
            assert eta_M(B, F).values == (1,) * 11
            assert eta_M_inv(B, BinomialArithFun([1] * 11)) == F

    def test_zero(self):
        B = BinomialType.from_family("factorial", 5)
        assert eta_M(B, TruncatedSeries.zero(5)).values == (0,) * 6
        assert eta_M_inv(B, BinomialArithFun([0] * 6)) == \
            TruncatedSeries.zero(5)

    def test_order_overflow(self):
        B = BinomialType.from_family("factorial", 3)
        with pytest.raises(TruncationError):
            eta_M(B, TruncatedSeries.exponential(5))

    @pytest.mark.parametrize("family, q", FAMILY_TYPES)
    @settings(max_examples=100, deadline=None)
    @given(F=series(10), G=series(10))
    def test_isomorphism(self, family, q, F, G):
        B = BinomialType.from_family(family, 10, q=q)
        assert eta_M(B, cauchy_mul(F, G)) == m_convolution(
            B, eta_M(B, F), eta_M(B, G))
        assert eta_M_inv(B, eta_M(B, F)) == F
        f = BinomialArithFun(G.coeffs)
        assert eta_M(B, eta_M_inv(B, f)) == f

    @pytest.mark.parametrize("family, q", FAMILY_TYPES)
    @settings(max_examples=100, deadline=None)
    @given(F=series(10), G=series(10))
    def test_odot_pullback(self, family, q, F, G):
        B = BinomialType.from_family(family, 10, q=q)
        lhs = eta_M(B, odot(B, F, G))
        f, g = eta_M(B, F), eta_M(B, G)
        assert lhs.values == tuple(f(m) * g(m) for m in range(11))


class TestEta:
    def test_exponential_is_zeta(self):
        f = eta(TruncatedSeries.exponential(5), 2310)
        assert all(f(m) == 1 for m in range(1, 2311))

    @given(series(3))
    def test_values(self, F):
        f = eta(F, 200)
        assert f(1) == F[0]
        assert f(12) == 2 * F[2]
        assert f(30) == 6 * F[3]

    def test_order_too_small(self):
        with pytest.raises(TruncationError, match="omega = 3"):
            eta(TruncatedSeries.exponential(2), 30)

    def test_lazy(self):
        f = eta(TruncatedSeries.exponential(6), 30030)
        assert f.lazy
        assert f(30030) == 1

    # squarefree m <= 2310 plus 200 random m <= 30030
    @settings(max_examples=100, deadline=None)
    @given(F=series(6), G=series(6),
           sampled=st.lists(st.integers(1, 30030), min_size=200,
                            max_size=200))
    def test_homomorphism(self, F, G, sampled):
        lhs = eta(cauchy_mul(F, G), 30030)
        f, g = eta(F, 30030), eta(G, 30030)
        for m in SQUAREFREE + sampled:
            assert lhs(m) == unitary_conv_at(f, g, m)

    @given(series(3), series(3))
    def test_homomorphism_full_table(self, F, G):
        lhs = ArithFun(eta(cauchy_mul(F, G), 209).values)
        rhs = unitary_conv(ArithFun(eta(F, 209).values),
                           ArithFun(eta(G, 209).values))
        assert lhs == rhs


class TestBinomialClassify:
    def test_geometric(self):
        f = BinomialArithFun.from_function(lambda m: Fraction(3, 2)**m, 10)
        result = binomial_classify(f, "binomial_multiplicative")
        assert result.holds and result.witness is None

    def test_linear(self):
        f = BinomialArithFun.from_function(lambda m: 7 * m, 10)
        assert binomial_classify(f, "binomial_additive").holds

    def test_factorial_parameters(self):
        B = BinomialType.from_family("factorial", 6)
        f = BinomialArithFun(B.parameters)
        result = binomial_classify(f, "binomial_multiplicative")
        assert not result.holds
        assert result.witness == (1, 1)

    def test_zero_is_vacuous(self):
        result = binomial_classify(BinomialArithFun([0] * 5),
                                   "binomial_multiplicative")
        assert result.holds and result.vacuous

    def test_errors(self):
        with pytest.raises(ValueError):
            binomial_classify(BinomialArithFun([1] * 5), "multiplicative")
        with pytest.raises(BoundError):
            binomial_classify(BinomialArithFun([1, 1]),
                              "binomial_additive")


class TestClosedFormSeries:
    def test_exponential(self):
        B = BinomialType.from_family("factorial", 16)
        assert closed_form_series(B, "multiplicative", 1) == \
            TruncatedSeries.exponential(16)

    def test_geometric(self):
        B = BinomialType.from_family("ones", 16)
        F = closed_form_series(B, "multiplicative", 3)
        assert F.coeffs == tuple(3**n for n in range(17))

    def test_q_additive(self):
        B = BinomialType.from_family("q_factorial", 8, q=2)
        F = closed_form_series(B, "additive", 1, order=6)
        assert F.order == 6
        assert F.coeffs == tuple(n / q_factorial(n, 2) for n in range(7))

    def test_factorial_additive(self):
        B = BinomialType.from_family("factorial", 10)
        F = closed_form_series(B, "additive", 1)
        assert F[0] == 0
        for n in range(1, 11):
            assert F[n] == Fraction(1, math.factorial(n - 1))

    def test_errors(self):
        B = BinomialType.from_family("factorial", 5)
        with pytest.raises(ValueError):
            closed_form_series(B, "both", 1)
        with pytest.raises(TruncationError):
            closed_form_series(B, "additive", 1, order=6)
