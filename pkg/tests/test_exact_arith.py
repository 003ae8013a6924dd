import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgetrees.exact_arith import (
    TruncatedSeries,
    bernoulli,
    format_rational,
    parse_rational,
)


class TestRationals:
    def test_difference_of_tree_sums(self):
        # 1/180 - 2 * 1/640 reduces to 7/2880
        assert Fraction(1, 180) - 2 * Fraction(1, 640) == Fraction(7, 2880)

    def test_multiplicative_identity(self):
        for x in (Fraction(0), Fraction(-7, 3), Fraction(22, 7)):
            assert x * Fraction(1) == x

    def test_sum_reduces(self):
        assert Fraction(3, 24) + Fraction(1, 6) == Fraction(7, 24)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Fraction(1, 2) / Fraction(0)

    @given(st.fractions())
    def test_stored_reduced_with_positive_denominator(self, x):
        assert x.denominator > 0
        assert math.gcd(abs(x.numerator), x.denominator) == 1


class TestRationalText:
    @pytest.mark.parametrize(
        "value, text",
        [
            (Fraction(7, 2880), "7/2880"),
            (Fraction(-1, 30), "-1/30"),
            (Fraction(3), "3"),
            (Fraction(0), "0"),
            (Fraction(-4), "-4"),
        ],
    )
    def test_format(self, value, text):
        assert format_rational(value) == text
        assert parse_rational(text) == value

    @pytest.mark.parametrize(
        "text", ["2/4", "1/0", "1/-3", "-0", "+1", "01", " 1", "1 ", "3/1", "a/b", ""]
    )
    def test_parse_rejects_noncanonical(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    @given(st.fractions())
    def test_round_trip(self, x):
        assert parse_rational(format_rational(x)) == x


def series(coeffs, bound):
    return TruncatedSeries([Fraction(c) for c in coeffs], bound)


class TestSeries:
    def test_product(self):
        assert series([1, 1], 3) * series([1, -1], 3) == series([1, 0, -1], 3)

    def test_operations_preserve_order_bound(self):
        a, b = series([1, 2, 3], 5), series([1, 1], 5)
        for result in (a + b, a - b, a * b, a / b, a.log(), (b - b).exp()):
            assert result.order_bound == 5

    def test_geometric_reciprocal(self):
        assert series([1], 5) / series([1, -1], 5) == series([1, 1, 1, 1, 1], 5)

    def test_reciprocal_round_trip(self):
        s = series([2, 5, -1, 7], 6)
        assert s * s.reciprocal() == TruncatedSeries.one(6)

    def test_mismatched_bounds_rejected(self):
        with pytest.raises(ValueError, match="mismatched order bounds"):
            series([1], 3) + series([1], 4)
        with pytest.raises(ValueError, match="mismatched order bounds"):
            series([1], 3) * series([1], 4)

    def test_zero_constant_term_not_invertible(self):
        with pytest.raises(ValueError, match="not invertible"):
            series([0, 1], 4).reciprocal()

    def test_scalar_operations(self):
        s = series([1, 2, 3], 3)
        assert 2 * s == series([2, 4, 6], 3)
        assert s * Fraction(1, 2) == series([Fraction(1, 2), 1, Fraction(3, 2)], 3)
        assert s / 2 == series([Fraction(1, 2), 1, Fraction(3, 2)], 3)

    def test_coefficient_access_bounded(self):
        s = series([1, 2], 2)
        assert s.coefficient(1) == 2
        with pytest.raises(ValueError):
            s.coefficient(2)

    def test_log_of_one_is_zero(self):
        assert TruncatedSeries.one(6).log() == TruncatedSeries.zero(6)

    def test_exp_of_zero_is_one(self):
        assert TruncatedSeries.zero(6).exp() == TruncatedSeries.one(6)

    def test_exp_of_t_has_factorial_coefficients(self):
        e = series([0, 1], 8).exp()
        for m in range(8):
            assert e.coefficient(m) == Fraction(1, math.factorial(m))

    def test_log_requires_unit_constant_term(self):
        with pytest.raises(ValueError, match="constant term 1"):
            series([2, 1], 3).log()

    def test_exp_requires_zero_constant_term(self):
        with pytest.raises(ValueError, match="constant term 0"):
            series([1, 1], 3).exp()

    def test_log_is_a_homomorphism(self):
        s = series([1, 1, 1], 8)
        assert (s * s).log() == 2 * s.log()

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.fractions(min_value=-3, max_value=3, max_denominator=6),
            min_size=0,
            max_size=11,
        )
    )
    def test_exp_log_round_trip(self, tail):
        s = TruncatedSeries([Fraction(1)] + tail, 12)
        assert s.log().exp() == s

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.fractions(min_value=-3, max_value=3, max_denominator=6),
            min_size=0,
            max_size=11,
        )
    )
    def test_log_exp_round_trip(self, tail):
        s = TruncatedSeries([Fraction(0)] + tail, 12)
        assert s.exp().log() == s


class TestBernoulli:
    def test_small_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)

    def test_index_four(self):
        assert bernoulli(4) == Fraction(-1, 30)

    def test_odd_indices_vanish(self):
        for m in range(3, 20, 2):
            assert bernoulli(m) == 0

    def test_defining_recurrence(self):
        for m in range(1, 21):
            total = sum(math.comb(m + 1, k) * bernoulli(k) for k in range(m + 1))
            assert total == 0, m

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            bernoulli(-1)

    def test_against_series_expansion(self):
        # Independent route: B_m = m! * [t^m] t/(exp(t) - 1), here computed by
        # inverting the series (exp(t) - 1)/t with coefficients 1/(m+1)!.
        bound = 17
        denom = TruncatedSeries(
            [Fraction(1, math.factorial(m + 1)) for m in range(bound)], bound
        )
        expansion = denom.reciprocal()
        for m in range(bound):
            assert bernoulli(m) == math.factorial(m) * expansion.coefficient(m)
