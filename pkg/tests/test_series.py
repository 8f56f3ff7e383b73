"""Truncated series arithmetic and generating-function coefficient checks."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellpart.series import (
    IntegralityError,
    TruncatedSeries,
    bell_egf,
    egf_coefficients,
    egf_stirling_d_column,
)
from bellpart.triangles import Family, bell_a, bell_b, bell_d, stirling_d

F = Fraction


class TestArithmetic:
    def test_add_identity(self):
        f = TruncatedSeries.exp_x(4)
        assert f + TruncatedSeries.zero(4) == f

    def test_exp_minus_x(self):
        f = TruncatedSeries.exp_x(2) - TruncatedSeries.x(2)
        assert f.coeffs == (F(1), F(0), F(1, 2))

    def test_add_negation_is_zero(self):
        f = TruncatedSeries.exp_x(5)
        assert f + (-f) == TruncatedSeries.zero(5)

    def test_mul_identity(self):
        f = TruncatedSeries.exp_x(6)
        assert f * TruncatedSeries.one(6) == f

    def test_exp_times_exp_is_exp2x(self):
        ex = TruncatedSeries.exp_x(3)
        assert (ex * ex).coeffs == (F(1), F(2), F(2), F(4, 3))
        assert ex * ex == ex.scale_arg(2)

    def test_x_squared(self):
        x = TruncatedSeries.x(3)
        assert (x * x).coeffs == (F(0), F(0), F(1), F(0))

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            TruncatedSeries.x(3) + TruncatedSeries.x(4)
        with pytest.raises(ValueError):
            TruncatedSeries.x(3) * TruncatedSeries.x(4)

    def test_scale_arg(self):
        ex = TruncatedSeries.exp_x(2)
        assert ex.scale_arg(1) == ex
        assert ex.scale_arg(2).coeffs == (F(1), F(2), F(2))
        assert TruncatedSeries.x(3).scale_arg(2).coeffs == (F(0), F(2), F(0), F(0))


class TestExp:
    def test_exp_zero(self):
        assert TruncatedSeries.zero(4).exp() == TruncatedSeries.one(4)

    def test_exp_x(self):
        got = TruncatedSeries.x(3).exp()
        assert got.coeffs == (F(1), F(1), F(1, 2), F(1, 6))

    def test_exp_requires_zero_constant(self):
        with pytest.raises(ValueError):
            TruncatedSeries.one(3).exp()

    def test_classical_bell_coefficient(self):
        f = TruncatedSeries.exp_x(6) - TruncatedSeries.one(6)
        g = f.exp()
        assert g.coeffs[6] == F(203, 720)

    @given(
        st.lists(
            st.fractions(
                max_denominator=6, min_value=F(-3), max_value=F(3)
            ),
            min_size=0,
            max_size=5,
        )
    )
    @settings(max_examples=50)
    def test_exp_homomorphism(self, tail):
        order = 6
        f = TruncatedSeries.from_coeffs([0] + tail, order)
        product = f.exp() * (-f).exp()
        assert product == TruncatedSeries.one(order)


class TestBellEgfs:
    def test_classical(self):
        assert egf_coefficients(Family.CLASSICAL, 0) == [1]
        assert egf_coefficients(Family.CLASSICAL, 7) == [bell_a(n) for n in range(8)]

    def test_type_b(self):
        values = egf_coefficients(Family.TYPE_B, 8)
        assert values == [bell_b(n) for n in range(9)]
        assert values[-1] == 219920

    def test_type_d(self):
        assert egf_coefficients(Family.TYPE_D, 5) == [1, 1, 4, 15, 72, 403]

    def test_match_exact_to_25(self):
        for family, fn in (
            (Family.CLASSICAL, bell_a),
            (Family.TYPE_B, bell_b),
            (Family.TYPE_D, bell_d),
        ):
            assert egf_coefficients(family, 25) == [fn(n) for n in range(26)]

    def test_d_decomposition(self):
        # D series equals B series minus x * exp((e^(2x)-1)/2), coefficientwise
        order = 12
        ex = TruncatedSeries.exp_x(order)
        one = TruncatedSeries.one(order)
        x = TruncatedSeries.x(order)
        half = (ex.scale_arg(2) - one).scale(F(1, 2)).exp()
        d = bell_egf(Family.TYPE_D, order)
        b = bell_egf(Family.TYPE_B, order)
        assert d == b - x * half


class TestStirlingDColumns:
    def test_examples(self):
        assert egf_stirling_d_column(2, 5)[5] == 190
        assert egf_stirling_d_column(0, 1)[1] == 0
        assert egf_stirling_d_column(3, 7)[7] == 7371

    def test_matches_triangle(self):
        for k in range(6):
            assert egf_stirling_d_column(k, 12) == [
                stirling_d(n, k) for n in range(13)
            ]

    def test_column_sums(self):
        order = 10
        cols = [egf_stirling_d_column(k, order) for k in range(order + 1)]
        for n in range(order + 1):
            assert sum(cols[k][n] for k in range(n + 1)) == bell_d(n)

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            egf_stirling_d_column(-1, 3)


def test_integrality_error_signals_bug():
    bad = TruncatedSeries.from_coeffs([0, F(1, 3)], 1)
    from bellpart.series import _integer_egf_values

    with pytest.raises(IntegralityError):
        _integer_egf_values(bad, "bad")
