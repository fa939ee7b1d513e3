import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gftkit import DomainError, FormError, Polynomial, SignForm, TruncatedSeries
from gftkit.series import (
    derivative,
    evaluate,
    hadamard,
    load_series,
    scale_substitute,
    series_from_dict,
    series_to_dict,
)
from helpers import gen, neg, random_complex_series

unit_complex = st.builds(
    lambda r, a: r * np.exp(1j * a),
    st.floats(0, 0.99),
    st.floats(-np.pi, np.pi),
)


def power_sum(f, z):
    """Oracle: direct sum of powers, no Horner."""
    c = f.to_polynomial().coeffs
    return sum(c[j] * z**j for j in range(len(c)))


class TestTruncatedSeries:
    def test_order_and_padding(self):
        f = TruncatedSeries.from_terms({3: 0.2}, order=5)
        assert f.order == 5
        assert f.coeffs == (0j, 0.2 + 0j, 0j, 0j)

    def test_negative_form_rejects_bad_coefficients(self):
        with pytest.raises(FormError):
            neg(-0.1)
        with pytest.raises(FormError):
            TruncatedSeries((0.1j,), SignForm.NEGATIVE)

    def test_rejects_nonfinite(self):
        with pytest.raises(DomainError):
            gen(float("nan"))

    def test_with_order_roundtrip(self):
        f = gen(0.1, 0.2)
        assert f.with_order(6).with_order(3) == f


class TestEvaluate:
    def test_identity(self):
        assert evaluate(TruncatedSeries.identity(), 0.5) == 0.5

    def test_negative_form(self):
        assert evaluate(neg(0.5), 0.5) == pytest.approx(0.375, abs=1e-15)

    def test_near_boundary_against_exact_arithmetic(self):
        # z + z^2/2 at z = -0.99, evaluated in exact rationals
        z = Fraction(-99, 100)
        exact = z + z * z / 2
        assert exact == Fraction(-49995, 100000)
        got = evaluate(gen(0.5), -0.99)
        assert got.real == pytest.approx(-0.49995, rel=1e-15)
        assert got.imag == 0

    def test_outside_disk(self):
        with pytest.raises(DomainError):
            evaluate(gen(0.5), 1.0)
        with pytest.raises(DomainError):
            evaluate(gen(0.5), np.array([0.1, 0.3 + 0.99j]))

    def test_nan_point(self):
        with pytest.raises(DomainError):
            evaluate(gen(0.5), complex("nan"))

    def test_array_matches_scalar(self, rng):
        f = random_complex_series(rng, 20)
        z = 0.9 * np.exp(1j * np.linspace(0, 6, 11))
        arr = evaluate(f, z)
        for zi, v in zip(z, arr):
            assert v == evaluate(f, complex(zi))

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.complex_numbers(max_magnitude=1, allow_nan=False), max_size=30), unit_complex)
    def test_horner_matches_power_sum(self, coeffs, z):
        f = gen(*coeffs)
        assert abs(evaluate(f, z) - power_sum(f, z)) <= 1e-12 * (1 + len(coeffs))


class TestDerivative:
    def test_identity_gives_one(self):
        assert derivative(TruncatedSeries.identity()) == Polynomial([1])

    def test_negative_form(self):
        assert derivative(neg(0.5)) == Polynomial([1, -1])

    def test_cubic(self):
        assert derivative(gen(0, 1 / 3)) == Polynomial([1, 0, 1])

    def test_finite_difference(self, rng):
        h = 1e-5
        for _ in range(100):
            N = int(rng.integers(2, 65))
            f = random_complex_series(rng, N)
            z = 0.9 * np.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(-np.pi, np.pi))
            fd = (evaluate(f, z + h) - evaluate(f, z - h)) / (2 * h)
            assert abs(evaluate(derivative(f), z) - fd) <= 10 * h**2 * N**3


class TestHadamard:
    def test_geometric_series_is_identity(self, rng):
        f = random_complex_series(rng, 12)
        ones = gen(*([1.0] * 20))
        assert hadamard(f, ones) == f

    def test_geometric_series_keeps_negative_form(self):
        f = neg(0.5, 0.25)
        assert hadamard(f, gen(1.0, 1.0, 1.0)) == f

    def test_two_negative_forms(self):
        f = neg(0.5)
        out = hadamard(f, f)
        assert out.form is SignForm.GENERAL
        assert out.coeffs == (0.25 + 0j,)

    def test_order_is_minimum(self):
        assert hadamard(gen(1, 2, 3), gen(1)).order == 2

    def test_commutative(self, rng):
        for _ in range(100):
            f = random_complex_series(rng, int(rng.integers(1, 30)))
            g = random_complex_series(rng, int(rng.integers(1, 30)))
            assert hadamard(f, g) == hadamard(g, f)

    def test_associative(self, rng):
        for _ in range(100):
            f, g, h = (random_complex_series(rng, 25) for _ in range(3))
            lhs = np.array(hadamard(hadamard(f, g), h).coeffs)
            rhs = np.array(hadamard(f, hadamard(g, h)).coeffs)
            np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=0)


class TestScaleSubstitute:
    def test_zero(self):
        p = scale_substitute(gen(0.3, 0.2), 0)
        assert evaluate(p, 0.7) == 0

    def test_one(self):
        f = gen(0.3, 0.2)
        assert scale_substitute(f, 1) == f.to_polynomial()

    def test_sign_flip(self):
        assert scale_substitute(neg(0.5), -1) == Polynomial([0, -1, -0.5])

    def test_rejects_large_t(self):
        with pytest.raises(DomainError):
            scale_substitute(gen(0.1), 1.01)

    def test_matches_evaluation_at_tz(self, rng):
        for _ in range(200):
            f = random_complex_series(rng, int(rng.integers(2, 40)))
            t = np.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(-np.pi, np.pi))
            rmax = min(0.99 / abs(t), 0.99)
            z = rmax * rng.uniform() * np.exp(1j * rng.uniform(-np.pi, np.pi))
            a = evaluate(scale_substitute(f, t), z)
            b = evaluate(f, t * z)
            assert abs(a - b) <= 1e-12 * max(abs(b), 1e-300) + 1e-15


class TestJson:
    def test_roundtrip(self):
        f = TruncatedSeries.from_terms({2: 0.5, 7: 0.25j}, order=9)
        assert load_series(json.dumps(series_to_dict(f))) == f

    def test_unlisted_are_zero(self):
        f = series_from_dict({"form": "negative", "order": 4,
                              "coefficients": [{"n": 3, "re": 0.1, "im": 0.0}]})
        assert f == neg(0, 0.1, 0)

    @pytest.mark.parametrize("coeffs", [
        [{"n": 1, "re": 0.1, "im": 0}],
        [{"n": 5, "re": 0.1, "im": 0}],
        [{"n": 2, "re": 0.1, "im": 0}, {"n": 2, "re": 0.2, "im": 0}],
        [{"n": 2.0, "re": 0.1, "im": 0}],
        [{"n": 2, "re": "0.1", "im": 0}],
    ])
    def test_strict_rejections(self, coeffs):
        with pytest.raises(DomainError):
            series_from_dict({"form": "general", "order": 4, "coefficients": coeffs})

    def test_rejects_nonfinite_literal(self):
        text = '{"form": "general", "order": 3, "coefficients": [{"n": 2, "re": NaN, "im": 0}]}'
        with pytest.raises(DomainError):
            load_series(text)

    def test_rejects_unknown_form(self):
        with pytest.raises(DomainError):
            series_from_dict({"form": "positive", "order": 2, "coefficients": []})

    def test_negative_form_needs_nonnegative_reals(self):
        with pytest.raises(FormError):
            series_from_dict({"form": "negative", "order": 2,
                              "coefficients": [{"n": 2, "re": -0.1, "im": 0}]})
