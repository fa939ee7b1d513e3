import numpy as np
import pytest

from gftkit import (
    ClassParams,
    DomainError,
    FormError,
    NeighborhoodSpec,
    ParameterError,
    distance,
    extremal_function,
    hypothesis_check,
    in_neighborhood,
    inclusion_property_test,
    is_member,
    kernel_coefficient,
    multipliers,
    random_member,
)
from gftkit.neighborhood import epsilon_samples, sample_neighbor
from gftkit.verifier import GridSpec
from helpers import REFERENCE_SETS, SET_A, gen, neg

FAST_GRID = GridSpec.default(r_count=24, theta_count=180)


class TestDistance:
    def test_self(self, rng):
        f = random_member(SET_A, rng)
        assert distance(SET_A, f, f) == 0

    def test_example(self):
        assert distance(SET_A, neg(0.5), neg()) == 1.0

    def test_general_rejected(self):
        with pytest.raises(FormError):
            distance(SET_A, gen(0.1), neg(0.1))

    def test_metric_axioms(self, rng):
        for p in REFERENCE_SETS.values():
            for _ in range(100):
                f, g, h = (random_member(p, rng, order=12, max_support=12, terms=4)
                           for _ in range(3))
                assert distance(p, f, g) == distance(p, g, f)
                assert distance(p, f, h) <= distance(p, f, g) + distance(p, g, h) + 1e-12
                assert (distance(p, f, g) == 0) == (f == g)

    def test_unequal_orders(self):
        assert distance(SET_A, neg(0.5), neg(0.5, 0, 0.25)) == pytest.approx(1.0)


class TestInNeighborhood:
    def test_alpha_zero(self):
        spec = NeighborhoodSpec(SET_A, 0.0)
        assert in_neighborhood(spec, neg(0.2), neg(0.2))
        assert not in_neighborhood(spec, neg(0.2), neg(0.2000001))

    def test_examples(self):
        assert in_neighborhood(NeighborhoodSpec(SET_A, 1.0), neg(0.5), neg())
        assert not in_neighborhood(NeighborhoodSpec(SET_A, 0.5), neg(0.5), neg())

    def test_monotone_in_alpha(self, rng):
        for _ in range(50):
            f, g = random_member(SET_A, rng), random_member(SET_A, rng)
            a1, a2 = sorted(rng.uniform(0, 2, 2))
            if in_neighborhood(NeighborhoodSpec(SET_A, a1), f, g):
                assert in_neighborhood(NeighborhoodSpec(SET_A, a2), f, g)

    def test_negative_alpha(self):
        with pytest.raises(ParameterError):
            NeighborhoodSpec(SET_A, -0.1)


class TestKernelCoefficient:
    @pytest.mark.parametrize("k", [0.0, 0.5, 1.0, 3.0])
    def test_hand_example(self, k):
        p = ClassParams.make(eta=0, k=k, gamma=0, t=0)
        c = kernel_coefficient(p, 2, -1, 0.0)
        assert c == pytest.approx(2 + k, abs=1e-14)
        assert abs(c) == pytest.approx(multipliers(p, 2).w_n(2), abs=1e-14)

    def test_s_one_finite(self):
        c = kernel_coefficient(REFERENCE_SETS["B"], 3, 1, 0.0)
        assert np.isfinite(c)

    def test_s_off_circle(self):
        with pytest.raises(DomainError):
            kernel_coefficient(SET_A, 2, 0.5, 0.0)

    def test_bound(self, rng):
        for p in REFERENCE_SETS.values():
            m = multipliers(p, 12)
            for n in range(2, 13):
                bound = m.w_n(n) / p.budget
                s = np.exp(1j * rng.uniform(-np.pi, np.pi, 1000))
                th = rng.uniform(-np.pi, np.pi, 1000)
                worst = max(abs(kernel_coefficient(p, n, si, ti)) for si, ti in zip(s, th))
                assert worst <= bound * (1 + 1e-12)


class TestHypothesisCheck:
    def test_epsilon_rings(self):
        eps = epsilon_samples(0.5, 4, 8)
        assert eps.size == 32
        np.testing.assert_allclose(sorted(set(np.round(abs(eps), 12))), [0, 0.125, 0.25, 0.375])

    def test_zero_alpha_is_membership(self, rng):
        for _ in range(20):
            f = random_member(SET_A, rng).scaled(rng.uniform(0.5, 1.5))
            assert hypothesis_check(NeighborhoodSpec(SET_A, 0.0), f) == is_member(SET_A, f).member

    def test_identity(self):
        assert hypothesis_check(NeighborhoodSpec(SET_A, 0.99), neg(0, 0))

    @pytest.mark.parametrize("rho", [0.25, 0.5, 0.9])
    def test_pass_radius(self, rho):
        # sum/|1+eps| <= 1-gamma fails first at eps = -alpha(1 - 1/rings)
        rings = 8
        f = extremal_function(SET_A, 2).scaled(rho)
        radius = (1 - rho) / (1 - 1 / rings)
        assert hypothesis_check(NeighborhoodSpec(SET_A, radius * (1 - 1e-9)), f, 16, rings)
        assert not hypothesis_check(NeighborhoodSpec(SET_A, radius * (1 + 1e-6)), f, 16, rings)

    def test_boundary_extremal_only_at_zero(self):
        f = extremal_function(SET_A, 2)
        assert hypothesis_check(NeighborhoodSpec(SET_A, 0.0), f)
        assert not hypothesis_check(NeighborhoodSpec(SET_A, 0.01), f)


class TestInclusion:
    def test_samples_stay_in_neighborhood(self, rng):
        for p in REFERENCE_SETS.values():
            f = extremal_function(p, 3, order=10).scaled(0.5)
            spec = NeighborhoodSpec(p, 0.3)
            for _ in range(50):
                g = sample_neighbor(spec, f, rng)
                assert in_neighborhood(spec, f, g)
                assert g.is_negative

    def test_alpha_zero(self):
        f = extremal_function(SET_A, 2).scaled(0.5)
        rep = inclusion_property_test(NeighborhoodSpec(SET_A, 0.0), f, 3, seed=1, grid=FAST_GRID)
        assert rep.passes == 3

    def test_reference_set_a(self):
        f = extremal_function(SET_A, 2, order=10).scaled(0.5)
        rep = inclusion_property_test(NeighborhoodSpec(SET_A, 0.25), f, 20, seed=3, grid=FAST_GRID)
        assert rep.passed
        assert list(rep.to_dict()) == ["alpha", "trials", "passes", "min_grid_margin", "seed"]

    def test_deterministic_given_seed(self):
        f = extremal_function(SET_A, 2, order=6).scaled(0.5)
        spec = NeighborhoodSpec(SET_A, 0.25)
        a = inclusion_property_test(spec, f, 5, seed=11, grid=FAST_GRID)
        b = inclusion_property_test(spec, f, 5, seed=11, grid=FAST_GRID)
        assert a == b
