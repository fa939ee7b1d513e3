"""Weighted coefficient neighborhoods and the inclusion property.

The alpha-neighborhood of f collects the negative-coefficient series g with

    sum_n delta_n |a_n - b_n| <= alpha,      delta_n = w_n / (1 - gamma).

If every ``(f(z) + eps z)/(1 + eps)`` with |eps| < alpha is in the class, the
whole neighborhood is.  The hypothesis is checked on a finite sample of eps
(rings times arguments), and the conclusion is checked on random samples of
the neighborhood with the grid verifier.  Both are sampled evidence, not
proofs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .diffop import phi
from .errors import DegenerateDenominator, DomainError, FormError, ParameterError
from .kernel import ClassParams, is_member, multipliers
from .series import SignForm, TruncatedSeries
from .verifier import GRID_TOL, GridSpec, grid_min_condition

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class NeighborhoodSpec:
    params: ClassParams
    alpha: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha >= 0):
            raise ParameterError("alpha must be finite and >= 0")


def _require_negative(*fs):
    for f in fs:
        if not f.is_negative:
            raise FormError("neighborhoods are defined for negative-coefficient series")


def deltas(p: ClassParams, order: int) -> np.ndarray:
    """delta_n for n = 2..order (array index n - 2)."""
    return multipliers(p, max(order, 2)).w[2:] / p.budget


def distance(p: ClassParams, f: TruncatedSeries, g: TruncatedSeries) -> float:
    _require_negative(f, g)
    order = max(f.order, g.order)
    a = f.with_order(order).magnitudes()
    b = g.with_order(order).magnitudes()
    return float(np.dot(deltas(p, order)[: order - 1], np.abs(a - b)))


def in_neighborhood(spec: NeighborhoodSpec, f: TruncatedSeries, g: TruncatedSeries) -> bool:
    return distance(spec.params, f, g) <= spec.alpha


def kernel_coefficient(p: ClassParams, n: int, s: complex, theta: float) -> complex:
    """Coefficient c_n of the convolution kernel h(z) = z - sum c_n z^n.

    s must lie on the unit circle; theta is the angle in the k e^{i theta}
    factor.
    """
    s = complex(s)
    if abs(abs(s) - 1.0) > UNIT_TOL:
        raise DomainError("s must lie on the unit circle")
    if n < 2:
        raise DomainError("n must be >= 2")
    den = p.gamma * (s - 1) - 2 * s
    if abs(den) < UNIT_TOL:
        raise DegenerateDenominator("gamma(s - 1) - 2s vanishes")
    u = multipliers(p, n).u_n(n)
    ke = p.k * complex(math.cos(theta), math.sin(theta))
    num = (n - u) * (1 + ke - s * ke) - s * (n + u) - u * p.gamma * (1 - s)
    return phi(p.op, n) * num / den


def epsilon_samples(alpha: float, rings: int = 8, args: int = 16) -> np.ndarray:
    """eps on rings |eps| = alpha*j/rings (j < rings) at uniform arguments."""
    if rings < 1 or args < 1:
        raise DomainError("need at least one ring and one argument")
    radii = alpha * np.arange(rings) / rings
    ang = np.exp(2j * np.pi * np.arange(args) / args)
    return (radii[:, None] * ang[None, :]).ravel()


def perturbed(f: TruncatedSeries, eps: complex) -> TruncatedSeries:
    """``(f(z) + eps z)/(1 + eps)`` with coefficients replaced by their moduli."""
    if abs(1 + eps) == 0:
        raise DomainError("1 + eps vanishes")
    return TruncatedSeries(tuple(f.magnitudes() / abs(1 + eps)), SignForm.NEGATIVE)


def hypothesis_check(spec: NeighborhoodSpec, f: TruncatedSeries,
                     epsilon_ring_samples: int = 16, ring_count: int = 8) -> bool:
    _require_negative(f)
    for eps in epsilon_samples(spec.alpha, ring_count, epsilon_ring_samples):
        if not is_member(spec.params, perturbed(f, eps)).member:
            return False
    return True


def sample_neighbor(spec: NeighborhoodSpec, f: TruncatedSeries,
                    rng: np.random.Generator) -> TruncatedSeries:
    """Random g with distance(f, g) <= alpha and b_n >= 0.

    The alpha budget (scaled by a uniform draw) is split across n = 2..N with
    Dirichlet weights and a random sign per index; negative results are
    clipped to zero, which only shrinks the distance.
    """
    p = spec.params
    N = f.order
    if N < 2 or spec.alpha == 0:
        return f
    share = rng.dirichlet(np.ones(N - 1)) * spec.alpha * rng.uniform()
    sign = rng.choice([-1.0, 1.0], size=N - 1)
    b = np.maximum(f.magnitudes() + sign * share / deltas(p, N), 0.0)
    return TruncatedSeries(tuple(b), SignForm.NEGATIVE)


@dataclass(frozen=True)
class InclusionReport:
    alpha: float
    trials: int
    passes: int
    min_grid_margin: float
    seed: int

    @property
    def passed(self) -> bool:
        return self.passes == self.trials

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "trials": self.trials,
            "passes": self.passes,
            "min_grid_margin": self.min_grid_margin,
            "seed": self.seed,
        }


def inclusion_property_test(spec: NeighborhoodSpec, f: TruncatedSeries, trials: int,
                            seed: int, grid: Optional[GridSpec] = None,
                            tolerance: float = GRID_TOL) -> InclusionReport:
    """Grid-verify ``trials`` random members of the neighborhood of f."""
    _require_negative(f)
    rng = np.random.default_rng(seed)
    passes = 0
    worst = math.inf
    for _ in range(trials):
        g = sample_neighbor(spec, f, rng)
        rep = grid_min_condition(spec.params, g, grid, tolerance)
        worst = min(worst, rep.margin)
        passes += rep.passed
    return InclusionReport(spec.alpha, trials, passes, worst, seed)
