"""Class parameters, Theorem-1 weights and coefficient-based membership.

A negative-coefficient series ``f = z - sum a_n z^n`` belongs to the class
exactly when

    sum_n  Phi^eta(lambda, mu, n) * |n(k+1) - u_n(k+gamma)| * a_n  <=  1 - gamma,

with ``u_n = 1 + t + ... + t^(n-1)``.  The factor in front of ``a_n`` is the
weight ``w_n``.

For real t in [-1, 1) the test is both necessary and sufficient.  For
non-real t, ``|n(k+1) - u_n(k+gamma)|`` can be smaller than the bound the
sufficiency argument needs, so ``is_member`` then only evaluates the
inequality and does not certify the analytic condition; use the verifier.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .diffop import OperatorParams, phi_table
from .errors import DegenerateWeight, DomainError, FormError, ParameterError
from .series import DEFAULT_ORDER, SignForm, TruncatedSeries

MEMBERSHIP_TOL = 1e-12


@dataclass(frozen=True)
class ClassParams:
    op: OperatorParams = OperatorParams()
    k: float = 0.0
    gamma: float = 0.0
    t: complex = -1.0 + 0j

    def __post_init__(self):
        k, gamma, t = float(self.k), float(self.gamma), complex(self.t)
        if not (math.isfinite(k) and k >= 0):
            raise ParameterError("k must be finite and >= 0")
        if not (0.0 <= gamma < 1.0):
            raise ParameterError("gamma must lie in [0, 1)")
        if not (math.isfinite(t.real) and math.isfinite(t.imag)) or abs(t) > 1.0:
            raise ParameterError("t must satisfy |t| <= 1")
        if t == 1:
            raise ParameterError("t = 1 is excluded")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "t", t)

    @classmethod
    def make(cls, lam=1.0, mu=0.0, eta=0, k=0.0, gamma=0.0, t=-1.0):
        return cls(OperatorParams(lam, mu, eta), k, gamma, t)

    @property
    def budget(self) -> float:
        return 1.0 - self.gamma

    def to_dict(self) -> dict:
        return {
            "lambda": self.op.lam,
            "mu": self.op.mu,
            "eta": self.op.eta,
            "k": self.k,
            "gamma": self.gamma,
            "t_re": self.t.real,
            "t_im": self.t.imag,
        }


@dataclass(frozen=True, eq=False)
class Multipliers:
    """Per-index data up to order N.

    Arrays are indexed by n directly: ``u[n]`` for n = 1..N and ``w[n]`` for
    n = 2..N (unused leading slots are zero).
    """

    order: int
    u: np.ndarray
    phi: np.ndarray
    w: np.ndarray

    def u_n(self, n: int) -> complex:
        return complex(self.u[n])

    def w_n(self, n: int) -> float:
        return float(self.w[n])


@lru_cache(maxsize=256)
def _multipliers(p: ClassParams, order: int) -> Multipliers:
    u = np.zeros(order + 1, dtype=complex)
    u[1] = 1.0
    tp = 1.0 + 0j
    for n in range(2, order + 1):
        tp *= p.t
        u[n] = u[n - 1] + tp
    ph = phi_table(p.op, order)
    n = np.arange(order + 1)
    w = ph * np.abs(n * (p.k + 1.0) - u * (p.k + p.gamma))
    w[:2] = 0.0
    for arr in (u, ph, w):
        arr.setflags(write=False)
    return Multipliers(order, u, ph, w)


def multipliers(p: ClassParams, order: int = DEFAULT_ORDER) -> Multipliers:
    if order < 2:
        raise DomainError("multipliers need order >= 2")
    return _multipliers(p, int(order))


def _weights_for(p: ClassParams, f: TruncatedSeries) -> np.ndarray:
    if f.order < 2:
        return np.zeros(0)
    return multipliers(p, f.order).w[2:]


def _require_negative(f: TruncatedSeries):
    if not f.is_negative:
        raise FormError("coefficient test applies to negative-coefficient series only")


def coefficient_sum(p: ClassParams, f: TruncatedSeries) -> float:
    """``sum w_n a_n`` over the stored coefficients of a negative-form f."""
    _require_negative(f)
    return float(np.dot(_weights_for(p, f), f.magnitudes()))


def modulus_sum(p: ClassParams, f: TruncatedSeries) -> float:
    """``sum w_n |a_n|`` for a series in either form."""
    return float(np.dot(_weights_for(p, f), f.magnitudes()))


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    sum: float
    budget: float
    slack: float

    def to_dict(self) -> dict:
        return {
            "member": self.member,
            "sum": self.sum,
            "budget": self.budget,
            "slack": self.slack,
        }


def is_member(p: ClassParams, f: TruncatedSeries, tol: float = MEMBERSHIP_TOL) -> MembershipVerdict:
    s = coefficient_sum(p, f)
    return MembershipVerdict(s <= p.budget + tol, s, p.budget, p.budget - s)


def _positive_weight(p: ClassParams, n: int) -> float:
    if n < 2:
        raise DomainError("n must be >= 2")
    w = multipliers(p, max(n, 2)).w_n(n)
    if w <= 0.0:
        # cannot happen for valid params: w_n >= phi * n * (1 - gamma)
        raise DegenerateWeight(f"weight w_{n} vanishes; bound is vacuous")
    return w


def coefficient_bound(p: ClassParams, n: int) -> float:
    """Largest admissible a_n for a member (all other coefficients zero)."""
    return p.budget / _positive_weight(p, n)


def extremal_function(p: ClassParams, n: int, order: int | None = None) -> TruncatedSeries:
    """``z - [(1-gamma)/w_n] z^n``, the boundary member with a single term."""
    a = coefficient_bound(p, n)
    return TruncatedSeries.from_terms({n: a}, order=order or n, form=SignForm.NEGATIVE)


def random_member(
    p: ClassParams,
    rng: np.random.Generator,
    order: int = DEFAULT_ORDER,
    max_support: int = 10,
    terms: int = 3,
    rho: float | None = None,
) -> TruncatedSeries:
    """Random sparse member with coefficient_sum == rho * (1 - gamma).

    Support indices are drawn from 2..max_support; rho defaults to a uniform
    draw from [0, 1].
    """
    hi = min(max_support, order)
    if hi < 2:
        return TruncatedSeries.identity(order)
    count = min(terms, hi - 1)
    idx = rng.choice(np.arange(2, hi + 1), size=count, replace=False)
    raw = rng.exponential(size=count)
    w = multipliers(p, order).w
    total = float(np.dot(w[idx], raw))
    rho = rng.uniform() if rho is None else rho
    a = np.zeros(order - 1)
    a[idx - 2] = raw * (rho * p.budget / total)
    return TruncatedSeries(tuple(a), SignForm.NEGATIVE)
