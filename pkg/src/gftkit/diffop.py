"""The linear multiplier differential operator D^eta_{lambda,mu}.

One application of the operator is

    D f = lambda*mu * z^2 f'' + (lambda - mu) * z f' + (1 - lambda + mu) * f,

and D^eta is its eta-fold iterate.  On a monomial z^n it acts by the
multiplier ``[1 + (lambda*mu*n + lambda - mu)(n - 1)]``, so D^eta is a
diagonal map on coefficients.  Both routes are implemented: the closed form
is the fast path, the recursive form is kept as an independent check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, ParameterError
from .series import SignForm, TruncatedSeries

# Above this exponent use floating pow instead of repeated multiplication.
_REPEATED_MULT_MAX_ETA = 16


@dataclass(frozen=True)
class OperatorParams:
    lam: float = 1.0
    mu: float = 0.0
    eta: int = 0

    def __post_init__(self):
        lam, mu = float(self.lam), float(self.mu)
        if not (math.isfinite(lam) and math.isfinite(mu)):
            raise ParameterError("lambda and mu must be finite")
        if isinstance(self.eta, bool) or int(self.eta) != self.eta or self.eta < 0:
            raise ParameterError("eta must be a nonnegative integer")
        if not lam >= mu >= 0.0:
            raise ParameterError("need lambda >= mu >= 0")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "eta", int(self.eta))


def _power(base: float, eta: int) -> float:
    if eta > _REPEATED_MULT_MAX_ETA:
        return base**eta
    out = 1.0
    for _ in range(eta):
        out *= base
    return out


def phi_base(p: OperatorParams, n: int) -> float:
    """Single-step multiplier ``1 + (lambda*mu*n + lambda - mu)(n - 1)``."""
    return 1.0 + (p.lam * p.mu * n + p.lam - p.mu) * (n - 1)


def phi(p: OperatorParams, n: int) -> float:
    """Coefficient multiplier of D^eta on z^n."""
    if n < 1:
        raise DomainError("phi is defined for n >= 1")
    base = phi_base(p, n)
    if base < 0:
        raise DomainError(f"negative operator multiplier base at n={n}")
    return _power(base, p.eta)


@lru_cache(maxsize=256)
def phi_table(p: OperatorParams, order: int) -> np.ndarray:
    """``phi(p, n)`` for n = 0..order (entry 0 is unused and set to 0).  Read-only."""
    out = np.zeros(order + 1)
    for n in range(1, order + 1):
        out[n] = phi(p, n)
    out.setflags(write=False)
    return out


def apply_closed(p: OperatorParams, f: TruncatedSeries) -> TruncatedSeries:
    """D^eta f via the multiplier: a_n -> phi(n) a_n.  Keeps f's sign form."""
    mult = phi_table(p, f.order)[2:]
    return TruncatedSeries(tuple(m * a for m, a in zip(mult, f.coeffs)), f.form)


def _one_step(p: OperatorParams, c: np.ndarray) -> np.ndarray:
    """lambda*mu z^2 f'' + (lambda - mu) z f' + (1 - lambda + mu) f on coefficients."""
    n = np.arange(len(c))
    d1 = n[1:] * c[1:]  # coefficients of f'
    d2 = n[1:-1] * d1[1:]  # coefficients of f''
    z_d1 = np.zeros_like(c)
    z_d1[1:] = d1
    z2_d2 = np.zeros_like(c)
    z2_d2[2:] = d2
    return p.lam * p.mu * z2_d2 + (p.lam - p.mu) * z_d1 + (1.0 - p.lam + p.mu) * c


def apply_recursive(p: OperatorParams, f: TruncatedSeries) -> TruncatedSeries:
    """D^eta f by applying the differential one-step rule eta times."""
    c = np.array(f.to_polynomial().coeffs)
    for _ in range(p.eta):
        c = _one_step(p, c)
    # the z coefficient is 1 up to rounding; normalization keeps it implicit
    tail = c[2:]
    if f.is_negative:
        return TruncatedSeries(tuple(np.maximum(-tail.real, 0.0)), SignForm.NEGATIVE)
    return TruncatedSeries(tuple(tail), SignForm.GENERAL)
