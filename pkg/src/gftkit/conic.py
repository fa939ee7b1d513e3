"""Conic region ``u > k*sqrt((u-1)^2 + v^2) + gamma`` and two half-plane lemmas."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import DomainError, ParameterError


class ConicType(str, Enum):
    HALF_PLANE = "half-plane"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class ConicSpec:
    k: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.k) and self.k >= 0):
            raise ParameterError("k must be finite and >= 0")
        if not 0.0 <= self.gamma < 1.0:
            raise ParameterError("gamma must lie in [0, 1)")


def contains(c: ConicSpec, w: complex) -> bool:
    w = complex(w)
    return w.real > c.k * math.hypot(w.real - 1.0, w.imag) + c.gamma


def classify(c: ConicSpec) -> ConicType:
    if c.k == 0:
        return ConicType.HALF_PLANE
    if c.k < 1:
        return ConicType.HYPERBOLIC
    if c.k == 1:
        return ConicType.PARABOLIC
    return ConicType.ELLIPTIC


class LemmaCheck(NamedTuple):
    lhs: bool
    rhs: bool


def lemma1_check(w: complex, alpha: float) -> LemmaCheck:
    """``Re w >= alpha``  vs  ``|w - (1+alpha)| <= |w + (1-alpha)|``."""
    w = complex(w)
    return LemmaCheck(w.real >= alpha, abs(w - (1 + alpha)) <= abs(w + (1 - alpha)))


def lemma2_theta_grid(theta_samples: int) -> np.ndarray:
    j = np.arange(1, theta_samples + 1)
    return -np.pi + 2 * np.pi * j / theta_samples


def lemma2_check(w: complex, alpha: float, gamma: float, theta_samples: int = 64) -> LemmaCheck:
    """``Re w > alpha|w-1| + gamma``  vs  ``Re{w(1+a e^{it}) - a e^{it}} > gamma`` for all t.

    The quantifier over the angle is decided by the envelope
    ``min_t Re{alpha (w-1) e^{it}} = -|alpha| |w-1|``; a uniform angle grid is
    evaluated as well and may only tighten the minimum.
    """
    if theta_samples < 8:
        raise DomainError("theta_samples must be >= 8")
    w = complex(w)
    e = np.exp(1j * lemma2_theta_grid(theta_samples))
    grid_min = float(np.min((w * (1 + alpha * e) - alpha * e).real))
    envelope = w.real - abs(alpha) * abs(w - 1)
    lhs = w.real > alpha * abs(w - 1) + gamma
    return LemmaCheck(lhs, min(grid_min, envelope) > gamma)
