"""Polar-grid sampling of the open unit disk.

Estimates infima of the defining condition

    G(z) = Re W(z) - k |W(z) - 1| - gamma,
    W(z) = (1 - t) z (D^eta f)'(z) / (D^eta f(z) - D^eta f(t z)),

and of real parts of ratios such as f/f_m.  Grids are fixed (not adaptive)
so results are reproducible.  Rows of the grid may be evaluated on several
threads; the min-reduction picks the first minimum in row-major order, so
the answer does not depend on how rows were partitioned.
"""
from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, TextIO

import numpy as np

from .diffop import apply_closed
from .errors import DomainError, ZeroDenominator
from .kernel import ClassParams
from .series import Series, TruncatedSeries, derivative, evaluate, scale_substitute

DEFAULT_R_MAX = 0.999
DEFAULT_R_COUNT = 64
DEFAULT_THETA_COUNT = 720
GRID_TOL = 1e-6
# |den| below this times |z| counts as a genuine zero of the condition denominator
CONDITION_DEN_REL = 1e-12
RATIO_DEN_ABS = 1e-10


def default_radii(count: int = DEFAULT_R_COUNT, r_max: float = DEFAULT_R_MAX) -> tuple:
    """Radii with 1 - r log-spaced from 0.999 down to 1 - r_max."""
    if not 0.0 < r_max < 1.0:
        raise DomainError("r_max must lie in (0, 1)")
    if count == 1:
        return (r_max,)
    gaps = np.geomspace(min(0.999, r_max), 1.0 - r_max, count)
    r = 1.0 - gaps
    r[-1] = r_max
    return tuple(float(x) for x in np.unique(r))


def _wrap_angle(a: float) -> float:
    """Map an angle into (-pi, pi]."""
    a = math.remainder(a, 2 * math.pi)
    return math.pi if a == -math.pi else a


@dataclass(frozen=True)
class GridSpec:
    r_values: tuple = field(default_factory=default_radii)
    theta_count: int = DEFAULT_THETA_COUNT
    include_rays: tuple = ()

    def __post_init__(self):
        r = tuple(float(x) for x in self.r_values)
        if not r or any(not 0.0 < x < 1.0 for x in r):
            raise DomainError("grid radii must lie in (0, 1)")
        if self.theta_count < 8:
            raise DomainError("theta_count must be >= 8")
        object.__setattr__(self, "r_values", r)
        object.__setattr__(self, "include_rays", tuple(float(a) for a in self.include_rays))

    @classmethod
    def default(cls, r_max: float = DEFAULT_R_MAX, r_count: int = DEFAULT_R_COUNT,
                theta_count: int = DEFAULT_THETA_COUNT, include_rays=()) -> "GridSpec":
        return cls(default_radii(r_count, r_max), theta_count, tuple(include_rays))

    def radii(self) -> np.ndarray:
        return np.unique(np.asarray(self.r_values))

    def thetas(self) -> np.ndarray:
        j = np.arange(1, self.theta_count + 1)
        base = -np.pi + 2 * np.pi * j / self.theta_count
        extra = [_wrap_angle(a) for a in self.include_rays]
        return np.unique(np.concatenate((base, extra)))

    def with_rays(self, *rays: float) -> "GridSpec":
        return GridSpec(self.r_values, self.theta_count, self.include_rays + tuple(rays))

    def refine(self) -> "GridSpec":
        """Twice the angles and radii; every old grid point is kept."""
        r = self.radii()
        mids = (r[:-1] + r[1:]) / 2
        first = (r[:1] / 2)
        return GridSpec(tuple(np.concatenate((first, r, mids))), 2 * self.theta_count,
                        self.include_rays)

    def points(self) -> np.ndarray:
        return self.radii()[:, None] * np.exp(1j * self.thetas())[None, :]

    def to_dict(self) -> dict:
        r = self.radii()
        return {
            "r_count": int(r.size),
            "r_min": float(r[0]),
            "r_max": float(r[-1]),
            "theta_count": self.theta_count,
            "include_rays": list(self.include_rays),
        }


@dataclass(frozen=True)
class VerificationReport:
    quantity: str
    grid: GridSpec
    minimum: float
    argmin_r: float
    argmin_theta: float
    bound: float
    tolerance: float = GRID_TOL

    @property
    def margin(self) -> float:
        return self.minimum - self.bound

    @property
    def passed(self) -> bool:
        return self.minimum >= self.bound - self.tolerance

    def to_dict(self, label_key: str = "quantity") -> dict:
        return {
            label_key: self.quantity,
            "bound": self.bound,
            "grid_min": self.minimum,
            "margin": self.margin,
            "argmin": {"r": self.argmin_r, "theta": self.argmin_theta},
            "pass": self.passed,
            "tolerance": self.tolerance,
            "grid": self.grid.to_dict(),
        }


def thread_count() -> int:
    raw = os.environ.get("GFT_THREADS")
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise DomainError("GFT_THREADS must be a positive integer") from None
        if n < 1:
            raise DomainError("GFT_THREADS must be a positive integer")
        return n
    return os.cpu_count() or 1


def _row_min(values: np.ndarray):
    if np.isnan(values).any():
        raise DomainError("NaN encountered while sampling the grid")
    idx = int(np.argmin(values))
    return float(values.flat[idx]), idx


def grid_minimum(fn: Callable[[np.ndarray], np.ndarray], grid: GridSpec,
                 threads: Optional[int] = None):
    """Minimum of ``fn`` over the grid as ``(value, r, theta)``.

    ``fn`` maps an array of points to real values of the same shape.
    """
    r, th = grid.radii(), grid.thetas()
    ray = np.exp(1j * th)
    threads = threads or thread_count()
    chunks = np.array_split(np.arange(r.size), min(threads, r.size))

    def run(rows):
        vals = fn(r[rows, None] * ray[None, :])
        v, idx = _row_min(vals)
        return v, rows[0] * th.size + idx

    if len(chunks) == 1:
        results = [run(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            results = list(pool.map(run, chunks))
    best, flat = results[0]
    for v, i in results[1:]:
        if v < best:
            best, flat = v, i
    i, j = divmod(flat, th.size)
    return best, float(r[i]), float(th[j])


class _Condition:
    """Precomputed pieces of W(z) for one (params, series) pair."""

    def __init__(self, p: ClassParams, f: TruncatedSeries):
        self.p = p
        self.D = apply_closed(p.op, f).to_polynomial()
        self.dD = derivative(self.D)
        self.Dt = scale_substitute(self.D, p.t)

    def __call__(self, z: np.ndarray) -> np.ndarray:
        p = self.p
        z = np.asarray(z, dtype=complex)
        num = (1 - p.t) * z * evaluate(self.dD, z)
        den = evaluate(self.D, z) - evaluate(self.Dt, z)
        az = np.abs(z)
        origin = az == 0
        bad = (np.abs(den) < CONDITION_DEN_REL * az) & ~origin
        if bad.any():
            zb = complex(z[bad].flat[0])
            raise ZeroDenominator(
                "D f(z) - D f(tz) vanishes",
                where={"r": abs(zb), "theta": math.atan2(zb.imag, zb.real)},
            )
        with np.errstate(invalid="ignore", divide="ignore"):
            W = np.where(origin, 1.0 + 0j, num / np.where(origin, 1.0, den))
        return W.real - p.k * np.abs(W - 1) - p.gamma


def condition_value(p: ClassParams, f: TruncatedSeries, z: complex) -> float:
    """G(z); the removable point z = 0 gives 1 - gamma."""
    return float(_Condition(p, f)(np.asarray(complex(z))))


def condition_values(p: ClassParams, f: TruncatedSeries, z: np.ndarray) -> np.ndarray:
    return _Condition(p, f)(z)


def grid_min_condition(p: ClassParams, f: TruncatedSeries, grid: Optional[GridSpec] = None,
                       tolerance: float = GRID_TOL,
                       threads: Optional[int] = None) -> VerificationReport:
    """Minimum of G over the grid and the origin; passes when >= -tolerance."""
    grid = grid or GridSpec()
    m, r, th = grid_minimum(_Condition(p, f), grid, threads)
    origin = 1.0 - p.gamma
    if origin < m:
        m, r, th = origin, 0.0, 0.0
    return VerificationReport("condition", grid, m, r, th, 0.0, tolerance)


def grid_min_ratio(numer: Series, denom: Series, grid: Optional[GridSpec] = None,
                   bound: float = -math.inf, label: str = "ratio",
                   tolerance: float = GRID_TOL,
                   threads: Optional[int] = None) -> VerificationReport:
    """Minimum of Re{numer(z)/denom(z)} over the grid."""
    grid = grid or GridSpec()

    def fn(z):
        d = evaluate(denom, z)
        bad = np.abs(d) < RATIO_DEN_ABS
        if bad.any():
            zb = complex(z[bad].flat[0])
            raise ZeroDenominator(
                f"denominator of {label} vanishes",
                where={"r": abs(zb), "theta": math.atan2(zb.imag, zb.real)},
            )
        return (evaluate(numer, z) / d).real

    m, r, th = grid_minimum(fn, grid, threads)
    return VerificationReport(label, grid, m, r, th, bound, tolerance)


def dump_condition_csv(p: ClassParams, f: TruncatedSeries, grid: GridSpec, out: TextIO):
    """Write one ``r,theta,G`` row per grid point, with a header line."""
    cond = _Condition(p, f)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["r", "theta", "G"])
    th = grid.thetas()
    for r in grid.radii():
        vals = cond(r * np.exp(1j * th))
        for a, g in zip(th, vals):
            writer.writerow([repr(float(r)), repr(float(a)), repr(float(g))])
