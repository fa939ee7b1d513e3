"""Partial sums f_m and lower bounds for Re of f/f_m, f_m/f, f'/f_m', f_m'/f'.

With ``d = delta_{m+1}`` the bounds are

    Re f/f_m   >= 1 - 1/d            Re f_m/f   >= d/(1 + d)
    Re f'/f_m' >= 1 - (m+1)/d        Re f_m'/f' >= d/(1 + m + d)

for any f whose coefficient moduli satisfy ``sum delta_n |a_n| <= 1``, given
the monotonicity side conditions on delta_n checked in ``theorem_bounds``.
All four are attained in the limit by ``z + z^(m+1)/d`` along arg z = pi/m.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import ConditionFailed, DomainError
from .kernel import MEMBERSHIP_TOL, ClassParams, modulus_sum, multipliers
from .series import SignForm, TruncatedSeries, derivative
from .verifier import GRID_TOL, GridSpec, grid_min_ratio

RATIO_LABELS = ("f/fm", "fm/f", "df/dfm", "dfm/df")


def partial_sum(f: TruncatedSeries, m: int) -> TruncatedSeries:
    """Keep z and the terms up to z^m; the order of f is preserved."""
    if m < 1:
        raise DomainError("m must be >= 1")
    kept = tuple(a if n <= m else 0j for n, a in enumerate(f.coeffs, start=2))
    if f.is_negative:
        kept = tuple(a.real for a in kept)
    return TruncatedSeries(kept, f.form)


def delta_n(p: ClassParams, n: int) -> float:
    if n < 2:
        raise DomainError("delta_n is defined for n >= 2")
    return multipliers(p, n).w_n(n) / p.budget


@dataclass(frozen=True)
class PartialSumBounds:
    m: int
    delta: float
    bound_f_over_fm: float
    bound_fm_over_f: float
    bound_df_over_dfm: float
    bound_dfm_over_df: float
    failed_conditions: tuple = field(default=())

    @classmethod
    def from_delta(cls, m: int, delta: float, failed=()) -> "PartialSumBounds":
        return cls(
            m,
            delta,
            1 - 1 / delta,
            delta / (1 + delta),
            1 - (m + 1) / delta,
            delta / (1 + m + delta),
            tuple(failed),
        )

    @property
    def conditions_hold(self) -> bool:
        return not self.failed_conditions

    def as_tuple(self) -> tuple:
        return (self.bound_f_over_fm, self.bound_fm_over_f,
                self.bound_df_over_dfm, self.bound_dfm_over_df)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "delta": self.delta,
            "bound_f_over_fm": self.bound_f_over_fm,
            "bound_fm_over_f": self.bound_fm_over_f,
            "bound_df_over_dfm": self.bound_df_over_dfm,
            "bound_dfm_over_df": self.bound_dfm_over_df,
            "conditions_hold": self.conditions_hold,
            "failed_conditions": list(self.failed_conditions),
        }


def side_condition_failures(p: ClassParams, m: int, order: int) -> list:
    """Indices n <= order where a delta_n side condition fails.

    Checked: delta_n >= 1 for 2 <= n <= m, delta_n >= delta_{m+1} and
    delta_n >= n delta_{m+1}/(m+1) for m < n <= order.  n = 1 is skipped since
    delta_1 is not defined by the weight formula.
    """
    top = max(order, m + 1)
    d = multipliers(p, top).w / p.budget
    dm = d[m + 1]
    failed = []
    for n in range(2, top + 1):
        if n <= m:
            if d[n] < 1:
                failed.append(f"delta_{n} < 1")
        else:
            if d[n] < dm:
                failed.append(f"delta_{n} < delta_{m + 1}")
            if d[n] < n * dm / (m + 1) * (1 - 1e-15):
                failed.append(f"delta_{n} < {n}*delta_{m + 1}/{m + 1}")
    return failed


def theorem_bounds(p: ClassParams, m: int, order: Optional[int] = None,
                   strict: bool = False) -> PartialSumBounds:
    """All four bounds from delta_{m+1}, with the side conditions evaluated.

    Failing side conditions are listed on the result; with ``strict=True``
    they raise ConditionFailed instead (the bounds ride along in ``details``).
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    delta = delta_n(p, m + 1)
    if not delta > 0:
        raise DomainError("delta_{m+1} must be positive")
    failed = side_condition_failures(p, m, order or max(m + 1, 16))
    bounds = PartialSumBounds.from_delta(m, delta, failed)
    if failed and strict:
        raise ConditionFailed("; ".join(failed), details=bounds)
    return bounds


def extremal_partial(p: ClassParams, m: int, order: Optional[int] = None) -> TruncatedSeries:
    """``z + z^(m+1)/delta_{m+1}`` (general form)."""
    d = delta_n(p, m + 1)
    return TruncatedSeries.from_terms({m + 1: 1 / d}, order=order or m + 1,
                                      form=SignForm.GENERAL)


def sharpness_rays(m: int) -> tuple:
    """Arguments where z^m = -|z|^m; the ratio bounds are approached there."""
    return (math.pi / m,)


def verify_ratio_bounds(p: ClassParams, f: TruncatedSeries, m: int,
                        grid: Optional[GridSpec] = None,
                        tolerance: float = GRID_TOL) -> list:
    """Grid minima of the four ratios compared with their bounds.

    Raises ConditionFailed if f's coefficient moduli violate the class
    inequality (the bounds do not apply).
    """
    s = modulus_sum(p, f)
    if s > p.budget + MEMBERSHIP_TOL:
        raise ConditionFailed(
            f"coefficient moduli give sum {s!r} > 1 - gamma = {p.budget!r}")
    grid = grid or GridSpec()
    b = theorem_bounds(p, m, order=f.order)
    fm = partial_sum(f, m)
    df, dfm = derivative(f), derivative(fm)
    pairs = ((f, fm), (fm, f), (df, dfm), (dfm, df))
    return [
        grid_min_ratio(num, den, grid, bound, label, tolerance)
        for (num, den), bound, label in zip(pairs, b.as_tuple(), RATIO_LABELS)
    ]


def reports_to_dicts(reports) -> list:
    return [r.to_dict(label_key="ratio") for r in reports]
