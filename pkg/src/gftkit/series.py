"""Truncated power series normalized as ``z + a_2 z^2 + ... + a_N z^N``.

Two sign conventions are supported.  In ``GENERAL`` form the stored
coefficients are the actual (complex) coefficients.  In ``NEGATIVE`` form the
stored values are nonnegative magnitudes and the represented function is
``z - sum a_n z^n``; the sign is applied only when the series is evaluated or
converted to a plain polynomial.

Anything that is not normalized (derivatives, ``f(tz)``) is a
:class:`Polynomial`, which carries its full coefficient vector from the
constant term upward.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Union

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DomainError, FormError

DEFAULT_ORDER = 64


class SignForm(str, Enum):
    GENERAL = "general"
    NEGATIVE = "negative"


def _check_finite(z, what="value"):
    if not np.all(np.isfinite(z)):
        raise DomainError(f"{what} must be finite")


def _check_in_disk(z):
    _check_finite(z, "z")
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("evaluation point must satisfy |z| < 1")


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Plain polynomial ``sum c_j z^j`` with complex coefficients."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        _check_finite(c, "coefficients")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def trimmed(self) -> np.ndarray:
        c = np.trim_zeros(self.coeffs, "b")
        return c if c.size else np.zeros(1, dtype=complex)

    def __call__(self, z):
        return evaluate(self, z)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self.trimmed(), other.trimmed())

    __hash__ = None


@dataclass(frozen=True)
class TruncatedSeries:
    """``z + sum_{n=2}^N a_n z^n`` (or ``z - sum ...`` in negative form).

    ``coeffs`` holds a_2..a_N, so ``order == len(coeffs) + 1``.
    """

    coeffs: tuple = ()
    form: SignForm = SignForm.GENERAL

    def __post_init__(self):
        form = SignForm(self.form)
        vals = tuple(complex(a) for a in self.coeffs)
        for a in vals:
            if not (math.isfinite(a.real) and math.isfinite(a.imag)):
                raise DomainError("series coefficients must be finite")
        if form is SignForm.NEGATIVE:
            for a in vals:
                if a.imag != 0.0 or a.real < 0.0:
                    raise FormError(
                        "negative-coefficient form stores real magnitudes a_n >= 0"
                    )
        object.__setattr__(self, "coeffs", vals)
        object.__setattr__(self, "form", form)

    @classmethod
    def identity(cls, order: int = 1, form=SignForm.NEGATIVE) -> "TruncatedSeries":
        """The function ``z`` at the given truncation order."""
        if order < 1:
            raise DomainError("truncation order must be >= 1")
        return cls((0.0,) * (order - 1), form)

    @classmethod
    def from_terms(
        cls,
        terms: Mapping[int, complex],
        order: int | None = None,
        form=SignForm.GENERAL,
    ) -> "TruncatedSeries":
        """Build from a sparse ``{n: a_n}`` mapping; unlisted n are zero."""
        top = max(terms, default=1)
        order = max(top, 1) if order is None else order
        if order < 1:
            raise DomainError("truncation order must be >= 1")
        coeffs = [0j] * (order - 1)
        for n, a in terms.items():
            if not 2 <= n <= order:
                raise DomainError(f"term index {n} outside 2..{order}")
            coeffs[n - 2] = a
        return cls(tuple(coeffs), form)

    @property
    def order(self) -> int:
        return len(self.coeffs) + 1

    @property
    def is_negative(self) -> bool:
        return self.form is SignForm.NEGATIVE

    def coefficient(self, n: int) -> complex:
        """Stored value for index n (magnitude in negative form); 0 past the order."""
        if n < 2:
            raise DomainError("stored coefficients start at n = 2")
        return self.coeffs[n - 2] if n <= self.order else 0j

    def magnitudes(self) -> np.ndarray:
        """Array of |a_n| indexed so that ``arr[n - 2]`` is |a_n|."""
        return np.abs(np.asarray(self.coeffs, dtype=complex))

    def signed_coeffs(self) -> np.ndarray:
        """Actual coefficients of z^2..z^N with the sign form applied."""
        c = np.asarray(self.coeffs, dtype=complex)
        return -c if self.is_negative else c

    def to_polynomial(self) -> Polynomial:
        return Polynomial(np.concatenate(([0j, 1 + 0j], self.signed_coeffs())))

    def with_order(self, order: int) -> "TruncatedSeries":
        """Zero-pad or truncate to a new order."""
        if order < 1:
            raise DomainError("truncation order must be >= 1")
        c = self.coeffs[: order - 1] + (0j,) * max(0, order - self.order)
        return TruncatedSeries(c, self.form)

    def as_general(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(self.signed_coeffs()), SignForm.GENERAL)

    def scaled(self, c: float) -> "TruncatedSeries":
        """Multiply every stored coefficient (not the leading z) by c."""
        return TruncatedSeries(tuple(c * a for a in self.coeffs), self.form)

    def __call__(self, z):
        return evaluate(self, z)


Series = Union[TruncatedSeries, Polynomial]


def _as_poly(f: Series) -> Polynomial:
    return f.to_polynomial() if isinstance(f, TruncatedSeries) else f


def horner(coeffs: np.ndarray, z):
    """Horner evaluation of ``sum coeffs[j] z^j`` (scalar or array z)."""
    acc = np.zeros_like(np.asarray(z, dtype=complex)) + coeffs[-1]
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def evaluate(f: Series, z):
    """Value of f at z (|z| < 1).  Accepts scalars or numpy arrays."""
    zz = np.asarray(z, dtype=complex)
    _check_in_disk(zz)
    out = horner(_as_poly(f).trimmed(), zz)
    return complex(out) if out.ndim == 0 else out


def derivative(f: Series) -> Polynomial:
    """Term-by-term derivative; for a normalized series the constant term is 1."""
    p = _as_poly(f)
    if p.degree == 0:
        return Polynomial([0j])
    return Polynomial(npoly.polyder(p.coeffs))


def hadamard(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise (Hadamard) product, truncated to the smaller order.

    Signed coefficients are multiplied.  The result stays in negative form
    only when an input was negative and every product is real and <= 0;
    otherwise it is returned in general form.
    """
    n = min(f.order, g.order) - 1
    a, b = f.signed_coeffs()[:n], g.signed_coeffs()[:n]
    # componentwise so the product is bitwise symmetric in f and g
    prod = (a.real * b.real - a.imag * b.imag) + 1j * (a.real * b.imag + a.imag * b.real)
    if (f.is_negative or g.is_negative) and np.all(prod.imag == 0) and np.all(prod.real <= 0):
        return TruncatedSeries(tuple(-prod.real + 0.0), SignForm.NEGATIVE)
    return TruncatedSeries(tuple(prod), SignForm.GENERAL)


def scale_substitute(f: Series, t) -> Polynomial:
    """Return the polynomial ``z -> f(t z)`` (|t| <= 1)."""
    t = complex(t)
    _check_finite(t, "t")
    if abs(t) > 1.0:
        raise DomainError("scale factor must satisfy |t| <= 1")
    c = _as_poly(f).coeffs
    return Polynomial(c * t ** np.arange(len(c)))


# -- JSON interchange ---------------------------------------------------------

def series_to_dict(f: TruncatedSeries) -> dict:
    terms = [
        {"n": n, "re": a.real, "im": a.imag}
        for n, a in enumerate(f.coeffs, start=2)
        if a != 0
    ]
    return {"form": f.form.value, "order": f.order, "coefficients": terms}


def _finite_number(x, what):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise DomainError(f"{what} must be a number")
    if not math.isfinite(x):
        raise DomainError(f"{what} must be finite")
    return float(x)


def series_from_dict(obj: Mapping) -> TruncatedSeries:
    """Strict parse of the series interchange format."""
    if not isinstance(obj, Mapping):
        raise DomainError("series document must be a JSON object")
    extra = set(obj) - {"form", "order", "coefficients"}
    if extra:
        raise DomainError(f"unknown series fields: {sorted(extra)}")
    try:
        form = SignForm(obj["form"])
    except (KeyError, ValueError):
        raise DomainError("'form' must be 'negative' or 'general'") from None
    order = obj.get("order")
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise DomainError("'order' must be an integer >= 1")
    entries = obj.get("coefficients", [])
    if not isinstance(entries, list):
        raise DomainError("'coefficients' must be a list")
    terms: dict[int, complex] = {}
    for e in entries:
        if not isinstance(e, Mapping) or "n" not in e:
            raise DomainError("each coefficient needs an integer 'n'")
        n = e["n"]
        if isinstance(n, bool) or not isinstance(n, int):
            raise DomainError("coefficient index must be an integer")
        if n < 2 or n > order:
            raise DomainError(f"coefficient index {n} outside 2..{order}")
        if n in terms:
            raise DomainError(f"duplicate coefficient index {n}")
        re = _finite_number(e.get("re", 0.0), f"re of a_{n}")
        im = _finite_number(e.get("im", 0.0), f"im of a_{n}")
        terms[n] = complex(re, im)
    return TruncatedSeries.from_terms(terms, order=order, form=form)


def load_series(text: str) -> TruncatedSeries:
    def _reject(name):
        raise DomainError(f"non-finite literal {name} in series JSON")

    try:
        obj = json.loads(text, parse_constant=_reject)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid series JSON: {exc}") from None
    return series_from_dict(obj)
