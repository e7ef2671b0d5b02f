"""Closed-form potential families of the dot product, f(t) = g(2-2t).

The families carry analytic derivatives of every order, which downstream
code needs for Hermite interpolation data and for checking the three
derivative-sign hypotheses of the certification theorem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

__all__ = [
    "PotentialSpec",
    "SignConditionReport",
    "riesz",
    "log_potential",
    "gauss",
    "poly_potential",
    "check_sign_conditions",
    "parse_potential",
]

DOMAIN_SLACK = 1e-12


@dataclass(frozen=True)
class PotentialSpec:
    """A potential f(t) = g(2-2t) from one of the supported closed-form families.

    family "riesz":  f(t) = (2-2t)^(-s/2) for s > 0, negated for -2 < s < 0.
    family "log":    f(t) = (1/2) ln(1/(2-2t)).
    family "gauss":  f(t) = exp(-sigma (2-2t)), sigma > 0.
    family "poly":   f(t) = polynomial in t with the given monomial coefficients.

    Immutable; all methods are pure and accept scalars or arrays.
    """

    family: str
    s: float = math.nan
    sigma: float = math.nan
    coeffs: tuple[float, ...] = field(default=())

    def __post_init__(self):
        if self.family == "riesz":
            if not (self.s > -2 and self.s != 0):
                raise ValueError("riesz exponent must satisfy s > -2, s != 0")
        elif self.family == "gauss":
            if not self.sigma > 0:
                raise ValueError("gauss width sigma must be > 0")
        elif self.family == "poly":
            if len(self.coeffs) == 0:
                raise ValueError("poly family needs at least one coefficient")
        elif self.family != "log":
            raise ValueError(f"unknown potential family {self.family!r}")

    def eval(self, t):
        """f(t) on [-1, 1]; +inf is returned at t = 1 for singular families."""
        t_arr, scalar = _as_domain_array(t, open_interval=False)
        u = 2.0 - 2.0 * t_arr
        with np.errstate(divide="ignore"):
            if self.family == "riesz":
                val = np.power(u, -self.s / 2)
                if self.s < 0:
                    val = -val
            elif self.family == "log":
                val = -0.5 * np.log(u)
            elif self.family == "gauss":
                val = np.exp(-self.sigma * u)
            else:
                val = npoly.polyval(t_arr, np.asarray(self.coeffs))
        return float(val[()]) if scalar else val

    __call__ = eval

    def derivative(self, k: int, t):
        """Analytic k-th derivative of f at t strictly inside (-1, 1)."""
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        t_arr, scalar = _as_domain_array(t, open_interval=True)
        u = 2.0 - 2.0 * t_arr
        if self.family == "riesz":
            sign = 1.0 if self.s > 0 else -1.0
            prod = math.prod(self.s / 2 + j for j in range(k))
            val = sign * 2.0**k * prod * np.power(u, -self.s / 2 - k)
        elif self.family == "log":
            if k == 0:
                val = -0.5 * np.log(u)
            else:
                val = math.factorial(k - 1) * 2.0 ** (k - 1) * np.power(u, -float(k))
        elif self.family == "gauss":
            val = (2.0 * self.sigma) ** k * np.exp(-self.sigma * u)
        else:
            val = npoly.polyval(t_arr, npoly.polyder(np.asarray(self.coeffs), k)) if k else npoly.polyval(
                t_arr, np.asarray(self.coeffs)
            )
            val = np.asarray(val, dtype=float)
        return float(val[()]) if scalar else val

    def is_singular_at_one(self) -> bool:
        return not math.isfinite(self.eval(1.0))

    def spec_string(self) -> str:
        """Canonical CLI-grammar form, e.g. 'riesz:s=1' or 'poly:1,0,2'."""
        if self.family == "riesz":
            return f"riesz:s={self.s:.17g}"
        if self.family == "log":
            return "log"
        if self.family == "gauss":
            return f"gauss:sigma={self.sigma:.17g}"
        return "poly:" + ",".join(f"{c:.17g}" for c in self.coeffs)


def riesz(s: float) -> PotentialSpec:
    return PotentialSpec("riesz", s=float(s))


def log_potential() -> PotentialSpec:
    return PotentialSpec("log")


def gauss(sigma: float) -> PotentialSpec:
    return PotentialSpec("gauss", sigma=float(sigma))


def poly_potential(coeffs) -> PotentialSpec:
    return PotentialSpec("poly", coeffs=tuple(float(c) for c in np.atleast_1d(coeffs)))


def _as_domain_array(t, open_interval: bool) -> tuple[np.ndarray, bool]:
    arr = np.asarray(t, dtype=float)
    scalar = arr.ndim == 0
    if open_interval:
        if np.any(np.abs(arr) >= 1.0):
            raise ValueError("argument must lie strictly inside (-1, 1)")
    else:
        if np.any(arr < -1.0 - DOMAIN_SLACK) or np.any(arr > 1.0 + DOMAIN_SLACK):
            raise ValueError("argument outside [-1, 1]")
        arr = np.clip(arr, -1.0, 1.0)
    return np.atleast_1d(arr) if scalar else arr, scalar


@dataclass(frozen=True)
class SignConditionReport:
    """Sampled non-negativity of f^(2m-2), f^(2m-1), f^(2m) on (-1, 1).

    Advisory only: a sampling check, not a proof.
    """

    m: int
    grid: int
    ok_2m_minus_2: bool
    ok_2m_minus_1: bool
    ok_2m: bool
    strict_2m: bool

    @property
    def all_nonnegative(self) -> bool:
        return self.ok_2m_minus_2 and self.ok_2m_minus_1 and self.ok_2m


def check_sign_conditions(f: PotentialSpec, m: int, grid: int = 1000) -> SignConditionReport:
    """Sample the three derivative orders used by the certification theorem."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if grid < 100:
        raise ValueError("grid must have at least 100 samples")
    eps = 1e-6
    ts = np.linspace(-1.0 + eps, 1.0 - eps, grid)
    oks = []
    for k in (2 * m - 2, 2 * m - 1, 2 * m):
        vals = np.asarray(f.derivative(k, ts))
        tol = 1e-12 * max(1.0, float(np.max(np.abs(vals))))
        oks.append(bool(np.all(vals >= -tol)))
    strict = bool(np.all(np.asarray(f.derivative(2 * m, ts)) > 0.0))
    return SignConditionReport(
        m=m, grid=grid, ok_2m_minus_2=oks[0], ok_2m_minus_1=oks[1], ok_2m=oks[2], strict_2m=strict
    )


def parse_potential(text: str) -> PotentialSpec:
    """Parse the CLI grammar: riesz:s=1 | log | gauss:sigma=0.5 | poly:c0,c1,..."""
    head, _, rest = text.strip().partition(":")
    try:
        if head == "log":
            if rest:
                raise ValueError("log takes no parameters")
            return log_potential()
        if head == "riesz":
            key, _, val = rest.partition("=")
            if key != "s" or not val:
                raise ValueError("riesz needs s=<value>")
            return riesz(float(val))
        if head == "gauss":
            key, _, val = rest.partition("=")
            if key != "sigma" or not val:
                raise ValueError("gauss needs sigma=<value>")
            return gauss(float(val))
        if head == "poly":
            if not rest:
                raise ValueError("poly needs a comma-separated coefficient list")
            return poly_potential([float(c) for c in rest.split(",")])
    except ValueError as exc:
        raise ValueError(f"bad potential spec {text!r}: {exc}") from None
    raise ValueError(f"bad potential spec {text!r}: unknown family {head!r}")
