"""Gegenbauer polynomials for S^d and the weighted inner product they are
orthogonal under.

The basis is generated by the three-term recurrence

    P_{n+1}(t) = (2n+d-1)/(n+d-1) * t * P_n(t) - n/(n+d-1) * P_{n-1}(t),

seeded with P_0 = 1, P_1 = t, which keeps the normalization P_n(1) = 1.
Inner products use the probability weight w_d(t) = gamma_d * (1-t^2)^(d/2-1)
on [-1, 1] and are evaluated by Gauss-Jacobi quadrature sized to be exact for
polynomial integrands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.special import roots_jacobi

__all__ = [
    "Polynomial",
    "GegenbauerBasis",
    "build_basis",
    "weight_constant",
    "inner_product",
    "inner_product_fn",
    "coeff_ratio",
    "expand",
    "expand_fn",
]

DEFAULT_N_MAX = 30


class Polynomial:
    """Dense real polynomial in the monomial basis; ``coeffs[k]`` multiplies t**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[float] | np.ndarray):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=float))
        if arr.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        arr = np.trim_zeros(arr, "b")
        if arr.size == 0:
            arr = np.zeros(1)
        self.coeffs = arr

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls([0.0])

    @classmethod
    def one(cls) -> "Polynomial":
        return cls([1.0])

    @classmethod
    def identity(cls) -> "Polynomial":
        """The monomial t."""
        return cls([0.0, 1.0])

    @classmethod
    def from_roots(cls, roots: Sequence[float]) -> "Polynomial":
        """Monic polynomial with the given roots (with multiplicity)."""
        return cls(npoly.polyfromroots(np.asarray(roots, dtype=float)))

    @property
    def degree(self) -> int:
        """Highest index with nonzero coefficient; -1 for the zero polynomial."""
        if self.coeffs.size == 1 and self.coeffs[0] == 0.0:
            return -1
        return self.coeffs.size - 1

    def __call__(self, t):
        return npoly.polyval(t, self.coeffs)

    def derivative(self, k: int = 1) -> "Polynomial":
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        return Polynomial(npoly.polyder(self.coeffs, k)) if k else Polynomial(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(npoly.polyadd(self.coeffs, other.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(npoly.polysub(self.coeffs, other.coeffs))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial(npoly.polymul(self.coeffs, other.coeffs))
        return Polynomial(self.coeffs * float(other))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Polynomial({self.coeffs.tolist()})"


@dataclass(frozen=True)
class GegenbauerBasis:
    """P_0..P_{n_max} for a fixed sphere dimension, with leading-coefficient data.

    ``alphas[n]`` is the t^n coefficient of P_n and ``gammas[n]`` the magnitude
    of its t^(n-2) coefficient (sign convention P_n = alpha_n t^n - gamma_n
    t^(n-2) + ...); gammas[0] = gammas[1] = 0. Immutable after construction,
    safe for concurrent read-only use.
    """

    d: int
    polys: tuple[Polynomial, ...]
    alphas: np.ndarray
    gammas: np.ndarray

    @property
    def n_max(self) -> int:
        return len(self.polys) - 1


@lru_cache(maxsize=128)
def build_basis(d: int, n_max: int = DEFAULT_N_MAX) -> GegenbauerBasis:
    """Construct Gegenbauer polynomials for S^d up to degree n_max."""
    if d < 1:
        raise ValueError("sphere dimension d must be >= 1")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    polys = [Polynomial.one()]
    if n_max >= 1:
        polys.append(Polynomial.identity())
    for n in range(1, n_max):
        c_t = (2 * n + d - 1) / (n + d - 1)
        c_prev = n / (n + d - 1)
        shifted = np.concatenate(([0.0], polys[n].coeffs))  # t * P_n
        nxt = npoly.polysub(c_t * shifted, c_prev * polys[n - 1].coeffs)
        polys.append(Polynomial(nxt))
    alphas = np.array([p.coeffs[n] for n, p in enumerate(polys)])
    gammas = np.zeros(n_max + 1)
    for n in range(2, n_max + 1):
        gammas[n] = -polys[n].coeffs[n - 2]
    return GegenbauerBasis(d=d, polys=tuple(polys), alphas=alphas, gammas=gammas)


def weight_constant(d: int) -> float:
    """Normalizer gamma_d making (1-t^2)^(d/2-1) a probability density on [-1,1].

    Computed from the Beta-function identity
    integral_{-1}^{1} (1-t^2)^(d/2-1) dt = sqrt(pi) Gamma(d/2) / Gamma((d+1)/2).
    """
    if d < 1:
        raise ValueError("sphere dimension d must be >= 1")
    return math.gamma((d + 1) / 2) / (math.sqrt(math.pi) * math.gamma(d / 2))


@lru_cache(maxsize=256)
def _jacobi_rule(npts: int, d: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Jacobi nodes/weights for weight (1-t^2)^(d/2-1), normalized by gamma_d."""
    nodes, weights = roots_jacobi(npts, d / 2 - 1, d / 2 - 1)
    return nodes, weights * weight_constant(d)


def inner_product(p: Polynomial, q: Polynomial, d: int) -> float:
    """<p, q>_d = integral of p*q*w_d over [-1, 1], exact for polynomials."""
    deg = max(p.degree, 0) + max(q.degree, 0)
    nodes, weights = _jacobi_rule(deg // 2 + 1, d)
    return float(weights @ (p(nodes) * q(nodes)))


def inner_product_fn(fn: Callable[[np.ndarray], np.ndarray], degree: int, q: Polynomial, d: int) -> float:
    """<fn, q>_d where ``fn`` evaluates a polynomial of the given degree.

    Lets callers keep a numerically stable evaluation form (e.g. a product
    form) instead of monomial coefficients.
    """
    deg = max(degree, 0) + max(q.degree, 0)
    nodes, weights = _jacobi_rule(deg // 2 + 1, d)
    return float(weights @ (np.asarray(fn(nodes), dtype=float) * q(nodes)))


def coeff_ratio(d: int, n: int) -> float:
    """gamma_n / alpha_n = n(n-1) / (2(2n+d-3)) for n >= 2."""
    if n < 2:
        raise ValueError("coefficient ratio is defined for n >= 2")
    return n * (n - 1) / (2 * (2 * n + d - 3))


def expand(p: Polynomial, d: int) -> np.ndarray:
    """Coefficients beta with p = sum_n beta[n] * P_n^{(d)}.

    Triangular back-substitution in the monomial basis: peel the leading
    term with P_n at each degree.
    """
    deg = max(p.degree, 0)
    basis = build_basis(d, deg)
    residual = np.zeros(deg + 1)
    residual[: p.coeffs.size] = p.coeffs
    beta = np.zeros(deg + 1)
    for n in range(deg, -1, -1):
        beta[n] = residual[n] / basis.alphas[n]
        residual[: n + 1] -= beta[n] * basis.polys[n].coeffs
    return beta


def expand_fn(fn: Callable[[np.ndarray], np.ndarray], degree: int, d: int) -> np.ndarray:
    """Gegenbauer coefficients of a degree-``degree`` polynomial given by a callable.

    Projects by quadrature: beta[n] = <fn, P_n>_d / <P_n, P_n>_d.
    """
    basis = build_basis(d, max(degree, 0))
    beta = np.zeros(degree + 1)
    for n in range(degree + 1):
        pn = basis.polys[n]
        beta[n] = inner_product_fn(fn, degree, pn, d) / inner_product(pn, pn, d)
    return beta
