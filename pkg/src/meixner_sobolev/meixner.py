"""Monic Meixner polynomials and the discrete negative-binomial measure.

The family is built from the three-term recurrence

    M_{n+1}(x) = (x - alpha_n) M_n(x) - beta_n M_{n-1}(x),
    alpha_n = (n(1+mu) + mu*gamma)/(1-mu),
    beta_n  = n*mu*(n+gamma-1)/(1-mu)^2,

with M_0 = 1.  Inner products against the weight mu^x (gamma)_x / x! are
evaluated exactly by expanding in the falling-factorial basis and
contracting with the factorial moments (gamma)_k mu^k (1-mu)^(-gamma-k);
this requires integer gamma (otherwise (1-mu)^gamma is irrational) and a
truncated-summation float fallback is provided for the general case.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .errors import NonIntegerGammaExactPath
from .polynomials import Polynomial, difference, to_falling_basis
from .scalars import OperatorKind, RationalLike, pochhammer


@dataclass(frozen=True)
class MeixnerParams:
    """Validated parameter pair (gamma > 0, 0 < mu < 1)."""

    gamma: Fraction
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        object.__setattr__(self, "mu", Fraction(self.mu))
        if self.gamma <= 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if not (0 < self.mu < 1):
            raise ValueError(f"mu must lie in (0, 1), got {self.mu}")

    @property
    def has_integer_gamma(self) -> bool:
        return self.gamma.denominator == 1


def recurrence_coeffs(params: MeixnerParams, n: int) -> Tuple[Fraction, Fraction]:
    """(alpha_n, beta_n) of the monic three-term recurrence."""
    gamma, mu = params.gamma, params.mu
    alpha = (n * (1 + mu) + mu * gamma) / (1 - mu)
    beta = n * mu * (n + gamma - 1) / (1 - mu) ** 2
    return alpha, beta


class MeixnerFamily:
    """Append-only cache of the monic polynomials of one parameter pair.

    Safe for concurrent readers: the cache only ever grows, and growth is
    serialized by a lock.
    """

    def __init__(self, params: MeixnerParams):
        self.params = params
        self._cache = [Polynomial.one()]
        self._lock = threading.Lock()

    def polynomial(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("degree must be nonnegative")
        if n < len(self._cache):
            return self._cache[n]
        with self._lock:
            while len(self._cache) <= n:
                k = len(self._cache)
                alpha, beta = recurrence_coeffs(self.params, k - 1)
                prev = self._cache[k - 1]
                prev2 = self._cache[k - 2] if k >= 2 else Polynomial.zero()
                self._cache.append((Polynomial((-alpha, 1)) * prev) - beta * prev2)
        return self._cache[n]


@lru_cache(maxsize=None)
def meixner_family(params: MeixnerParams) -> MeixnerFamily:
    """Shared family cache keyed by parameters."""
    return MeixnerFamily(params)


def meixner(params: MeixnerParams, n: int) -> Polynomial:
    """Monic Meixner polynomial of degree n (memoized per family)."""
    return meixner_family(params).polynomial(n)


def meixner_hypergeometric(params: MeixnerParams, n: int, x: RationalLike) -> Fraction:
    """Evaluate via the terminating 2F1 series

        (gamma)_n (mu/(mu-1))^n * 2F1(-n, -x; gamma; 1 - 1/mu),

    summed exactly in rational arithmetic (the (-n)_k factor truncates the
    series at k = n).
    """
    gamma, mu = params.gamma, params.mu
    x = Fraction(x)
    z = 1 - 1 / mu
    term = Fraction(1)
    acc = Fraction(1)
    for k in range(n):
        # ratio of consecutive summands of 2F1(-n, -x; gamma; z)
        term *= Fraction(-n + k) * (-x + k) * z / ((gamma + k) * (k + 1))
        acc += term
    return pochhammer(gamma, n) * (mu / (mu - 1)) ** n * acc


def value_at_zero(params: MeixnerParams, n: int) -> Fraction:
    """M_n(0) = (gamma)_n (mu/(mu-1))^n."""
    return pochhammer(params.gamma, n) * (params.mu / (params.mu - 1)) ** n


def _require_integer_gamma(params: MeixnerParams) -> int:
    if not params.has_integer_gamma:
        raise NonIntegerGammaExactPath(
            f"gamma = {params.gamma} is not an integer; exact summation of the "
            "measure is unavailable (use the float fallback)"
        )
    return int(params.gamma)


def squared_norm(params: MeixnerParams, n: int) -> Fraction:
    """||M_n||^2 = n! (gamma)_n mu^n / (1-mu)^(gamma+2n), integer gamma."""
    gamma = _require_integer_gamma(params)
    mu = params.mu
    out = pochhammer(params.gamma, n) * mu**n
    for k in range(2, n + 1):
        out *= k
    return out / (1 - mu) ** (gamma + 2 * n)


@lru_cache(maxsize=None)
def factorial_moment(params: MeixnerParams, k: int) -> Fraction:
    """k-th falling-factorial moment of the weight:

        sum_{x>=0} [x]_k mu^x (gamma)_x / x!  =  (gamma)_k mu^k (1-mu)^(-gamma-k).
    """
    gamma = _require_integer_gamma(params)
    return pochhammer(params.gamma, k) * params.mu**k / (1 - params.mu) ** (gamma + k)


def inner_product(params: MeixnerParams, p: Polynomial, q: Polynomial) -> Fraction:
    """Exact <p, q> against the Meixner weight (integer gamma)."""
    _require_integer_gamma(params)
    product = p * q
    acc = Fraction(0)
    for k, c in enumerate(to_falling_basis(product)):
        if c:
            acc += c * factorial_moment(params, k)
    return acc


def inner_product_float(
    params: MeixnerParams, p: Polynomial, q: Polynomial, tol: float = 1e-12
) -> float:
    """Truncated-summation fallback valid for any gamma > 0.

    Terms are accumulated until the weight ratio mu(gamma+x)/(x+1) has
    dropped below 1 and the current term is below tol times the
    accumulated sum.
    """
    gamma, mu = float(params.gamma), float(params.mu)
    weight = 1.0  # w(0); successive weights via w(x+1)/w(x) = mu(gamma+x)/(x+1)
    acc = 0.0
    x = 0
    while True:
        term = float(p(x)) * float(q(x)) * weight
        acc += term
        ratio = mu * (gamma + x) / (x + 1)
        if ratio < 1.0 and abs(term) < tol * max(abs(acc), 1e-300):
            return acc
        weight *= ratio
        x += 1
        if x > 10_000_000:  # unreachable for mu < 1; defensive only
            raise ArithmeticError("weight summation failed to converge")


def structure_relation_residual(
    params: MeixnerParams, n: int, kind: OperatorKind
) -> Polynomial:
    """Residual of the first structure relation; identically zero:

        (x + gamma*[i=1]) D_i M_n - n M_n - n mu^[i=2] (n+gamma-1)/(1-mu) M_{n-1}.
    """
    if n < 1:
        raise ValueError("structure relation needs n >= 1")
    gamma, mu = params.gamma, params.mu
    fam = meixner_family(params)
    mn, mn1 = fam.polynomial(n), fam.polynomial(n - 1)
    xg = Polynomial((gamma if kind is OperatorKind.FORWARD else 0, 1))
    mu_pow = mu if kind is OperatorKind.BACKWARD else Fraction(1)
    return (
        xg * difference(mn, kind)
        - n * mn
        - (n * mu_pow * (n + gamma - 1) / (1 - mu)) * mn1
    )


def shift_identity_residual(
    params: MeixnerParams, n: int, k: int, kind: OperatorKind
) -> Polynomial:
    """Residual of the shift-operator identity; identically zero:

        D_i^k M_n^{gamma,mu}(x) - [n]_k M_{n-k}^{gamma+k,mu}(x - [i=2]*k).
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    lhs = difference(meixner(params, n), kind, k)
    shifted = MeixnerParams(params.gamma + k, params.mu)
    rhs = meixner(shifted, n - k)
    if kind is OperatorKind.BACKWARD and k:
        rhs = rhs.shift(-k)
    factor = Fraction(1)
    for j in range(k):
        factor *= n - j
    return lhs - factor * rhs
