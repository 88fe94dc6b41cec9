"""Sobolev-type orthogonal polynomials for the discrete Meixner measure.

The inner product adds a point mass on a j-th order difference:

    <p, q>_lambda = <p, q> + lambda * D_i^j p(alpha) * D_i^j q(alpha),

and the orthogonal family Q_n is assembled from the kernel connection

    Q_n = M_n - lambda * D_i^j M_n(alpha) / (1 + lambda * K_{n-1}^{(j,j)})
               * K_{n-1}^{(0,j)}(x, alpha),

with every kernel value taken from the direct partial-difference sums.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, NamedTuple, Tuple

from .errors import BracketPole, DegenerateRepresentation
from .meixner import (
    MeixnerParams,
    inner_product,
    meixner_family,
    meixner_hypergeometric,
    squared_norm,
)
from .polynomials import (
    Polynomial,
    RationalFunction,
    bracket_polynomial,
    difference,
)
from .scalars import OperatorKind, RationalLike, bracket, pochhammer


@dataclass(frozen=True)
class SobolevParams:
    """Meixner parameters plus the point-mass data (lambda, j, alpha, i)."""

    base: MeixnerParams
    lam: Fraction
    j: int
    alpha: Fraction
    kind: OperatorKind

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "kind", OperatorKind(self.kind))
        if self.lam < 0:
            raise ValueError(f"lambda must be nonnegative, got {self.lam}")
        if self.j < 0:
            raise ValueError(f"j must be nonnegative, got {self.j}")
        if self.alpha > 0:
            raise ValueError(f"alpha must be <= 0, got {self.alpha}")

    @property
    def gamma(self) -> Fraction:
        return self.base.gamma

    @property
    def mu(self) -> Fraction:
        return self.base.mu


class ConnectionData(NamedTuple):
    """Connection of Q_n to (M_n, M_{n-1}) in the bracket basis."""

    a_coeffs: List[Fraction]  # a^{(k)}, 0 <= k <= j
    b_coeffs: List[Fraction]  # b^{(k)}, 0 <= k <= j
    A: RationalFunction  # multiplies M_n
    B: RationalFunction  # multiplies M_{n-1}


class SobolevFamily:
    """Append-only caches for one Sobolev parameter bundle."""

    def __init__(self, params: SobolevParams):
        self.params = params
        self.meixner = meixner_family(params.base)
        self._polys: dict = {0: Polynomial.one()}
        self._connections: dict = {}
        self._dj_alpha: dict = {}
        self._kjj_prefix: list = [Fraction(0)]  # K_{n-1}^{(j,j)}(alpha,alpha) at index n
        self._lock = threading.RLock()  # _denominator extends while holding it

    def dj_meixner_at_alpha(self, n: int) -> Fraction:
        """D_i^j M_n(alpha), cached."""
        value = self._dj_alpha.get(n)
        if value is None:
            p = self.params
            value = difference(self.meixner.polynomial(n), p.kind, p.j)(p.alpha)
            with self._lock:
                self._dj_alpha[n] = value
        return value

    # kernel value 1 + lambda * K_{n-1}^{(j,j)}(alpha, alpha), the recurring
    # denominator of the connection coefficients
    def _denominator(self, n: int) -> Fraction:
        if n >= len(self._kjj_prefix):
            with self._lock:
                while len(self._kjj_prefix) <= n:
                    k = len(self._kjj_prefix) - 1
                    term = self.dj_meixner_at_alpha(k) ** 2 / squared_norm(
                        self.params.base, k
                    )
                    self._kjj_prefix.append(self._kjj_prefix[-1] + term)
        return 1 + self.params.lam * self._kjj_prefix[n]

    def dj_at_alpha(self, n: int) -> Fraction:
        """D_i^j Q_n(alpha) = D_i^j M_n(alpha) / (1 + lambda K_{n-1}^{(j,j)})."""
        return self.dj_meixner_at_alpha(n) / self._denominator(n)

    def polynomial(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("degree must be nonnegative")
        cached = self._polys.get(n)
        if cached is not None:
            return cached
        p = self.params
        coeff = p.lam * self.dj_at_alpha(n)
        slice_in_x = Polynomial.zero()
        if coeff:
            for k in range(n):
                dj = self.dj_meixner_at_alpha(k)
                if dj:
                    slice_in_x = (
                        slice_in_x
                        + (dj / squared_norm(p.base, k)) * self.meixner.polynomial(k)
                    )
        q = self.meixner.polynomial(n) - coeff * slice_in_x
        with self._lock:
            self._polys[n] = q
        return q

    def connection(self, n: int) -> ConnectionData:
        if n < 1:
            raise ValueError("connection coefficients need n >= 1")
        cached = self._connections.get(n)
        if cached is not None:
            return cached
        p = self.params
        denominator = squared_norm(p.base, n - 1) * self._denominator(n)
        dj_n = self.dj_meixner_at_alpha(n)
        factor = p.lam * Fraction(math.factorial(p.j)) * dj_n / denominator
        mn = self.meixner.polynomial(n)
        mn1 = self.meixner.polynomial(n - 1)
        a_coeffs, b_coeffs = [], []
        factorial_k = 1
        for k in range(p.j + 1):
            if k:
                factorial_k *= k
            a_coeffs.append(
                -factor * difference(mn1, p.kind, k)(p.alpha) / factorial_k
            )
            b_coeffs.append(factor * difference(mn, p.kind, k)(p.alpha) / factorial_k)
        top_bracket = bracket_polynomial(p.alpha, p.j + 1, p.kind)
        a_poly = Polynomial.zero()
        b_poly = Polynomial.zero()
        for k in range(p.j + 1):
            basis = bracket_polynomial(p.alpha, k, p.kind)
            a_poly = a_poly + a_coeffs[k] * basis
            b_poly = b_poly + b_coeffs[k] * basis
        data = ConnectionData(
            a_coeffs,
            b_coeffs,
            RationalFunction(top_bracket + a_poly, top_bracket),
            RationalFunction(b_poly, top_bracket),
        )
        with self._lock:
            self._connections[n] = data
        return data

    def norm_squared(self, n: int) -> Fraction:
        """||Q_n||_lambda^2 = ||M_n||^2 + b^{(j)} ||M_{n-1}||^2 (n >= 1)."""
        p = self.params
        if n == 0:
            one = Polynomial.one()
            return sobolev_inner_product(self, one, one)
        b_top = self.connection(n).b_coeffs[p.j]
        return squared_norm(p.base, n) + b_top * squared_norm(p.base, n - 1)


@lru_cache(maxsize=None)
def sobolev_family(params: SobolevParams) -> SobolevFamily:
    """Shared family cache keyed by parameters."""
    return SobolevFamily(params)


def sobolev_inner_product(
    fam: SobolevFamily, p: Polynomial, q: Polynomial
) -> Fraction:
    """<p, q>_lambda, exact (integer gamma)."""
    sp = fam.params
    classical = inner_product(sp.base, p, q)
    if not sp.lam:
        return classical
    dp = difference(p, sp.kind, sp.j)(sp.alpha)
    dq = difference(q, sp.kind, sp.j)(sp.alpha)
    return classical + sp.lam * dp * dq


def dj_q_at_alpha(fam: SobolevFamily, n: int) -> Fraction:
    return fam.dj_at_alpha(n)


def connection_coeffs(fam: SobolevFamily, n: int) -> ConnectionData:
    return fam.connection(n)


def sobolev_poly(fam: SobolevFamily, n: int) -> Polynomial:
    return fam.polynomial(n)


def sobolev_norm(fam: SobolevFamily, n: int) -> Fraction:
    return fam.norm_squared(n)


def msphr_eval(fam: SobolevFamily, n: int, x: RationalLike) -> Fraction:
    """Evaluate Q_n(x) through its terminating 3F2 representation:

        (gamma)_{n-1} (mu/(mu-1))^{n-1} h_n(x)
            * 3F2(-n, -x, f_n(x); gamma, f_n(x)-1; 1 - 1/mu)

    with h_n = -(mu (gamma+n-1)/(1-mu) A_{1,n} - B_{1,n}) and
    f_n = n mu (gamma+n-1)/(1-mu) * A_{1,n}/B_{1,n} - n + 1.

    Raises BracketPole at zeros of the bracket and
    DegenerateRepresentation where B_{1,n}(x) = 0 or a denominator
    Pochhammer vanishes.  When B_{1,n} is identically zero (lambda = 0 or
    n <= j) the representation degenerates to M_n and that value is
    returned directly.
    """
    if n < 1:
        raise ValueError("the hypergeometric representation needs n >= 1")
    p = fam.params
    gamma, mu = p.gamma, p.mu
    x = Fraction(x)
    conn = fam.connection(n)
    if conn.B.is_zero:
        return meixner_hypergeometric(p.base, n, x)
    if not bracket(x - p.alpha, p.j + 1, p.kind):
        raise BracketPole(f"connection coefficients have a pole at x = {x}")
    a_val = conn.A(x)
    b_val = conn.B(x)
    if not b_val:
        raise DegenerateRepresentation(f"B_{{1,{n}}}({x}) = 0")
    s = mu * (gamma + n - 1) / (1 - mu)
    f = n * s * a_val / b_val - n + 1
    if f.denominator == 1 and 2 - n <= f <= 1:
        raise DegenerateRepresentation(
            f"f_n({x}) = {f} makes a denominator Pochhammer vanish"
        )
    h = -(s * a_val - b_val)
    z = 1 - 1 / mu
    acc = Fraction(1)
    term = Fraction(1)
    for k in range(n):
        term *= (
            Fraction(-n + k)
            * (-x + k)
            * (f + k)
            * z
            / ((gamma + k) * (f - 1 + k) * (k + 1))
        )
        acc += term
    return pochhammer(gamma, n - 1) * (mu / (mu - 1)) ** (n - 1) * h * acc


def gram_schmidt_oracle(fam: SobolevFamily, n_max: int) -> List[Polynomial]:
    """Monic orthogonal basis by exact Gram-Schmidt on {1, x, ..., x^n}.

    Independent construction path used to validate :func:`sobolev_poly`.
    """
    basis: List[Polynomial] = []
    norms: List[Fraction] = []
    for n in range(n_max + 1):
        q = Polynomial.monomial(n)
        for k in range(n):
            coeff = sobolev_inner_product(fam, Polynomial.monomial(n), basis[k])
            q = q - (coeff / norms[k]) * basis[k]
        basis.append(q)
        norms.append(sobolev_inner_product(fam, q, q))
    return basis
