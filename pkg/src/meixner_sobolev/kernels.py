"""Reproducing kernels of the Meixner family and the Gauss 2F1 evaluator.

The partial-difference kernel sums (direct differencing of the cached
polynomials) are the ground truth here; the Christoffel-Darboux quotient
and the two closed forms are checked against them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import (
    BracketPole,
    ConfluentPoint,
    DivergentParameters,
    InvalidC,
    NonIntegerGammaExactPath,
)
from .meixner import MeixnerParams, meixner_family, squared_norm
from .polynomials import Polynomial, bracket_polynomial, difference
from .scalars import OperatorKind, RationalLike, bracket, pochhammer


def kernel_sum(
    params: MeixnerParams, n: int, x: RationalLike, y: RationalLike
) -> Fraction:
    """K_n(x, y) = sum_{k<=n} M_k(x) M_k(y) / ||M_k||^2, exact."""
    fam = meixner_family(params)
    x, y = Fraction(x), Fraction(y)
    acc = Fraction(0)
    for k in range(n + 1):
        mk = fam.polynomial(k)
        acc += mk(x) * mk(y) / squared_norm(params, k)
    return acc


def kernel_cd(
    params: MeixnerParams, n: int, x: RationalLike, y: RationalLike
) -> Fraction:
    """Christoffel-Darboux form of K_n(x, y); requires x != y."""
    x, y = Fraction(x), Fraction(y)
    if x == y:
        raise ConfluentPoint("Christoffel-Darboux quotient undefined at x = y")
    fam = meixner_family(params)
    mn, mn1 = fam.polynomial(n), fam.polynomial(n + 1)
    return (mn1(x) * mn(y) - mn1(y) * mn(x)) / (squared_norm(params, n) * (x - y))


def kernel_partial(
    params: MeixnerParams,
    n: int,
    l: int,
    j: int,
    kind: OperatorKind,
    x: RationalLike,
    y: RationalLike,
) -> Fraction:
    """Partial-difference kernel

        K_n^{(l,j)}(x, y) = sum_{k<=n} D_i^l M_k(x) D_i^j M_k(y) / ||M_k||^2

    by direct differencing of the cached polynomials.
    """
    fam = meixner_family(params)
    x, y = Fraction(x), Fraction(y)
    acc = Fraction(0)
    for k in range(n + 1):
        mk = fam.polynomial(k)
        dl = difference(mk, kind, l)
        if dl.is_zero:
            continue
        dj = dl if j == l else difference(mk, kind, j)
        if dj.is_zero:
            continue
        acc += dl(x) * dj(y) / squared_norm(params, k)
    return acc


def kernel_partial_in_x(
    params: MeixnerParams, n: int, j: int, kind: OperatorKind, y: RationalLike
) -> Polynomial:
    """K_n^{(0,j)}(x, y) as an exact polynomial in x (y fixed)."""
    fam = meixner_family(params)
    y = Fraction(y)
    acc = Polynomial.zero()
    for k in range(n + 1):
        mk = fam.polynomial(k)
        dj = difference(mk, kind, j)
        if dj.is_zero:
            continue
        acc = acc + (dj(y) / squared_norm(params, k)) * mk
    return acc


def kernel_0j_closed(
    params: MeixnerParams,
    n: int,
    j: int,
    kind: OperatorKind,
    x: RationalLike,
    alpha: RationalLike,
) -> Fraction:
    """Closed form of K_{n-1}^{(0,j)}(x, alpha):

        j! / (||M_{n-1}||^2 <x-alpha>_i^{j+1})
          * ( M_n(x)     sum_{k<=j} D_i^k M_{n-1}(alpha) <x-alpha>_i^k / k!
            - M_{n-1}(x) sum_{k<=j} D_i^k M_n(alpha)     <x-alpha>_i^k / k! ).

    Valid away from zeros of the bracket.
    """
    if n < 1:
        raise ValueError("closed kernel form needs n >= 1")
    x, alpha = Fraction(x), Fraction(alpha)
    denom_bracket = bracket(x - alpha, j + 1, kind)
    if not denom_bracket:
        raise BracketPole(f"bracket <x-alpha>^{j + 1} vanishes at x = {x}")
    fam = meixner_family(params)
    mn, mn1 = fam.polynomial(n), fam.polynomial(n - 1)

    def taylor_sum(p: Polynomial) -> Fraction:
        acc = Fraction(0)
        factorial = 1
        for k in range(j + 1):
            if k:
                factorial *= k
            dk = difference(p, kind, k)
            acc += dk(alpha) * bracket(x - alpha, k, kind) / factorial
        return acc

    numerator = mn(x) * taylor_sum(mn1) - mn1(x) * taylor_sum(mn)
    factorial_j = math.factorial(j)
    return factorial_j * numerator / (squared_norm(params, n - 1) * denom_bracket)


def kernel_jj_00_closed(params: MeixnerParams, n: int, j: int) -> Fraction:
    """Closed form of K_{n-1}^{(j,j)}(0, 0) for the forward operator:

        j! (1-mu)^(gamma+2j) / (mu^j (gamma)_j)
          * sum_{0<=k<=n-j-1} (j+1)_k (gamma+j)_k mu^k / ((1)_k k!).

    Empty sum (zero) when n <= j.
    """
    gamma, mu = params.gamma, params.mu
    if gamma.denominator != 1:
        # (1-mu)^(gamma+2j) must be rational for the exact value
        raise NonIntegerGammaExactPath(f"gamma = {gamma} is not an integer")
    prefactor = (
        Fraction(math.factorial(j))
        * (1 - mu) ** (int(gamma) + 2 * j)
        / (mu**j * pochhammer(gamma, j))
    )
    acc = Fraction(0)
    term = Fraction(1)
    for k in range(n - j):
        if k:
            # ratio of consecutive summands
            term *= (
                Fraction(j + k) * (gamma + j + k - 1) * mu / (Fraction(k) * k)
            )
        acc += term
    return prefactor * acc


def gauss_2f1(
    a: RationalLike, b: RationalLike, c: RationalLike, z: float, tol: float = 1e-15
) -> float:
    """Float partial sums of 2F1(a, b; c; z) for |z| < 1.

    Terms are added until |term| < tol * |accumulated|.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c <= 0 and c.denominator == 1:
        raise InvalidC(f"c = {c} is a nonpositive integer")
    if abs(z) >= 1:
        raise DivergentParameters(f"|z| = {abs(z)} is outside the unit disc")
    af, bf, cf = float(a), float(b), float(c)
    acc = 1.0
    term = 1.0
    for k in range(100_000):
        term *= (af + k) * (bf + k) * z / ((cf + k) * (k + 1))
        acc += term
        if abs(term) < tol * abs(acc):
            return acc
    raise ArithmeticError("2F1 failed to converge within the iteration budget")


def gauss_2f1_partial(
    a: RationalLike, b: RationalLike, c: RationalLike, z: RationalLike, terms: int
) -> Fraction:
    """Exact rational partial sum of the first ``terms`` summands of 2F1.

    Used as the oracle for the float evaluator.
    """
    a, b, c, z = Fraction(a), Fraction(b), Fraction(c), Fraction(z)
    if c <= 0 and c.denominator == 1:
        raise InvalidC(f"c = {c} is a nonpositive integer")
    acc = Fraction(0)
    term = Fraction(1)
    for k in range(terms):
        acc += term
        term *= (a + k) * (b + k) * z / ((c + k) * (k + 1))
    return acc


def kernel_jj_00_limit(params: MeixnerParams, j: int, tol: float = 1e-15) -> float:
    """Limit of K_{n-1}^{(j,j)}(0,0) as n grows:

        j! (1-mu)^(gamma+2j) / (mu^j (gamma)_j) * 2F1(j+1, j+gamma; 1; mu).
    """
    gamma, mu = params.gamma, params.mu
    prefactor = (
        math.factorial(j)
        * float(1 - mu) ** (float(gamma) + 2 * j)
        / (float(mu) ** j * float(pochhammer(gamma, j)))
    )
    return prefactor * gauss_2f1(j + 1, j + gamma, 1, float(mu), tol)
