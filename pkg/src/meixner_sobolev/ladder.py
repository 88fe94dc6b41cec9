"""Ladder operators and the second-order difference equation.

Everything here is driven by the two-term connections

    Q_n     = A_1 M_n + B_1 M_{n-1}        (kernel connection)
    Q_{n-1} = A_2 M_n + B_2 M_{n-1}        (index shift via the recurrence)

whose coefficients are rational functions with bracket denominators.  The
difference images C_k, D_k are *rederived* from the product rule, the
structure relation and the three-term recurrence (the printed source for
them drops a "+" between lines); their contract against the directly
computed left-hand sides is exposed as a residual.

All identity checks cross-multiply to polynomial form; nothing is decided
by sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from .meixner import recurrence_coeffs
from .polynomials import Polynomial, RationalFunction, difference
from .scalars import OperatorKind
from .sobolev import SobolevFamily, SobolevParams, sobolev_family


@dataclass(frozen=True)
class LadderData:
    """All rational-function coefficients attached to one degree n."""

    n: int
    A2: RationalFunction
    B2: RationalFunction
    C1: RationalFunction
    D1: RationalFunction
    C2: RationalFunction
    D2: RationalFunction
    theta_tilde: RationalFunction
    lambdas: Dict[Tuple[int, int], RationalFunction]  # (j, k) -> Lambda_{j,n}^{(k)}


def _structure_coefficient(params: SobolevParams, m: int) -> Fraction:
    """Coefficient of M_{m-1} in the structure relation for M_m."""
    gamma, mu = params.gamma, params.mu
    mu_pow = mu if params.kind is OperatorKind.BACKWARD else Fraction(1)
    return m * mu_pow * (m + gamma - 1) / (1 - mu)


def _x_plus_gamma_delta(params: SobolevParams) -> Polynomial:
    return Polynomial(
        (params.gamma if params.kind is OperatorKind.FORWARD else 0, 1)
    )


def shifted_connection(
    fam: SobolevFamily, n: int
) -> Tuple[RationalFunction, RationalFunction]:
    """(A_2, B_2) with Q_{n-1} = A_2 M_n + B_2 M_{n-1}:

        A_2 = -B_{1,n-1} / beta_{n-1},
        B_2 = A_{1,n-1} + A_2 (alpha_{n-1} - x).
    """
    if n < 2:
        raise ValueError("the shifted connection needs n >= 2")
    p = fam.params
    conn = fam.connection(n - 1)
    alpha_r, beta_r = recurrence_coeffs(p.base, n - 1)
    a2 = (conn.B * Fraction(-1, 1) / beta_r).reduced()
    b2 = (conn.A + a2 * Polynomial((alpha_r, -1))).reduced()
    return a2, b2


def difference_images(
    fam: SobolevFamily, n: int
) -> Tuple[RationalFunction, RationalFunction, RationalFunction, RationalFunction]:
    """(C_1, D_1, C_2, D_2) with

        (x + gamma*[i=1]) D_i Q_n     = C_1 M_n + D_1 M_{n-1},
        (x + gamma*[i=1]) D_i Q_{n-1} = C_2 M_n + D_2 M_{n-1}.

    C_1, D_1 come from applying the product rule to the kernel connection
    and eliminating D_i M_n, D_i M_{n-1}, M_{n-2} via the structure and
    recurrence relations; C_2, D_2 repeat the index-shift step on the
    level-(n-1) images.
    """
    if n < 2:
        raise ValueError("difference images need n >= 2")
    c1, d1 = _first_image(fam, n)
    c1_prev, d1_prev = _first_image(fam, n - 1)
    p = fam.params
    alpha_r, beta_r = recurrence_coeffs(p.base, n - 1)
    c2 = (d1_prev * Fraction(-1, 1) / beta_r).reduced()
    d2 = (c1_prev + c2 * Polynomial((alpha_r, -1))).reduced()
    return c1, d1, c2, d2


def _first_image(
    fam: SobolevFamily, n: int
) -> Tuple[RationalFunction, RationalFunction]:
    """(C_1, D_1) at level n (valid for n >= 1)."""
    p = fam.params
    step = p.kind.step
    conn = fam.connection(n)
    a1, b1 = conn.A, conn.B
    a1_s, b1_s = a1.shift(step), b1.shift(step)
    da1 = a1.difference(p.kind)
    db1 = b1.difference(p.kind)
    xg = _x_plus_gamma_delta(p)
    alpha_r, beta_r = recurrence_coeffs(p.base, n - 1)
    s_n = _structure_coefficient(p, n)
    s_prev_over_beta = (
        _structure_coefficient(p, n - 1) / beta_r if n >= 2 else Fraction(0)
    )
    c1 = (xg * da1 + n * a1_s - s_prev_over_beta * b1_s).reduced()
    d1 = (
        xg * db1
        + (n - 1) * b1_s
        + s_prev_over_beta * (Polynomial((-alpha_r, 1)) * b1_s)
        + s_n * a1_s
    ).reduced()
    return c1, d1


@lru_cache(maxsize=None)
def _ladder_data(params: SobolevParams, n: int) -> LadderData:
    fam = sobolev_family(params)
    a2, b2 = shifted_connection(fam, n)
    c1, d1, c2, d2 = difference_images(fam, n)
    conn = fam.connection(n)
    a1, b1 = conn.A, conn.B
    xg = _x_plus_gamma_delta(params)
    theta_tilde = (xg * (a1 * b2 - b1 * a2)).reduced()
    ab = {1: (a1, b1), 2: (a2, b2)}
    cd = {1: (c1, d1), 2: (c2, d2)}
    lambdas = {}
    for jj in (1, 2):
        for kk in (1, 2):
            ck, dk = cd[kk]
            aj, bj = ab[jj]
            det = ck * bj - dk * aj
            lambdas[(jj, kk)] = (det if kk % 2 == 0 else -det).reduced()
    return LadderData(
        n=n, A2=a2, B2=b2, C1=c1, D1=d1, C2=c2, D2=d2,
        theta_tilde=theta_tilde, lambdas=lambdas,
    )


def ladder_data(fam: SobolevFamily, n: int) -> LadderData:
    if n < 2:
        raise ValueError("ladder data needs n >= 2")
    return _ladder_data(fam.params, n)


def ladder_coeffs(
    fam: SobolevFamily, n: int
) -> Tuple[
    RationalFunction,
    RationalFunction,
    RationalFunction,
    RationalFunction,
    RationalFunction,
]:
    """(theta_tilde, Lambda_1^(1), Lambda_2^(1), Lambda_1^(2), Lambda_2^(2))
    with the annihilation / creation contracts

        theta_tilde D_i Q_n     + Lambda_2^(1) Q_n     = Lambda_1^(1) Q_{n-1},
        theta_tilde D_i Q_{n-1} + Lambda_1^(2) Q_{n-1} = Lambda_2^(2) Q_n.
    """
    data = ladder_data(fam, n)
    return (
        data.theta_tilde,
        data.lambdas[(1, 1)],
        data.lambdas[(2, 1)],
        data.lambdas[(1, 2)],
        data.lambdas[(2, 2)],
    )


def ladder_residuals(
    fam: SobolevFamily, n: int
) -> Tuple[RationalFunction, RationalFunction]:
    """Residuals of the annihilation and creation identities; both zero."""
    data = ladder_data(fam, n)
    p = fam.params
    qn = fam.polynomial(n)
    qn1 = fam.polynomial(n - 1)
    dqn = difference(qn, p.kind)
    dqn1 = difference(qn1, p.kind)
    annihilation = (
        data.theta_tilde * dqn
        + data.lambdas[(2, 1)] * qn
        - data.lambdas[(1, 1)] * qn1
    )
    creation = (
        data.theta_tilde * dqn1
        + data.lambdas[(1, 2)] * qn1
        - data.lambdas[(2, 2)] * qn
    )
    return annihilation, creation


def second_order_coeffs(
    fam: SobolevFamily, n: int
) -> Tuple[RationalFunction, RationalFunction, RationalFunction]:
    """(F, G, H) with F D_i^2 Q_n + G D_i Q_n + H Q_n = 0:

        F = T T~ / L1~,
        G = T DT / L1~ - T^2 DL1 / (L1 L1~) + T L21~ / L1~ + T L12 / L1,
        H = T DL21 / L1~ - T L21 DL1 / (L1 L1~) + L12 L21 / L1 - L22,

    writing T = theta_tilde, L1 = Lambda_1^(1), L21 = Lambda_2^(1),
    L12 = Lambda_1^(2), L22 = Lambda_2^(2) and ~ for the one-step shift in
    the operator direction.
    """
    data = ladder_data(fam, n)
    p = fam.params
    step = p.kind.step
    theta = data.theta_tilde
    l1 = data.lambdas[(1, 1)]
    l21 = data.lambdas[(2, 1)]
    l12 = data.lambdas[(1, 2)]
    l22 = data.lambdas[(2, 2)]
    theta_s = theta.shift(step)
    l1_s = l1.shift(step)
    d_theta = theta.difference(p.kind)
    d_l1 = l1.difference(p.kind)
    d_l21 = l21.difference(p.kind)
    f = (theta * theta_s / l1_s).reduced()
    g = (
        theta * d_theta / l1_s
        - theta * theta * d_l1 / (l1 * l1_s)
        + theta * l21.shift(step) / l1_s
        + theta * l12 / l1
    ).reduced()
    h = (
        theta * d_l21 / l1_s
        - theta * l21 * d_l1 / (l1 * l1_s)
        + l12 * l21 / l1
        - l22
    ).reduced()
    return f, g, h


def second_order_residual(fam: SobolevFamily, n: int) -> RationalFunction:
    """F D_i^2 Q_n + G D_i Q_n + H Q_n; identically zero."""
    f, g, h = second_order_coeffs(fam, n)
    p = fam.params
    qn = fam.polynomial(n)
    dqn = difference(qn, p.kind)
    ddqn = difference(qn, p.kind, 2)
    return f * ddqn + g * dqn + h * qn


def second_order_by_elimination(
    fam: SobolevFamily, n: int
) -> Tuple[RationalFunction, RationalFunction, RationalFunction]:
    """Rebuild (F, G, H) by eliminating Q_{n-1} between the two ladder
    identities (apply D_i to the annihilation identity, solve for
    D_i Q_{n-1} and Q_{n-1}, substitute into the creation identity).

    Independent assembly used to cross-check :func:`second_order_coeffs`
    up to a common rational-function factor.
    """
    data = ladder_data(fam, n)
    p = fam.params
    step = p.kind.step
    theta = data.theta_tilde
    l1 = data.lambdas[(1, 1)]
    l21 = data.lambdas[(2, 1)]
    l12 = data.lambdas[(1, 2)]
    l22 = data.lambdas[(2, 2)]
    l1_s = l1.shift(step)
    # D(annihilation): coefficients of DDQ, DQ, Q on the left and of
    # Q_{n-1}, DQ_{n-1} on the right
    dd_coeff = theta.shift(step)
    dq_coeff = theta.difference(p.kind) + l21.shift(step)
    q_coeff = l21.difference(p.kind)
    # Q_{n-1} = (theta DQ + l21 Q) / l1; DQ_{n-1} = (D(ann LHS) - Dl1 Q_{n-1}) / l1_s
    dl1 = l1.difference(p.kind)
    # creation: theta * DQ_{n-1} + l12 * Q_{n-1} - l22 * Q = 0
    f = theta * dd_coeff / l1_s
    g = (
        theta * dq_coeff / l1_s
        - theta * dl1 * theta / (l1 * l1_s)
        + l12 * theta / l1
    )
    h = (
        theta * q_coeff / l1_s
        - theta * dl1 * l21 / (l1 * l1_s)
        + l12 * l21 / l1
        - l22
    )
    return f.reduced(), g.reduced(), h.reduced()
