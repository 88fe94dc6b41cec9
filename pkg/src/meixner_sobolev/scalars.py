"""Exact rational scalars and shifted-factorial products.

Rationals are plain ``fractions.Fraction`` values: the stdlib type already
guarantees lowest terms, a positive denominator and arbitrary-precision
integer components, and its string form is the wire format used here
("p/q", or "p" when the denominator is 1).
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]


class OperatorKind(enum.IntEnum):
    """The two first-order difference operators.

    FORWARD  : D f(x) = f(x+1) - f(x)
    BACKWARD : D f(x) = f(x) - f(x-1)
    """

    FORWARD = 1
    BACKWARD = 2

    @property
    def step(self) -> int:
        """Shift direction used by product/Leibniz rules: +1 forward, -1 backward."""
        return 1 if self is OperatorKind.FORWARD else -1

    @classmethod
    def parse(cls, text: str) -> "OperatorKind":
        key = text.strip().lower()
        if key in ("forward", "f", "1", "delta"):
            return cls.FORWARD
        if key in ("backward", "b", "2", "nabla"):
            return cls.BACKWARD
        raise ValueError(f"unknown operator kind: {text!r}")

    def __str__(self) -> str:
        return "forward" if self is OperatorKind.FORWARD else "backward"


def parse_rational(text: RationalLike) -> Fraction:
    """Parse "p/q", integer, or scientific-notation strings exactly.

    "1e-21" becomes 1/10**21; floats are rejected so nothing silently
    leaves the exact pipeline.
    """
    if isinstance(text, float):
        raise TypeError("refusing to coerce a float; pass a string or Fraction")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


def pochhammer(x: RationalLike, n: int) -> Fraction:
    """Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    x = Fraction(x)
    result = Fraction(1)
    for j in range(n):
        result *= x + j
    return result


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """Falling factorial [x]_n = x(x-1)...(x-n+1) = (-1)^n (-x)_n, [x]_0 = 1."""
    if n < 0:
        raise ValueError("falling_factorial needs n >= 0")
    x = Fraction(x)
    result = Fraction(1)
    for j in range(n):
        result *= x - j
    return result


def bracket(x: RationalLike, n: int, kind: OperatorKind) -> Fraction:
    """Generalized bracket <x>_i^n: falling factorial for the forward
    operator, rising factorial for the backward one."""
    if kind is OperatorKind.FORWARD:
        return falling_factorial(x, n)
    return pochhammer(x, n)


def binomial(n: int, k: int) -> int:
    """Integer binomial coefficient; 0 outside the triangle."""
    if k < 0 or k > n:
        return 0
    out = 1
    for j in range(min(k, n - k)):
        out = out * (n - j) // (j + 1)
    return out
