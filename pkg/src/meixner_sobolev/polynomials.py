"""Dense univariate polynomials and rational functions over the rationals.

A polynomial is a tuple of ``Fraction`` coefficients, index k holding the
coefficient of x**k, with trailing zeros stripped, so equality is plain
coefficient-wise equality.  The zero polynomial stores no coefficients and
its degree is ``None`` (a deliberate non-integer marker: arithmetic on it
raises instead of silently producing -1-based nonsense).

Rational functions are quotient pairs (num, den).  Arithmetic does *not*
reduce automatically -- identity checks cross-multiply, so reduction is
only a size optimization -- call :meth:`RationalFunction.reduced` at points
where denominator growth matters.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .scalars import OperatorKind, RationalLike, binomial, format_rational, parse_rational

Scalar = Union[Fraction, int]


class Polynomial:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self._coeffs: tuple = tuple(coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls((Fraction(value),))

    @classmethod
    def monomial(cls, power: int, coefficient: RationalLike = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (Fraction(coefficient),))

    # -- basic queries ------------------------------------------------

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            return Polynomial(tuple(c * other for c in self._coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Polynomial":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dn, dd = len(rem) - 1, other.degree
        if dn < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (dn - dd + 1)
        inv_lead = Fraction(1) / other.leading_coefficient
        dc = other._coeffs
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd] * inv_lead
            if c:
                quot[k] = c
                for j, oc in enumerate(dc):
                    rem[k + j] -= c * oc
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    # -- evaluation and composition ------------------------------------

    def __call__(self, x: RationalLike) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def shift(self, offset: RationalLike) -> "Polynomial":
        """Return p(x + offset), expanded via binomials in O(deg^2)."""
        offset = Fraction(offset)
        if not offset or self.is_zero:
            return self
        n = len(self._coeffs)
        out = [Fraction(0)] * n
        # offset powers cached once; Pascal row built incrementally
        powers = [Fraction(1)]
        for _ in range(n - 1):
            powers.append(powers[-1] * offset)
        for m, cm in enumerate(self._coeffs):
            if not cm:
                continue
            for k in range(m + 1):
                out[k] += cm * binomial(m, k) * powers[m - k]
        return Polynomial(out)

    # -- comparison / hashing / display --------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "Polynomial(0)"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(format_rational(c))
            else:
                coeff = "" if c == 1 else ("-" if c == -1 else format_rational(c) + "*")
                parts.append(f"{coeff}x^{k}" if k > 1 else f"{coeff}x")
        return "Polynomial(" + " + ".join(parts).replace("+ -", "- ") + ")"

    # -- serialization --------------------------------------------------

    def to_strings(self) -> list:
        """Coefficients as exact strings, index = power."""
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Polynomial":
        return cls(parse_rational(s) for s in items)


def _coerce(value) -> "Polynomial":
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial((value,))
    return NotImplemented


# ---------------------------------------------------------------------------
# difference operators and discrete bases
# ---------------------------------------------------------------------------


def difference(p: Polynomial, kind: OperatorKind, order: int = 1) -> Polynomial:
    """Apply the forward or backward difference operator ``order`` times.

    The degree drops by exactly one per application; orders beyond the
    degree give the zero polynomial.
    """
    if order < 0:
        raise ValueError("difference order must be nonnegative")
    out = p
    for _ in range(order):
        if out.is_zero:
            return out
        if kind is OperatorKind.FORWARD:
            out = out.shift(1) - out
        else:
            out = out - out.shift(-1)
    return out


def bracket_polynomial(alpha: RationalLike, n: int, kind: OperatorKind) -> Polynomial:
    """The bracket <x - alpha>_i^n as a monic polynomial in x.

    Forward: (x-a)(x-a-1)...(x-a-n+1); backward: (x-a)(x-a+1)...(x-a+n-1).
    """
    alpha = Fraction(alpha)
    step = -1 if kind is OperatorKind.FORWARD else 1
    out = Polynomial.one()
    for m in range(n):
        out = out * Polynomial((-alpha + step * m, 1))
    return out


def to_falling_basis(p: Polynomial) -> list:
    """Coefficients c_k with p(x) = sum c_k [x]_k (Newton series at 0).

    c_k is the k-th forward difference of p at 0 divided by k!.
    """
    coeffs = []
    current = p
    k = 0
    factorial = 1
    while not current.is_zero:
        coeffs.append(current(0) / factorial)
        current = difference(current, OperatorKind.FORWARD)
        k += 1
        factorial *= k
    return coeffs


def from_falling_basis(coeffs: Sequence[RationalLike]) -> Polynomial:
    """Inverse of :func:`to_falling_basis`."""
    out = Polynomial.zero()
    basis = Polynomial.one()
    for k, c in enumerate(coeffs):
        if k:
            basis = basis * Polynomial((-(k - 1), 1))
        out = out + Fraction(c) * basis
    return out


def leibniz_difference(
    f: Polynomial, g: Polynomial, kind: OperatorKind, n: int
) -> Polynomial:
    """n-th difference of f*g via the discrete Leibniz rule.

    D_i^n[f g](x) = sum_k C(n,k) D_i^k f(x) * D_i^{n-k} g(x +/- k), the
    shift being +k for the forward operator and -k for the backward one.
    Agrees with difference(f*g, kind, n) identically.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    step = kind.step
    total = Polynomial.zero()
    df = f
    for k in range(n + 1):
        dg = difference(g, kind, n - k).shift(step * k)
        total = total + binomial(n, k) * (df * dg)
        df = difference(df, kind)
    return total


# ---------------------------------------------------------------------------
# gcd over Q via a primitive remainder sequence over Z
# ---------------------------------------------------------------------------


def _integer_primitive(p: Polynomial) -> list:
    """Integer coefficient list of a rational polynomial, content removed."""
    den_lcm = 1
    for c in p.coefficients:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in p.coefficients]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    return [c // content for c in ints] if content else ints


def _pseudo_remainder(a: list, b: list) -> list:
    """Pseudo-remainder of integer coefficient lists (lc(b)^k * a mod b)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and not a[-1]:
            a.pop()
        if len(a) - 1 < db:
            break
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j in range(db + 1):
            a[shift + j] -= la * b[j]
        a.pop()
    while a and not a[-1]:
        a.pop()
    return a


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd, computed with a primitive PRS to tame coefficient growth."""
    if a.is_zero and b.is_zero:
        return Polynomial.zero()
    if a.is_zero:
        return b / b.leading_coefficient
    if b.is_zero:
        return a / a.leading_coefficient
    fa, fb = _integer_primitive(a), _integer_primitive(b)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        rem = _pseudo_remainder(fa, fb)
        if rem:
            content = 0
            for c in rem:
                content = math.gcd(content, c)
            rem = [c // content for c in rem]
        fa, fb = fb, rem
    g = Polynomial(fa)
    return g / g.leading_coefficient


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Quotient of two polynomials; the denominator is never zero.

    Equality is cross-multiplied, never pointwise, so unreduced values
    compare correctly.  ``reduced()`` divides out the gcd and normalizes
    the denominator to be monic.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=None):
        num = _coerce(num)
        den = Polynomial.one() if den is None else _coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalFunction needs polynomial or scalar arguments")
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        self._num = num
        self._den = den

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(Polynomial.zero())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(Polynomial.one())

    @property
    def num(self) -> Polynomial:
        return self._num

    @property
    def den(self) -> Polynomial:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    def reduced(self) -> "RationalFunction":
        """Divide out the gcd and make the denominator monic."""
        if self._num.is_zero:
            return RationalFunction(Polynomial.zero())
        g = polynomial_gcd(self._num, self._den)
        num, den = self._num, self._den
        if g.degree and g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading_coefficient
        if lead != 1:
            num, den = num / lead, den / lead
        return RationalFunction(num, den)

    # -- arithmetic (no implicit reduction) -----------------------------

    def __add__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == other._den:
            return RationalFunction(self._num + other._num, self._den)
        return RationalFunction(
            self._num * other._den + other._num * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self._num, self._den)

    def __sub__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is NotImplemented:
            return NotImplemented
        if other._num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # -- analysis --------------------------------------------------------

    def __call__(self, x: RationalLike) -> Fraction:
        x = Fraction(x)
        d = self._den(x)
        if not d:
            raise ZeroDivisionError(f"rational function evaluated at a pole: x={x}")
        return self._num(x) / d

    def shift(self, offset: RationalLike) -> "RationalFunction":
        return RationalFunction(self._num.shift(offset), self._den.shift(offset))

    def difference(self, kind: OperatorKind) -> "RationalFunction":
        """First difference f(x +/- 1) - f(x) per the operator kind."""
        return self.shift(kind.step) - self

    def as_polynomial(self) -> Polynomial:
        """Return the numerator of the reduced form if the value is a
        polynomial; raise otherwise."""
        red = self.reduced()
        if red.den != Polynomial.one():
            raise ValueError("rational function is not a polynomial")
        return red.num

    def __eq__(self, other) -> bool:
        other = _as_rational_function(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num * other._den == other._num * self._den

    def __hash__(self):
        red = self.reduced()
        return hash((red._num, red._den))

    def __repr__(self) -> str:
        return f"RationalFunction({self._num!r}, {self._den!r})"

    def to_dict(self) -> dict:
        """JSON-friendly dump of the reduced form."""
        red = self.reduced()
        return {
            "num_coefficients": red.num.to_strings(),
            "den_coefficients": red.den.to_strings(),
        }


def _as_rational_function(value) -> "RationalFunction":
    if isinstance(value, RationalFunction):
        return value
    coerced = _coerce(value)
    if coerced is NotImplemented:
        return NotImplemented
    return RationalFunction(coerced)
