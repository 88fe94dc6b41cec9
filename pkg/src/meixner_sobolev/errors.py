"""Exception types raised by the exact and floating-point evaluation paths."""


class MeixnerSobolevError(Exception):
    """Base class for all library-specific errors."""


class NonIntegerGammaExactPath(MeixnerSobolevError):
    """Exact summation of the discrete measure needs (1-mu)**gamma rational,
    which this library guarantees only for integer gamma."""


class ConfluentPoint(MeixnerSobolevError):
    """Christoffel-Darboux quotient requested at x = y."""


class BracketPole(MeixnerSobolevError):
    """A generalized-bracket denominator vanishes at the evaluation point."""


class DivergentParameters(MeixnerSobolevError):
    """Hypergeometric series evaluated outside its region of convergence."""


class InvalidC(MeixnerSobolevError):
    """Lower hypergeometric parameter is a nonpositive integer."""


class DegenerateRepresentation(MeixnerSobolevError):
    """The 3F2 representation is undefined at this point (vanishing
    connection coefficient or vanishing denominator Pochhammer)."""


class PoleAtNonnegativeInteger(MeixnerSobolevError):
    """Asymptotic ratio requested at a nonnegative integer x, where the
    limit function vanishes identically."""


class UnsupportedRegime(MeixnerSobolevError):
    """Asymptotic result is only established for the forward operator with
    alpha = 0."""
