"""Rational functions in one variable over the rationals.

These are the field elements used when the boundary-value solve is run
with a symbolic ray parameter: every entry of the linear system becomes
a quotient of polynomials in t, elimination proceeds exactly, and the
result is reduced once at the end.  Fractions are normalized so the
denominator is monic; gcd reduction happens on every construction to
keep degrees minimal.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import RationalPolynomial, gcd

_ONE = RationalPolynomial.constant(Fraction(1))


class RationalFunction:
    """Quotient num/den of rational-coefficient polynomials, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: RationalPolynomial, den: RationalPolynomial = _ONE):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = RationalPolynomial.zero(), _ONE
            return
        g = gcd(num, den)
        if g.degree > 0:
            num = num.divexact(g)
            den = den.divexact(g)
        lead = den.leading()
        self.num = num.scale(1 / lead)
        self.den = den.scale(1 / lead)

    # -- constructors ---------------------------------------------------

    @classmethod
    def variable(cls) -> "RationalFunction":
        return cls(RationalPolynomial.monomial(1))

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(RationalPolynomial.constant(Fraction(c)))

    @classmethod
    def coerce(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, RationalPolynomial):
            return cls(value)
        return cls.constant(value)

    # -- field operations -------------------------------------------------

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) + (-self)

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, k: int):
        out = RationalFunction.constant(1)
        base = self
        for _ in range(k):
            out = out * base
        return out

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, RationalPolynomial, Fraction, int)):
            other = RationalFunction.coerce(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    # -- evaluation --------------------------------------------------------

    def __call__(self, t: Fraction) -> Fraction:
        bottom = self.den(t)
        if not bottom:
            raise ZeroDivisionError(f"pole at t={t}")
        return self.num(t) / bottom

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree <= 0
