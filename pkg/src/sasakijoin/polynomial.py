"""Exact univariate polynomials and Sturm-sequence root certification.

Coefficients are ``fractions.Fraction`` throughout the rational layer; the
same class also works with any field-like coefficient type supporting
``+ - * /`` (the parametric ray-family code instantiates it over rational
functions).  No floating point enters any decision: root counting uses
Sturm chains, isolation and refinement are bisection on exact signs, and
decimal strings are produced by long division only for display.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class RationalPolynomial:
    """Dense polynomial, ``coefficients[k]`` multiplying the k-th power.

    Trailing zero coefficients are stripped on construction; the zero
    polynomial is represented by an empty coefficient list.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = list(coefficients)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients = coeffs

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=ONE) -> "RationalPolynomial":
        return cls([ZERO] * degree + [c])

    @classmethod
    def from_ints(cls, coefficients: Sequence[int]) -> "RationalPolynomial":
        return cls([Fraction(c) for c in coefficients])

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def leading(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coefficients))

    def __repr__(self) -> str:
        if self.is_zero():
            return "RationalPolynomial(0)"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(f"({c})*z^{k}" if k else f"({c})")
        return "RationalPolynomial(" + " + ".join(terms) + ")"

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return RationalPolynomial(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial([-c for c in self.coefficients])

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            if self.is_zero() or other.is_zero():
                return RationalPolynomial.zero()
            out = [ZERO * self.coefficients[0]] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                if a:
                    for j, b in enumerate(other.coefficients):
                        out[i + j] = out[i + j] + a * b
            return RationalPolynomial(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "RationalPolynomial":
        return RationalPolynomial([a * c for a in self.coefficients])

    def __call__(self, x):
        """Horner evaluation; the point may live in any compatible ring."""
        acc = None
        for c in reversed(self.coefficients):
            acc = c if acc is None else acc * x + c
        return ZERO if acc is None else acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial([k * c for k, c in enumerate(self.coefficients)][1:])

    def antiderivative(self) -> "RationalPolynomial":
        """Antiderivative with zero constant term."""
        out = [ZERO]
        for k, c in enumerate(self.coefficients):
            out.append(c * Fraction(1, k + 1))
        return RationalPolynomial(out)

    def integrate_symmetric_unit(self):
        """Exact integral over [-1, 1]; odd-degree terms cancel."""
        total = ZERO
        for k in range(0, len(self.coefficients), 2):
            total += self.coefficients[k] * Fraction(2, k + 1)
        return total

    def divmod(self, other: "RationalPolynomial"):
        """Euclidean division; coefficients must form a field."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dgr = other.degree
        lead = other.leading()
        quo = [ZERO] * max(0, len(rem) - dgr)
        while len(rem) - 1 >= dgr and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < dgr:
                break
            shift = len(rem) - 1 - dgr
            factor = rem[-1] / lead
            quo[shift] = factor
            for i, c in enumerate(other.coefficients):
                rem[shift + i] = rem[shift + i] - factor * c
            rem.pop()
        return RationalPolynomial(quo), RationalPolynomial(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divexact(self, other: "RationalPolynomial") -> "RationalPolynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    # -- rational-coefficient specifics ---------------------------------

    def monic(self) -> "RationalPolynomial":
        if self.is_zero():
            return self
        lead = self.leading()
        return RationalPolynomial([c / lead for c in self.coefficients])

    def primitive_integer(self) -> "RationalPolynomial":
        """Integer-coefficient multiple with content 1 and positive lead."""
        if self.is_zero():
            return self
        den = math.lcm(*(c.denominator for c in self.coefficients))
        ints = [int(c * den) for c in self.coefficients]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return RationalPolynomial([Fraction(c, g) for c in ints])

    def shift_compose_linear(self, a, b) -> "RationalPolynomial":
        """Return p(a*z + b) by Horner composition."""
        lin = RationalPolynomial([b, a])
        acc = RationalPolynomial.zero()
        for c in reversed(self.coefficients):
            acc = acc * lin + RationalPolynomial.constant(c)
        return acc


def gcd(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """Monic polynomial gcd by Euclid's algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: RationalPolynomial) -> RationalPolynomial:
    if p.degree <= 0:
        return p.monic() if not p.is_zero() else p
    return p.divexact(gcd(p, p.derivative())).monic()


def root_multiplicity(p: RationalPolynomial, x: Fraction) -> int:
    """Multiplicity of x as a root of p (0 if not a root)."""
    factor = RationalPolynomial([-x, ONE])
    count = 0
    while not p.is_zero() and not p(x):
        p = p.divexact(factor)
        count += 1
    return count


# -- Sturm machinery ----------------------------------------------------


def sturm_chain(p: RationalPolynomial) -> list[RationalPolynomial]:
    """Canonical Sturm chain (p, p', then negated euclidean remainders)."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def sign_variations(chain: Sequence[RationalPolynomial], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_open(p: RationalPolynomial, a: Fraction, b: Fraction,
                     chain: Sequence[RationalPolynomial] | None = None) -> int:
    """Number of distinct real roots in the open interval (a, b).

    Requires p(a) != 0 and p(b) != 0; under that hypothesis the classic
    half-open Sturm count equals the open count.
    """
    if a >= b:
        raise ValueError("empty interval")
    if not p(a) or not p(b):
        raise ValueError("Sturm endpoints must not be roots")
    if chain is None:
        chain = sturm_chain(p)
    return sign_variations(chain, a) - sign_variations(chain, b)


def cauchy_root_bound(p: RationalPolynomial) -> Fraction:
    """Strict bound on the absolute value of every real root."""
    if p.degree < 1:
        return ONE
    lead = abs(p.leading())
    top = max((abs(c) for c in p.coefficients[:-1]), default=ZERO)
    return ONE + top / lead


def isolate_real_roots(p: RationalPolynomial, lo: Fraction, hi: Fraction
                       ) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the roots of a squarefree p in (lo, hi).

    p must have no rational root expressible as a binary-bisection point
    of (lo, hi); callers strip rational roots first, which guarantees it
    because every bisection point is rational.
    """
    chain = sturm_chain(p)
    if not p(lo) or not p(hi):
        raise ValueError("isolation endpoints must not be roots")
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = sign_variations(chain, a) - sign_variations(chain, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if not p(mid):
            raise ValueError("bisection hit an unstripped rational root")
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort()
    return out


def refine_root(p: RationalPolynomial, a: Fraction, b: Fraction,
                width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval with a sign change to the given width."""
    fa = p(a)
    if not fa or not p(b):
        raise ValueError("refinement endpoints must not be roots")
    sa = 1 if fa > 0 else -1
    while b - a > width:
        mid = (a + b) / 2
        fm = p(mid)
        if not fm:
            # Exact hit: return a degenerate-width bracket around the root.
            eps = width / 4
            return (mid - eps, mid + eps)
        if (1 if fm > 0 else -1) == sa:
            a = mid
        else:
            b = mid
    return (a, b)


def refine_away_from(p: RationalPolynomial, a: Fraction, b: Fraction,
                     point: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Refine until the bracket is below width and excludes the point."""
    a, b = refine_root(p, a, b, width)
    while a <= point <= b:
        a, b = refine_root(p, a, b, (b - a) / 4)
    return (a, b)


def rational_roots(p: RationalPolynomial) -> list[Fraction]:
    """All rational roots, found by the integer rational-root theorem."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots = []
    coeffs = p.primitive_integer().coefficients
    k = 0
    while not coeffs[k]:
        k += 1
    if k:
        roots.append(ZERO)
        coeffs = coeffs[k:]
    a0 = abs(int(coeffs[0]))
    an = abs(int(coeffs[-1]))
    work = RationalPolynomial(coeffs)
    for num in sorted(_divisors(a0)):
        for den in sorted(_divisors(an)):
            if math.gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if not work(cand):
                    roots.append(cand)
    return sorted(set(roots))


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return out


# -- display --------------------------------------------------------------


def decimal_string(x: Fraction, digits: int) -> str:
    """Truncated decimal expansion of x with the given fractional digits."""
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    whole, rem = divmod(num, den)
    frac = (rem * 10**digits) // den
    return f"{sign}{whole}.{str(frac).rjust(digits, '0')}"
