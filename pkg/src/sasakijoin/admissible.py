"""Exact solution and certification of the extremal momentum profile.

Admissible data (dN, sNn, r, m1, m2) determines a unique polynomial F
of degree at most dN+3 through the linear boundary value problem

    F''(z) = (1 + r z)^(dN-1) * (2*dN*sNn*r + (alpha*z + beta)*(1 + r z)),
    F(1) = F(-1) = 0,
    F'(-1) = (2/m2)*(1 - r)^dN,      F'(1) = -(2/m1)*(1 + r)^dN,

where alpha and beta are part of the unknowns.  Strict positivity of F
on (-1, 1) certifies an extremal metric in the corresponding class;
alpha = 0 is the constant scalar curvature condition (the degree of F
then drops to dN+2 or less).  All computations are exact: the linear
system is solved over the rationals and positivity is decided by Sturm
root counting, never by sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .join_core import AdmissibleData
from .linear import solve_linear_system
from .polynomial import (
    RationalPolynomial,
    decimal_string,
    isolate_real_roots,
    rational_roots,
    refine_root,
    root_multiplicity,
    squarefree_part,
    sturm_chain,
    sign_variations,
)

WITNESS_WIDTH = Fraction(1, 2**32)


@dataclass(frozen=True)
class ExtremalSolution:
    """The boundary-value solution F with its curvature coefficients."""

    F: RationalPolynomial
    alpha: Fraction
    beta: Fraction
    data: AdmissibleData


def _binomial_power(r, d: int, one) -> RationalPolynomial:
    """(1 + r*z)^d as a polynomial in z over the coefficient field of r."""
    base = RationalPolynomial([one, one * r])
    out = RationalPolynomial([one])
    for _ in range(d):
        out = out * base
    return out


def solve_boundary_value(dN: int, sNn, r, m1, m2, one=Fraction(1)):
    """Integrate the curvature identity twice and solve the 4x4 system.

    Works over any field: pass Fraction data with the default ``one``,
    or rational-function data with ``one = RationalFunction.constant(1)``.
    Returns (F, alpha, beta) with F a polynomial over that field.
    """
    zero = one - one
    z = RationalPolynomial([zero, one])
    curv_lower = _binomial_power(r, dN - 1, one)   # (1+rz)^(dN-1)
    curv_upper = curv_lower * RationalPolynomial([one, one * r])  # (1+rz)^dN
    source = curv_lower * (2 * dN * (sNn * r) * one)

    # Double antiderivatives of the three z-profiles multiplying the
    # unknowns; the two integration constants are the remaining unknowns.
    a2 = z * curv_upper
    b2 = curv_upper
    g1, a1, b1 = source.antiderivative(), a2.antiderivative(), b2.antiderivative()
    g0, a0, b0 = g1.antiderivative(), a1.antiderivative(), b1.antiderivative()

    pos, neg = one, -one
    bplus = (zero - (2 * one) / m1) * curv_upper(pos)   # F'(1)
    bminus = ((2 * one) / m2) * curv_upper(neg)         # F'(-1)

    matrix = [
        [a0(pos), b0(pos), one, one],
        [a0(neg), b0(neg), -one, one],
        [a1(pos), b1(pos), one, zero],
        [a1(neg), b1(neg), one, zero],
    ]
    rhs = [zero - g0(pos), zero - g0(neg), bplus - g1(pos), bminus - g1(neg)]
    alpha, beta, c1, c0 = solve_linear_system(
        matrix, rhs, context=f"dN={dN}, sNn={sNn}, r={r}, m1={m1}, m2={m2}")

    F = g0 + a0 * alpha + b0 * beta + RationalPolynomial([c0, c1])
    return F, alpha, beta


def solve_extremal(data: AdmissibleData) -> ExtremalSolution:
    """Unique exact solution of the extremal boundary value problem."""
    F, alpha, beta = solve_boundary_value(
        data.dN, data.sNn, data.r, data.m1, data.m2)
    return ExtremalSolution(F=F, alpha=alpha, beta=beta, data=data)


def csc_residual(data: AdmissibleData) -> Fraction:
    """alpha from the boundary-value solve; zero iff a CSC metric exists."""
    return solve_extremal(data).alpha


# -- positivity certification -------------------------------------------


@dataclass(frozen=True)
class PositivityReport:
    """Outcome of exact sign analysis on the open interval (-1, 1).

    ``positive`` means strictly positive on the whole open interval
    (simple zeros at the endpoints, which every boundary-value solution
    carries, do not count against it).  ``boundary_zero_only`` flags the
    borderline case of a nonnegative profile that touches zero at an
    interior point of even multiplicity.  ``fails`` comes with a witness
    interval of width below 2^-32 isolating an interior sign change or a
    negative sample.
    """

    status: str
    witness: tuple[Fraction, Fraction] | None
    certificate: dict


def _strip_boundary_factors(F: RationalPolynomial):
    """Factor off all (1-z) and (1+z) divisors; they are positive inside."""
    g = F
    for root, factor in ((Fraction(1), RationalPolynomial.from_ints([1, -1])),
                         (Fraction(-1), RationalPolynomial.from_ints([1, 1]))):
        while not g(root):
            g = g.divexact(factor)
    return g


def positivity(F: RationalPolynomial) -> PositivityReport:
    """Decide strict positivity of F on (-1, 1) by exact root counting."""
    if F.is_zero():
        raise ValidationError("positivity of the zero polynomial is undefined")

    g = _strip_boundary_factors(F)
    if g.degree == 0:
        value = g.leading()
        if value > 0:
            return PositivityReport("positive", None, _certificate(g, 0))
        return PositivityReport("fails", _point_witness(Fraction(0)),
                                _certificate(g, 0))

    h = squarefree_part(g)
    # Interior rational roots are found exactly and stripped so that the
    # bisection midpoints used below can never collide with a root.
    interior_rationals = [x for x in rational_roots(h) if -1 < x < 1]
    h_irr = h
    for x in interior_rationals:
        h_irr = h_irr.divexact(RationalPolynomial([-x, Fraction(1)]))

    chain = sturm_chain(h_irr)
    cert = {
        "sign_changes_at_minus_one": sign_variations(chain, Fraction(-1)),
        "sign_changes_at_one": sign_variations(chain, Fraction(1)),
    }
    brackets = []
    if h_irr.degree >= 1:
        brackets = isolate_real_roots(h_irr, Fraction(-1), Fraction(1))
    cert["interior_root_count"] = len(interior_rationals) + len(brackets)

    roots: list[tuple[Fraction, Fraction, bool]] = []  # (lo, hi, odd multiplicity)
    for x in interior_rationals:
        mult = root_multiplicity(g, x)
        eps = WITNESS_WIDTH / 4
        roots.append((x - eps, x + eps, mult % 2 == 1))
    for (lo, hi) in brackets:
        lo, hi = refine_root(h_irr, lo, hi, WITNESS_WIDTH)
        # Bisection points avoid roots of h_irr by construction, but can
        # coincide with one of the stripped rational roots of g; shrink
        # until both endpoints carry an honest sign of g.
        while not g(lo) or not g(hi):
            lo, hi = refine_root(h_irr, lo, hi, (hi - lo) / 4)
        odd = (g(lo) > 0) != (g(hi) > 0)
        roots.append((lo, hi, odd))
    roots.sort()

    if not roots:
        sample = g(Fraction(0))
        if sample > 0:
            return PositivityReport("positive", None, cert)
        return PositivityReport("fails", _point_witness(Fraction(0)), cert)

    for (lo, hi, odd) in roots:
        if odd:
            return PositivityReport("fails", (lo, hi), cert)

    # Even-multiplicity touches only: away from the touch points g keeps
    # one ambient sign, read off at any non-root sample.
    sample = _nonroot_sample(g)
    if sample > 0:
        return PositivityReport("boundary_zero_only", (roots[0][0], roots[0][1]), cert)
    return PositivityReport("fails", (roots[0][0], roots[0][1]), cert)


def _nonroot_sample(g: RationalPolynomial) -> Fraction:
    """Value of g at some interior point that is not a root."""
    cells = g.degree + 2
    for k in range(1, cells):
        value = g(Fraction(2 * k, cells) - 1)
        if value:
            return value
    raise AssertionError("polynomial cannot vanish at more points than its degree")


def _point_witness(x: Fraction) -> tuple[Fraction, Fraction]:
    eps = WITNESS_WIDTH / 4
    return (x - eps, x + eps)


def _certificate(g: RationalPolynomial, interior: int) -> dict:
    chain = sturm_chain(g) if g.degree >= 1 else [g]
    return {
        "sign_changes_at_minus_one": sign_variations(chain, Fraction(-1)),
        "sign_changes_at_one": sign_variations(chain, Fraction(1)),
        "interior_root_count": interior,
    }


def extremal_exists(data: AdmissibleData) -> str:
    """Existence verdict for an extremal metric at this data.

    Positivity of F settles existence on trivial orbifold structures
    (m1 = m2 = 1); with nontrivial ramification a failed profile only
    means this construction does not provide the metric.
    """
    sol = solve_extremal(data)
    report = positivity(sol.F)
    if report.status == "positive":
        return "exists_admissible"
    if data.m1 == 1 and data.m2 == 1:
        return "no_admissible_manifold_case"
    return "unknown_orbifold"


# -- constant scalar curvature closed form -------------------------------


@dataclass(frozen=True)
class CscClosedForm:
    k: Fraction
    c: Fraction
    residual: Fraction


def csc_closed_form(data: AdmissibleData, literal_scalar_term: bool = False) -> CscClosedForm:
    """Closed-form CSC criterion with explicit k and c coefficients.

    The constant c is evaluated with the scalar term 2*m1*m2*sNn*r; the
    printed-source variant without the factor r is available through
    ``literal_scalar_term=True``, and the two readings disagree (the
    boundary-value solve sides with the corrected one; see the test
    suite, which logs the discrepancy at a CSC datum).  The residual
    vanishes exactly when the solved alpha does, and then k = -beta.
    """
    d, s, r, m1, m2 = data.dN, data.sNn, data.r, data.m1, data.m2
    plus1 = (1 + r) ** (d + 1)
    minus1 = (1 - r) ** (d + 1)
    plus2 = (1 + r) ** (d + 2)
    minus2 = (1 - r) ** (d + 2)
    bracket = m1 * m2 * (plus1 - minus1)

    k = (2 * (d + 1) * r
         * (m2 * (1 + r) ** d * (1 + m1 * s) - m1 * (1 - r) ** d * (-1 + m2 * s))
         / bracket)
    scalar_term = 2 * m1 * m2 * s * (1 if literal_scalar_term else r)
    c = (2 * (1 - r * r) ** d * (m2 * (1 - r) + m1 * (1 + r) - scalar_term)
         / bracket)
    residual = (2 * s * (plus1 - minus1) / (r * (d + 1))
                - k * (plus2 - minus2) / (r * r * (d + 1) * (d + 2))
                + 2 * c)
    return CscClosedForm(k=k, c=c, residual=residual)


# -- Kähler-Einstein criterion --------------------------------------------


@dataclass(frozen=True)
class KeResiduals:
    fano_residual: Fraction
    integral_residual: Fraction

    def vanish(self) -> bool:
        return not self.fano_residual and not self.integral_residual


def ke_residuals(data: AdmissibleData, fano_index: int, n: int) -> KeResiduals:
    """Both Einstein obstructions, evaluated exactly.

    Requires a Kähler-Einstein base normalization sNn = fano_index/n.
    The first residual is 2*r*I/n - (1+r)/m2 - (1-r)/m1; the second is
    the exact value of the first-moment integral
    int_{-1}^{1} ((1-z)/m2 - (1+z)/m1) (1+rz)^dN dz,
    computed by polynomial antidifferentiation.  An Einstein metric
    exists in the class exactly when both vanish.
    """
    if n == 0:
        raise ValidationError("n must be nonzero")
    if data.sNn != Fraction(fano_index, n):
        raise ValidationError(
            f"sNn = {data.sNn} does not match fano_index/n = {Fraction(fano_index, n)}")
    r, m1, m2, d = data.r, data.m1, data.m2, data.dN
    fano = 2 * r * Fraction(fano_index, n) - (1 + r) / m2 - (1 - r) / m1

    one = Fraction(1)
    weight = _binomial_power(r, d, one)
    profile = (RationalPolynomial([one, -one]) * (one / m2)
               - RationalPolynomial([one, one]) * (one / m1))
    integral = (profile * weight).integrate_symmetric_unit()
    return KeResiduals(fano_residual=fano, integral_residual=integral)


def solution_to_json_dict(sol: ExtremalSolution, report: PositivityReport | None = None) -> dict:
    """Canonical JSON form: coefficients and scalars as reduced 'p/q'."""
    if report is None:
        report = positivity(sol.F)
    payload = {
        "F": [str(c) for c in sol.F.coefficients],
        "alpha": str(sol.alpha),
        "beta": str(sol.beta),
        "positivity": positivity_to_json_dict(report),
    }
    return payload


def positivity_to_json_dict(report: PositivityReport) -> dict:
    out: dict = {"status": report.status, "certificate": report.certificate}
    if report.witness is not None:
        lo, hi = report.witness
        out["witness"] = {
            "interval": [str(lo), str(hi)],
            "approx": decimal_string((lo + hi) / 2, 12),
        }
    return out
