"""Sweeps of the two-dimensional ray cone: CSC roots, Einstein rays, searches.

Rays are parametrized by t = v2/v1 in (0, infinity), with the single
degenerate value t = w2/w1 (where the ray is proportional to the weight
vector) excluded.  Composing the boundary-value solve with the quotient
data in the s:=1 normalization turns the scalar-curvature coefficient
alpha into one exact rational function of t per join; its positive real
roots are the CSC rays.  Root isolation is Sturm bisection on exact
signs, rational roots are recognized by the integer rational-root
theorem, and quadratic roots carry their minimal polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .admissible import positivity, solve_boundary_value, solve_extremal
from .errors import DegenerateFamily, DegenerateRay, MathematicalError, NoPositiveRoot, ValidationError
from .join_core import (
    AdmissibleData,
    BaseGeometry,
    JoinSpec,
    RayVector,
    WeightVector,
    admissible_data_for_ray,
    relative_fano_indices,
    riemann_surface,
    validate_join,
)
from .polynomial import (
    RationalPolynomial,
    cauchy_root_bound,
    count_roots_open,
    decimal_string,
    isolate_real_roots,
    rational_roots,
    refine_away_from,
    refine_root,
    squarefree_part,
)
from .ratfunc import RationalFunction

DEFAULT_PRECISION_BITS = 64


@dataclass(frozen=True)
class RayFunction:
    """Exact rational function t -> alpha(data(t)) for one join.

    ``numerator`` and ``denominator`` are integer-primitive with positive
    denominator lead, jointly scaled so their quotient is untouched; they
    share no common factor.  The numerator degree is 2*dN + 1 in terms of
    the base complex dimension dN.
    """

    join: JoinSpec
    numerator: RationalPolynomial
    denominator: RationalPolynomial
    excluded_t: Fraction

    def __call__(self, t: Fraction) -> Fraction:
        if t == self.excluded_t:
            raise DegenerateRay(f"t = {t} is the degenerate ray value")
        return self.numerator(t) / self.denominator(t)


def build_csc_ray_function(join: JoinSpec) -> RayFunction:
    """Run the boundary-value solve with a symbolic ray parameter.

    The substitutions are v = (1, t): m1 = l2, m2 = t*l2,
    r = (w1*t - w2)/(w1*t + w2), and the s:=1 scalar normalization
    sigma/(l1*(w1*t - w2)).  The resulting alpha is reduced to lowest
    terms; its value at any admissible rational t equals the alpha of
    the corresponding concrete solve exactly.
    """
    one = RationalFunction.constant(1)
    t = RationalFunction.variable()
    w1, w2 = join.w.w1, join.w.w2
    q = w1 * t - w2
    u = w1 * t + w2
    r = q / u
    m1 = RationalFunction.constant(join.l2)
    m2 = t * join.l2
    sNn = RationalFunction.constant(join.base.sigma) / (join.l1 * q)

    _, alpha, _ = solve_boundary_value(join.base.dN, sNn, r, m1, m2, one=one)
    if not alpha:
        raise DegenerateFamily(
            f"scalar-curvature residual is identically zero for {join}")
    num, den = _normalize_quotient(alpha.num, alpha.den)
    return RayFunction(join=join, numerator=num, denominator=den,
                       excluded_t=Fraction(w2, w1))


def _normalize_quotient(num: RationalPolynomial, den: RationalPolynomial):
    """Scale both polynomials by one rational so each is integer-primitive."""
    scale = Fraction(math.lcm(*(c.denominator for c in num.coefficients + den.coefficients)))
    ints = [int(c * scale) for c in num.coefficients] + \
           [int(c * scale) for c in den.coefficients]
    g = math.gcd(*ints)
    if int(den.leading() * scale) < 0:
        g = -g
    factor = scale / g
    return num.scale(factor), den.scale(factor)


@dataclass(frozen=True)
class RootRecord:
    """One isolated CSC (or Einstein) ray."""

    isolating_interval: tuple[Fraction, Fraction]
    approx: str
    side: str                                   # r_positive | r_negative
    rational_value: Fraction | None = None
    algebraic_degree: int | None = None
    minimal_polynomial: RationalPolynomial | None = None
    sign_change_confirmed: bool = True

    def midpoint(self) -> Fraction:
        lo, hi = self.isolating_interval
        return (lo + hi) / 2


@dataclass(frozen=True)
class ScanReport:
    join: JoinSpec
    roots: tuple[RootRecord, ...]
    bound_check: bool
    positivity_failures: tuple[dict, ...]
    degenerate_ray_csc: bool
    precision_bits: int


def check_multiplicity_bound(join: JoinSpec) -> bool:
    """Sufficient condition for at least three CSC rays in the cone."""
    if (join.w.w1, join.w.w2) == (1, 1):
        return 2 * join.l2 > 11 * join.l1
    return 2 * join.l2 > 16 * join.l1 * join.w.w1 - 5 * join.l1 * join.w.w2


def _approx_digits(precision_bits: int) -> int:
    return max(12, (precision_bits * 30103) // 100000)


def _unit_s_alpha(join: JoinSpec, t: Fraction) -> Fraction:
    data = admissible_data_for_ray(join, RayVector(Fraction(1), t), "unit_s")
    return solve_extremal(data).alpha


def find_csc_rays(join: JoinSpec,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> ScanReport:
    """Isolate every CSC ray of the join as an exact numerator root.

    Each reported root is cross-checked against the concrete solver: the
    scalar-curvature coefficient is recomputed at rational points on both
    sides of the isolating interval and must change sign there.  The
    positivity of those probe profiles is recorded; failures feed the
    ``positivity_failures`` list.

    For w = (1, 1) the numerator always vanishes at the excluded value
    t = 1, reflecting the product structure transverse to the degenerate
    ray, which carries a CSC metric outside this parametrization; the
    report flags that case instead of listing a root there.
    """
    if precision_bits < 1:
        raise ValidationError("precision_bits must be positive")
    rf = build_csc_ray_function(join)
    width = Fraction(1, 2**precision_bits)
    excluded = rf.excluded_t

    numerator = rf.numerator
    degenerate_csc = not numerator(excluded)
    sf = squarefree_part(numerator).primitive_integer()

    rats = rational_roots(sf)
    deflated = sf
    for x in rats:
        deflated = deflated.divexact(RationalPolynomial([-x, Fraction(1)]))

    brackets: list[tuple[Fraction, Fraction]] = []
    if deflated.degree >= 1:
        bound = cauchy_root_bound(deflated)
        brackets = isolate_real_roots(deflated, Fraction(0), bound)

    positive_rats = [x for x in rats if x > 0 and x != excluded]
    landmarks = sorted(positive_rats + [excluded] + [b[0] for b in brackets]
                       + [b[1] for b in brackets])

    records: list[RootRecord] = []
    probes: list[Fraction] = []
    digits = _approx_digits(precision_bits)

    for x in positive_rats:
        gaps = [abs(x - p) for p in landmarks if p != x]
        eps = min([width] + [g / 2 for g in gaps if g] + [x / 2])
        lo, hi = x - eps, x + eps
        if deflated.degree >= 1:
            # Guarantee no irrational numerator root sneaks into the bracket.
            while count_roots_open(deflated, lo, hi):
                eps /= 4
                lo, hi = x - eps, x + eps
        minpoly = RationalPolynomial([-x, Fraction(1)]).primitive_integer()
        records.append(RootRecord(
            isolating_interval=(lo, hi),
            approx=decimal_string(x, digits),
            side="r_negative" if x < excluded else "r_positive",
            rational_value=x,
            algebraic_degree=1,
            minimal_polynomial=minpoly,
            sign_change_confirmed=_confirm_sign_change(join, lo, hi),
        ))
        probes.extend((lo, hi))

    quad = deflated.primitive_integer() if deflated.degree == 2 else None
    for (lo, hi) in brackets:
        lo, hi = refine_away_from(deflated, lo, hi, excluded, width)
        for x in rats:
            while lo <= x <= hi:
                lo, hi = refine_root(deflated, lo, hi, (hi - lo) / 4)
        while lo <= 0:
            lo, hi = refine_root(deflated, lo, hi, (hi - lo) / 4)
        records.append(RootRecord(
            isolating_interval=(lo, hi),
            approx=decimal_string((lo + hi) / 2, digits),
            side="r_negative" if hi < excluded else "r_positive",
            rational_value=None,
            algebraic_degree=2 if quad is not None else None,
            minimal_polynomial=quad,
            sign_change_confirmed=_confirm_sign_change(join, lo, hi),
        ))
        probes.extend((lo, hi))

    records.sort(key=lambda rec: rec.isolating_interval)

    failures = []
    for t in sorted(set(probes)):
        data = admissible_data_for_ray(join, RayVector(Fraction(1), t), "unit_s")
        report = positivity(solve_extremal(data).F)
        if report.status != "positive":
            failures.append({"t": t, "status": report.status})

    return ScanReport(join=join, roots=tuple(records),
                      bound_check=check_multiplicity_bound(join),
                      positivity_failures=tuple(failures),
                      degenerate_ray_csc=degenerate_csc,
                      precision_bits=precision_bits)


def _confirm_sign_change(join: JoinSpec, lo: Fraction, hi: Fraction) -> bool:
    return (_unit_s_alpha(join, lo) > 0) != (_unit_s_alpha(join, hi) > 0)


# -- grids and searches -----------------------------------------------------


def default_ray_grid(count: int = 50) -> list[RayVector]:
    """Deterministic list of coprime integer rays ordered by height."""
    grid: list[RayVector] = []
    height = 2
    while len(grid) < count:
        for a in range(1, height):
            b = height - a
            if math.gcd(a, b) == 1:
                grid.append(RayVector(Fraction(a), Fraction(b)))
                if len(grid) == count:
                    break
        height += 1
    return grid


def exhaustion_scan(join: JoinSpec, ray_grid: list[RayVector]) -> dict:
    """Positivity of the extremal profile on every grid ray.

    Degenerate rays are recorded and skipped, not fatal.  For bases with
    nonnegative sigma every entry is expected positive.
    """
    entries = []
    all_positive = True
    for v in ray_grid:
        key = {"v1": v.v1, "v2": v.v2}
        try:
            data = admissible_data_for_ray(join, v)
        except DegenerateRay:
            entries.append({**key, "status": "degenerate_ray"})
            continue
        sol = solve_extremal(data)
        report = positivity(sol.F)
        entries.append({**key, "status": report.status,
                        "csc": not sol.alpha})
        if report.status != "positive":
            all_positive = False
    return {"join": join, "entries": entries, "all_positive": all_positive}


@dataclass(frozen=True)
class FailingRayRecord:
    genus: int
    l1: int
    w1: int
    w2: int
    data: AdmissibleData
    status: str
    witness: tuple[Fraction, Fraction] | None


def nonexistence_search(genus_range, l1_max: int, w_max: int) -> list[FailingRayRecord]:
    """Hunt for regular rays whose extremal profile fails positivity.

    Sweeps, for each genus in the range, the box l1 <= l1_max and
    coprime w1 > w2 with w1 <= w_max at l2 = 1, building the regular-ray
    datum (dN=1, r=(w1-w2)/(w1+w2), m1=m2=1, sNn=(2-2g)/(l1(w1-w2)))
    and recording every positivity failure.  Cells with w1 = w2 carry
    r = 0 and are skipped.
    """
    genera = list(genus_range)
    if any(g < 1 for g in genera):
        raise ValidationError("nonexistence search requires genus >= 1")
    if l1_max < 1 or w_max < 1:
        raise ValidationError("box bounds must be positive")

    failures: list[FailingRayRecord] = []
    one = Fraction(1)
    for genus in genera:
        chi = Fraction(2 - 2 * genus)
        for w1 in range(2, w_max + 1):
            for w2 in range(1, w1):
                if math.gcd(w1, w2) != 1:
                    continue
                r = Fraction(w1 - w2, w1 + w2)
                for l1 in range(1, l1_max + 1):
                    data = AdmissibleData(dN=1, sNn=chi / (l1 * (w1 - w2)),
                                          r=r, m1=one, m2=one)
                    report = positivity(solve_extremal(data).F)
                    if report.status != "positive":
                        failures.append(FailingRayRecord(
                            genus=genus, l1=l1, w1=w1, w2=w2, data=data,
                            status=report.status, witness=report.witness))
    failures.sort(key=lambda f: (f.genus, f.l1, f.w1, f.w2))
    return failures


# -- Einstein rays -----------------------------------------------------------


@dataclass(frozen=True)
class EinsteinRaySolution:
    join: JoinSpec
    record: RootRecord
    moment_polynomial: RationalPolynomial
    fano_residual_exact_zero: bool
    csc_member_confirmed: bool


def einstein_moment_polynomial(join: JoinSpec) -> RationalPolynomial:
    """Integer-primitive polynomial in t whose positive root is Einstein.

    Encodes the vanishing of the exact first-moment integral
    int_{-1}^{1} ((1-z)/m2 - (1+z)/m1)(1+rz)^dN dz under the ray
    substitutions; degree is dN + 1.
    """
    one = RationalFunction.constant(1)
    t = RationalFunction.variable()
    w1, w2 = join.w.w1, join.w.w2
    r = (w1 * t - w2) / (w1 * t + w2)
    m1 = RationalFunction.constant(join.l2)
    m2 = t * join.l2

    base = RationalPolynomial([one, one * r])
    weight = RationalPolynomial([one])
    for _ in range(join.base.dN):
        weight = weight * base
    profile = (RationalPolynomial([one, -one]) * (one / m2)
               - RationalPolynomial([one, one]) * (one / m1))
    integral = (profile * weight).integrate_symmetric_unit()
    if not integral:
        raise DegenerateFamily(f"Einstein moment residual vanishes identically for {join}")
    return integral.num.primitive_integer()


def _fano_alignment_residual(join: JoinSpec) -> RationalFunction:
    """The class-alignment residual as an exact function of t.

    Vanishes identically precisely when I*l2 = l1*(w1+w2), which the
    relative Fano indices guarantee.
    """
    t = RationalFunction.variable()
    w1, w2 = join.w.w1, join.w.w2
    q = w1 * t - w2
    u = w1 * t + w2
    r = q / u
    m1 = RationalFunction.constant(join.l2)
    m2 = t * join.l2
    sNn = RationalFunction.constant(Fraction(join.base.fano_index)) / (join.l1 * q)
    return 2 * r * sNn - (1 + r) / m2 - (1 - r) / m1


def ke_ray_solve(base: BaseGeometry, w: WeightVector,
                 precision_bits: int = DEFAULT_PRECISION_BITS) -> EinsteinRaySolution:
    """Solve for the Einstein ray of the join built on relative Fano indices.

    The moment polynomial is solved exactly; the class-alignment residual
    is verified to vanish identically in t.  The root is confirmed to be
    one of the CSC rays found by the full scan (its minimal polynomial
    divides the scan numerator).  A missing positive root would contradict
    the existence theorem and is surfaced loudly.
    """
    if not base.kahler_einstein or base.fano_index is None or base.fano_index < 1:
        raise ValidationError(
            f"Einstein ray solve needs a positive Kähler-Einstein base, got {base.name!r}")
    l1, l2 = relative_fano_indices(base.fano_index, w)
    join = validate_join(base, l1, l2, w)

    poly = einstein_moment_polynomial(join)
    record = _isolate_unique_positive_root(poly, Fraction(w.w2, w.w1), precision_bits)

    fano_zero = not _fano_alignment_residual(join)

    scan = find_csc_rays(join, precision_bits)
    confirmed = _root_among(record, scan)

    if not confirmed:
        raise MathematicalError(
            f"Einstein ray of {join} missing from the CSC scan; this contradicts "
            "the existence theorem and indicates a defect")
    return EinsteinRaySolution(join=join, record=record, moment_polynomial=poly,
                               fano_residual_exact_zero=fano_zero,
                               csc_member_confirmed=confirmed)


def _isolate_unique_positive_root(poly: RationalPolynomial, excluded: Fraction,
                                  precision_bits: int) -> RootRecord:
    width = Fraction(1, 2**precision_bits)
    digits = _approx_digits(precision_bits)
    sf = squarefree_part(poly).primitive_integer()
    rats = [x for x in rational_roots(sf)]
    deflated = sf
    for x in rats:
        deflated = deflated.divexact(RationalPolynomial([-x, Fraction(1)]))

    candidates: list[RootRecord] = []
    for x in rats:
        if x <= 0:
            continue
        # The symmetric m1 = m2 case puts the Einstein ray exactly on the
        # degenerate product value; it is reported with its own side tag.
        if x == excluded:
            side = "degenerate_product"
            eps = min(width, x / 2)
        else:
            side = "r_negative" if x < excluded else "r_positive"
            eps = min(width, x / 2, abs(x - excluded) / 2)
        candidates.append(RootRecord(
            isolating_interval=(x - eps, x + eps),
            approx=decimal_string(x, digits),
            side=side,
            rational_value=x,
            algebraic_degree=1,
            minimal_polynomial=RationalPolynomial([-x, Fraction(1)]).primitive_integer(),
        ))
    if deflated.degree >= 1:
        quad = deflated if deflated.degree == 2 else None
        bound = cauchy_root_bound(deflated)
        for (lo, hi) in isolate_real_roots(deflated, Fraction(0), bound):
            lo, hi = refine_away_from(deflated, lo, hi, excluded, width)
            candidates.append(RootRecord(
                isolating_interval=(lo, hi),
                approx=decimal_string((lo + hi) / 2, digits),
                side="r_negative" if hi < excluded else "r_positive",
                rational_value=None,
                algebraic_degree=2 if quad is not None else None,
                minimal_polynomial=quad,
            ))
    if not candidates:
        raise NoPositiveRoot(
            "Einstein moment polynomial has no positive root; this contradicts "
            "the existence theorem for Fano Kähler-Einstein bases")
    if len(candidates) > 1:
        raise MathematicalError(
            f"Einstein moment polynomial has {len(candidates)} positive roots; "
            "uniqueness is expected")
    return candidates[0]


def _root_among(record: RootRecord, scan: ScanReport) -> bool:
    if record.side == "degenerate_product":
        # The scan excludes the product ray by construction; its numerator
        # vanishing there is the matching certificate.
        return scan.degenerate_ray_csc
    if record.rational_value is not None:
        return any(rec.rational_value == record.rational_value for rec in scan.roots)
    if record.minimal_polynomial is None:
        return _interval_overlap(record, scan)
    # Exact containment: the minimal polynomial must divide the scan
    # numerator, and the isolating intervals must agree on the root.
    rf = build_csc_ray_function(scan.join)
    if rf.numerator % record.minimal_polynomial.monic():
        return False
    return _interval_overlap(record, scan)


def _interval_overlap(record: RootRecord, scan: ScanReport) -> bool:
    lo, hi = record.isolating_interval
    for rec in scan.roots:
        slo, shi = rec.isolating_interval
        if max(lo, slo) < min(hi, shi):
            return True
    return False
