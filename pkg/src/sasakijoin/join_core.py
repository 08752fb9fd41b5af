"""Discrete data of joins with weighted 3-spheres, in exact arithmetic.

A join is determined by a base geometry (an S^1-bundle over a constant
scalar curvature Kähler manifold N), a pair of positive integers
(l1, l2), and a weight vector w = (w1, w2).  Choosing a ray v in the
two-dimensional cone spanned by the sphere torus produces a quotient
orbifold whose fiber data (ramification indices, twist n, class
parameter r) feed the momentum-profile boundary value problem.

Everything here is pure arbitrary-precision rational arithmetic; the
functions are safe to call concurrently without restriction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AdmissibilityGcdFailure,
    DegenerateRay,
    NotQuasiMonotone,
    ValidationError,
    WeightsNotCoprime,
    WeightsUnordered,
)


@dataclass(frozen=True)
class WeightVector:
    """Ordered coprime sphere weights, w1 >= w2 >= 1."""

    w1: int
    w2: int

    def __post_init__(self):
        if self.w1 < 1 or self.w2 < 1:
            raise ValidationError("weights must be positive integers")
        if math.gcd(self.w1, self.w2) != 1:
            raise WeightsNotCoprime(
                f"gcd(w1, w2) = gcd({self.w1}, {self.w2}) = "
                f"{math.gcd(self.w1, self.w2)} != 1")
        if self.w1 < self.w2:
            raise WeightsUnordered(f"w1 = {self.w1} < w2 = {self.w2}")

    @property
    def total(self) -> int:
        return self.w1 + self.w2


@dataclass(frozen=True)
class BaseGeometry:
    """Constant scalar curvature base with normalized average scalar sigma.

    ``sigma`` is pinned so that the level-n bundle's scalar normalization
    equals sigma/n; for quasi-monotone bases sigma coincides with the
    (sign-sensitive) monotonicity index, and for a genus-g surface
    Gauss-Bonnet gives sigma = 2 - 2g.
    """

    name: str
    dN: int
    sigma: Fraction
    fano_index: int | None = None
    kahler_einstein: bool = False

    def __post_init__(self):
        if self.dN < 1:
            raise ValidationError("dN must be a positive integer")
        if self.kahler_einstein:
            if self.fano_index is None:
                raise ValidationError(
                    f"Kähler-Einstein base {self.name!r} needs a fano_index")
            if self.sigma != Fraction(self.fano_index):
                raise ValidationError(
                    f"Kähler-Einstein base {self.name!r} must have sigma == fano_index")


CP1 = BaseGeometry("CP1", dN=1, sigma=Fraction(2), fano_index=2, kahler_einstein=True)
CP2 = BaseGeometry("CP2", dN=2, sigma=Fraction(3), fano_index=3, kahler_einstein=True)
K3 = BaseGeometry("K3", dN=2, sigma=Fraction(0), fano_index=0, kahler_einstein=True)


def riemann_surface(genus: int) -> BaseGeometry:
    """Genus-g surface with its constant curvature metric."""
    if genus < 0:
        raise ValidationError("genus must be nonnegative")
    if genus == 0:
        return CP1
    chi = 2 - 2 * genus
    return BaseGeometry(f"RiemannSurface({genus})", dN=1, sigma=Fraction(chi),
                        fano_index=chi, kahler_einstein=True)


_CATALOG = {"cp1": CP1, "cp2": CP2, "k3": K3}


def base_by_name(name: str) -> BaseGeometry:
    """Resolve a catalog name; ``riemann:<g>`` selects a genus-g surface."""
    key = name.strip().lower()
    if key in _CATALOG:
        return _CATALOG[key]
    if key.startswith("riemann:"):
        return riemann_surface(int(key.split(":", 1)[1]))
    raise ValidationError(f"unknown base geometry {name!r}")


def load_base_catalog(text: str) -> dict[str, BaseGeometry]:
    """Parse a JSON catalog: [{name, dN, sigma: "p/q", fano_index?, kahler_einstein}]."""
    entries = json.loads(text)
    catalog = {}
    for e in entries:
        base = BaseGeometry(
            name=e["name"],
            dN=int(e["dN"]),
            sigma=Fraction(str(e["sigma"])),
            fano_index=int(e["fano_index"]) if e.get("fano_index") is not None else None,
            kahler_einstein=bool(e.get("kahler_einstein", False)),
        )
        catalog[base.name.lower()] = base
    return catalog


@dataclass(frozen=True)
class JoinSpec:
    """A validated join: base, (l1, l2), and the sphere weights."""

    base: BaseGeometry
    l1: int
    l2: int
    w: WeightVector


def validate_join(base: BaseGeometry, l1: int, l2: int,
                  w: tuple[int, int] | WeightVector) -> JoinSpec:
    """Check the join admissibility conditions and normalize.

    Requires gcd(w1, w2) = 1 with w1 >= w2 (unordered input is rejected,
    not swapped) and gcd(l2, l1*w1*w2) = 1, which also forces
    gcd(l1, l2) = 1.
    """
    if l1 < 1 or l2 < 1:
        raise ValidationError("l1 and l2 must be positive integers")
    weights = w if isinstance(w, WeightVector) else WeightVector(*w)
    g = math.gcd(l2, l1 * weights.w1 * weights.w2)
    if g != 1:
        raise AdmissibilityGcdFailure(
            f"gcd(l2, l1*w1*w2) = gcd({l2}, {l1 * weights.w1 * weights.w2}) = {g} != 1")
    return JoinSpec(base=base, l1=l1, l2=l2, w=weights)


@dataclass(frozen=True)
class RayVector:
    """A ray v1*H1 + v2*H2 in the weighted cone, v1, v2 > 0.

    Quasi-regular rays have coprime positive integer components; general
    (irregular) rays may carry arbitrary positive rationals.
    """

    v1: Fraction
    v2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "v1", Fraction(self.v1))
        object.__setattr__(self, "v2", Fraction(self.v2))
        if self.v1 <= 0 or self.v2 <= 0:
            raise ValidationError("ray components must be positive")

    def is_quasi_regular(self) -> bool:
        return (self.v1.denominator == 1 and self.v2.denominator == 1
                and math.gcd(self.v1.numerator, self.v2.numerator) == 1)


@dataclass(frozen=True)
class FiberQuotientData:
    """Quotient orbifold data of a quasi-regular ray.

    q = w1*v2 - w2*v1 measures the twist against the weight vector;
    s = gcd(|q|, l2); m = l2/s; the ramification indices are m_i = v_i*m;
    n = l1*q/s; and r = q/(w1*v2 + w2*v1) is the induced class parameter.
    """

    q: int
    s: int
    m: int
    m1: int
    m2: int
    n: int
    r: Fraction


def fiber_quotient(join: JoinSpec, v: RayVector) -> FiberQuotientData:
    """Exact quotient data for a quasi-regular (coprime integer) ray."""
    if not v.is_quasi_regular():
        raise ValidationError(
            f"fiber_quotient needs a quasi-regular ray, got ({v.v1}, {v.v2})")
    v1, v2 = int(v.v1), int(v.v2)
    q = join.w.w1 * v2 - join.w.w2 * v1
    if q == 0:
        raise DegenerateRay(
            f"ray ({v1}, {v2}) is proportional to w = ({join.w.w1}, {join.w.w2})")
    s = math.gcd(abs(q), join.l2)
    m = join.l2 // s
    n, rem = divmod(join.l1 * q, s)
    assert rem == 0
    r = Fraction(q, join.w.w1 * v2 + join.w.w2 * v1)
    return FiberQuotientData(q=q, s=s, m=m, m1=v1 * m, m2=v2 * m, n=n, r=r)


def classify_ray(join: JoinSpec, v: RayVector) -> str:
    """Reeb orbit type: 'regular', 'almost_regular', or 'quasi_regular'.

    The ray v = (1, 1) is the distinguished almost regular one; it is
    regular exactly when s = l2, i.e. when l2 divides l1*(w1 - w2).
    """
    data = fiber_quotient(join, v)
    if (v.v1, v.v2) == (1, 1):
        return "regular" if data.s == join.l2 else "almost_regular"
    return "quasi_regular"


@dataclass(frozen=True)
class AdmissibleData:
    """Inputs of the momentum-profile boundary value problem."""

    dN: int
    sNn: Fraction
    r: Fraction
    m1: Fraction
    m2: Fraction

    def __post_init__(self):
        if self.dN < 1:
            raise ValidationError("dN must be a positive integer")
        if self.m1 <= 0 or self.m2 <= 0:
            raise ValidationError("ramification values must be positive")
        if not 0 < abs(self.r) < 1:
            raise ValidationError(f"need 0 < |r| < 1, got r = {self.r}")


def admissible_data_for_ray(join: JoinSpec, v: RayVector,
                            convention: str = "auto") -> AdmissibleData:
    """Admissible data attached to a ray of the weighted cone.

    For coprime integer rays the true orbifold data is used, with
    sNn = sigma/n.  Non-integer or non-coprime rays (and the explicit
    ``convention="unit_s"``) use the s:=1 normalization m_i = v_i*l2,
    sNn = sigma/(l1*q); rescaling a ray by a positive factor then scales
    (m1, m2) up and sNn down by the same factor, which leaves the zero
    set of the scalar-curvature residual unchanged.
    """
    if convention not in ("auto", "orbifold", "unit_s"):
        raise ValidationError(f"unknown convention {convention!r}")
    if convention == "auto":
        convention = "orbifold" if v.is_quasi_regular() else "unit_s"
    if convention == "orbifold":
        data = fiber_quotient(join, v)
        return AdmissibleData(dN=join.base.dN, sNn=join.base.sigma / data.n,
                              r=data.r, m1=Fraction(data.m1), m2=Fraction(data.m2))
    q = join.w.w1 * v.v2 - join.w.w2 * v.v1
    if q == 0:
        raise DegenerateRay(
            f"ray ({v.v1}, {v.v2}) is proportional to w = ({join.w.w1}, {join.w.w2})")
    r = Fraction(q, join.w.w1 * v.v2 + join.w.w2 * v.v1)
    return AdmissibleData(dN=join.base.dN, sNn=join.base.sigma / (join.l1 * q),
                          r=r, m1=v.v1 * join.l2, m2=v.v2 * join.l2)


def relative_fano_indices(fano_index: int, w: WeightVector) -> tuple[int, int]:
    """The coprime pair (l1, l2) aligning the join's monotone class.

    l1 = I/gcd(w1+w2, I) and l2 = (w1+w2)/gcd(w1+w2, I); these always
    come out coprime, and they satisfy I*l2 = l1*(w1+w2).
    """
    if fano_index < 1:
        raise ValidationError("relative Fano indices need a positive index")
    g = math.gcd(w.total, fano_index)
    return fano_index // g, w.total // g


def contact_invariants(join: JoinSpec) -> dict[str, int]:
    """First Chern coefficient of the contact bundle, and its mod-2 class.

    Requires a quasi-monotone base; then c1 of the contact bundle equals
    (l2*I - l1*(w1+w2)) times the degree-2 generator, and the second
    Stiefel-Whitney class is its mod-2 reduction.
    """
    if join.base.fano_index is None:
        raise NotQuasiMonotone(
            f"base {join.base.name!r} has no quasi-monotone index")
    c1 = join.l2 * join.base.fano_index - join.l1 * join.w.total
    return {"c1_coefficient": c1, "w2_class": c1 % 2}
