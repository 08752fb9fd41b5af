"""Exception hierarchy.

Two broad classes matter for scripting: input/validation failures (the
CLI maps these to exit code 2) and mathematical failures surfaced from
exact computations (exit code 3).  Every error message names the violated
condition so batch logs stay self-explanatory.
"""


class SasakiError(Exception):
    """Base class for all package errors."""


class ValidationError(SasakiError):
    """Input data violates a structural precondition."""


class WeightsNotCoprime(ValidationError):
    """gcd(w1, w2) != 1."""


class WeightsUnordered(ValidationError):
    """w1 < w2; weight vectors must be ordered, never silently swapped."""


class AdmissibilityGcdFailure(ValidationError):
    """gcd(l2, l1*w1*w2) != 1."""


class DegenerateRay(ValidationError):
    """The ray is proportional to the weight vector (w1*v2 == w2*v1)."""


class NotQuasiMonotone(ValidationError):
    """The base geometry carries no quasi-monotone index."""


class UnsupportedDimension(ValidationError):
    """Sphere-join ring presentations require p >= 2."""


class BaseMismatch(ValidationError):
    """Contact comparison requires matching base geometry and l2."""


class InvalidPQ(ValidationError):
    """(p, q) must satisfy 1 <= q < p with gcd(p, q) = 1."""


class MathematicalError(SasakiError):
    """An exact computation reached a state it must surface, not patch."""


class SingularSystem(MathematicalError):
    """The boundary-value linear system is singular at the given data."""


class DegenerateFamily(MathematicalError):
    """A ray-family residual is identically zero."""


class NoPositiveRoot(MathematicalError):
    """An Einstein ray equation has no positive root."""
