"""Exception hierarchy.  Every error carries a machine readable ``code``."""


class DelsarteError(Exception):
    code = "error"


class ValidationError(DelsarteError):
    """Input data violates an invariant of :class:`~delsarte.lattice.ExponentData`."""

    code = "validation"


class SingularMatrix(ValidationError):
    code = "singular_matrix"


class NotInterior(ValidationError):
    code = "not_interior"


class ParseError(ValidationError):
    code = "parse_error"


class GcdViolation(ValidationError):
    code = "gcd_violation"


class TooLarge(ValidationError):
    code = "too_large"


class NotInRing(DelsarteError):
    code = "not_in_ring"


class NotInCone(DelsarteError):
    code = "not_in_cone"


class DescentStuck(DelsarteError):
    code = "descent_stuck"


class NotInZGammaZero(DelsarteError):
    code = "not_in_z_gamma_zero"


class IndicialMismatch(DelsarteError):
    code = "indicial_mismatch"


class ResonanceFailure(DelsarteError):
    code = "resonance_failure"


class InvariantDimension(DelsarteError):
    code = "invariant_dimension"


class InvariantViolation(DelsarteError):
    code = "invariant_violation"
