class DegenerateTarget(ValueError):
    """The requested gate is trivial (or a pure winding) and has no quadrilateral."""


class InfeasibleClosure(RuntimeError):
    """No branch of the closed form closes the error quadrilateral. Indicates a bug."""


class InvalidWindings(ValueError):
    """CORPSE winding numbers violate ``n1 - n2 + n3 = 0`` or give a flip angle <= 0."""


class InsufficientData(ValueError):
    """Too few infidelity samples above the numerical floor to fit a slope."""


class DecompositionError(RuntimeError):
    """A target factorization failed its reconstruction check."""
