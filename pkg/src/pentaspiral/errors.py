"""Exception hierarchy shared by the geometry and analysis modules."""


class PentaError(Exception):
    """Base class for all package errors."""

    code = "error"


class CoincidentPoints(PentaError):
    code = "coincident_points"


class CoincidentLines(PentaError):
    code = "coincident_lines"


class NotCollinear(PentaError):
    code = "not_collinear"


class DegenerateQuadruple(PentaError):
    code = "degenerate_quadruple"


class DegenerateQuad(PentaError):
    code = "degenerate_quad"


class PointAtInfinity(PentaError):
    code = "point_at_infinity"


class SingularTransform(PentaError):
    code = "singular_transform"


class ConstructionDegenerate(PentaError):
    code = "construction_degenerate"


class WindowTooSmall(PentaError):
    code = "window_too_small"


class UnitProductDenominator(PentaError):
    code = "unit_product_denominator"


class EdgeOutsideRegion(PentaError):
    code = "edge_outside_region"


class PointNotInterior(PentaError):
    code = "point_not_interior"


class NestingViolated(PentaError):
    code = "nesting_violated"


class MaxIterations(PentaError):
    code = "max_iterations"


class NoConvergence(PentaError):
    code = "no_convergence"


class AverageNotValidSeed(PentaError):
    code = "average_not_valid_seed"


class InvalidSeed(PentaError):
    """Raised when an operation requires a valid seed and got a violation."""

    code = "invalid_seed"

    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation
