"""Exception hierarchy shared by every hermitia module."""


class HermitiaError(ArithmeticError):
    """Base class for all numerical failures raised by hermitia."""


class PoleError(HermitiaError):
    """Gamma (or a Gamma ratio) was requested at a pole."""


class DomainError(HermitiaError, ValueError):
    """Arguments fall outside the validity domain of a formula."""


class ParameterPole(HermitiaError):
    """A hypergeometric lower parameter hit a nonpositive integer."""


class NonConvergence(HermitiaError):
    """A series or quadrature did not meet its tolerance within its budget."""


class DegenerateDegree(HermitiaError, ValueError):
    """The power-series Hermite form is singular at nonnegative integer degree."""


class SingularIntegrand(HermitiaError):
    """An integrand returned a non-finite sample."""
