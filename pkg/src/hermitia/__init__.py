"""Hermite functions of complex degree, the generalized Hermite functional and
integral representations of the Gamma function built on them."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DegenerateDegree,
    DomainError,
    HermitiaError,
    NonConvergence,
    ParameterPole,
    PoleError,
    SingularIntegrand,
)
from .scalar import gamma, pochhammer, reciprocal_gamma  # noqa: E402
from .hypergeometric import gauss_2f1_at_unit, kummer_1f1, laplace_1f1  # noqa: E402
from .hermite import (  # noqa: E402
    HermiteEvalConfig,
    hermite,
    hermite_1f1_form,
    hermite_asymptotic,
    hermite_derivative,
    hermite_series,
)
from .functional import (  # noqa: E402
    GeneralizedHermiteFunctional,
    Polynomial,
    apply,
    first_order_residual_hermite,
    moment,
    moment_via_relation,
    second_order_residual,
    symmetrize,
)
from .quadrature import (  # noqa: E402
    AUTO,
    QuadratureConfig,
    apply_via_quadrature,
    closed_form_weight_integral,
    closed_form_even_moment,
    closed_form_fullline,
    gamma_via_realline,
    hermite_weight_integral,
    hermite_weight_integral_fullline,
    integrate_halfline,
    integrate_interval,
)
from .contour import (  # noqa: E402
    ContourPath,
    ContourSegment,
    apply_via_contour,
    build_c1,
    build_c_loop,
    contour_moment_c1,
    gamma_via_loop,
    gamma_via_sine_form,
    integrate_contour,
    loop_integral,
    reciprocal_gamma_via_contour,
)
from .verify import IdentityCheck, IdentityReport, run_suite  # noqa: E402

__all__ = [name for name in dir() if not name.startswith("_")]
