"""Exact tests for real-rootedness of real polynomials, plus numerical
experiments with entire functions of the same flavour."""

__version__ = "0.1.0"

from .errors import (
    AmbiguousClassification,
    HyperpolyError,
    InadmissibleChain,
    InternalDisagreement,
    MultipleRootOfF,
    NoConvergence,
    ParseError,
)
from .fourier import (
    CriticalPoint,
    classify_critical_points,
    fourier_multiplicity,
    nonreal_count_via_fourier,
    verify_counting_identity,
)
from .hyperbolicity import (
    analyze,
    extrema_sign_test,
    ground_truth,
    inequality_expression,
    inequality_test,
)
from .oracle import all_roots_float, oracle_nonreal_count
from .parsing import format_polynomial, parse_polynomial
from .poly import Poly, poly_gcd, squarefree_part
from .realroots import (
    Interval,
    count_distinct_real_roots,
    is_strictly_positive_on_R,
    isolate_real_roots,
    nonreal_count_exact,
)
