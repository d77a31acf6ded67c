"""Exact tools for hyperbolic polynomials and their hyperbolicity cones."""

__version__ = "0.1.0"

from .errors import HypError  # noqa: E402
from .hyperbolicity import (  # noqa: E402
    ComponentReport,
    HypVerdict,
    VerdictKind,
    check_hyperbolic,
    check_hyperbolic_exact_bivariate,
    check_hyperbolic_quadratic,
    count_components,
    in_cone,
    same_component,
)
from .kernels import BACKEND  # noqa: E402
from .polycore import (  # noqa: E402
    MultiPoly,
    UniPoly,
    evaluate,
    gradient,
    homogeneous_degree,
    poly_parse,
    restrict_line,
    restrict_plane,
)
from .realroots import (  # noqa: E402
    all_roots_positive,
    count_real_roots,
    is_real_rooted,
    isolate_roots,
    squarefree_part,
)

__all__ = [
    "BACKEND",
    "ComponentReport",
    "HypError",
    "HypVerdict",
    "MultiPoly",
    "UniPoly",
    "VerdictKind",
    "all_roots_positive",
    "check_hyperbolic",
    "check_hyperbolic_exact_bivariate",
    "check_hyperbolic_quadratic",
    "count_components",
    "count_real_roots",
    "evaluate",
    "gradient",
    "homogeneous_degree",
    "in_cone",
    "is_real_rooted",
    "isolate_roots",
    "poly_parse",
    "restrict_line",
    "restrict_plane",
    "same_component",
    "squarefree_part",
]
