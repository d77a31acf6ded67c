"""Integer polynomial kernels, compiled when available.

The Cython build of ``_ckernels`` is preferred; the pure-Python twin in
``_pykernels`` is used when the extension is missing or when the
environment variable ``HYP_PURE_PYTHON`` is set to a non-empty value.
"""

import os

if os.environ.get("HYP_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND = "cython" if _impl.__name__.endswith("_ckernels") else "python"

strip = _impl.strip
content = _impl.content
primitive = _impl.primitive
derivative = _impl.derivative
mul = _impl.mul
pseudo_rem = _impl.pseudo_rem
sturm_chain = _impl.sturm_chain
eval_hom = _impl.eval_hom
variations_at = _impl.variations_at
variations_at_inf = _impl.variations_at_inf
variations_at_zero = _impl.variations_at_zero
real_root_profile = _impl.real_root_profile
is_real_rooted = _impl.is_real_rooted
poly_gcd = _impl.poly_gcd
restrict_line = _impl.restrict_line

__all__ = [
    "BACKEND", "strip", "content", "primitive", "derivative", "mul", "pseudo_rem",
    "sturm_chain", "eval_hom", "variations_at", "variations_at_inf",
    "variations_at_zero", "real_root_profile", "is_real_rooted", "poly_gcd",
    "restrict_line",
]
