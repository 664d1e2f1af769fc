"""Kernel backend selection.

The compiled extension ``_kernels`` is used when it imports; otherwise the
pure-Python module.  Set ``HECKE_CELL_LAB_PURE=1`` to force the fallback.
"""

import os

from ._kernels_py import InexactDivision

if os.environ.get("HECKE_CELL_LAB_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = "cython" if _impl.__name__.endswith("._kernels") else "python"

poly_mul = _impl.poly_mul
poly_add = _impl.poly_add
poly_iadd = _impl.poly_iadd
poly_act = _impl.poly_act
poly_demazure = _impl.poly_demazure
poly_divexact = _impl.poly_divexact

__all__ = [
    "BACKEND",
    "InexactDivision",
    "poly_mul",
    "poly_add",
    "poly_iadd",
    "poly_act",
    "poly_demazure",
    "poly_divexact",
]
