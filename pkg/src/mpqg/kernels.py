"""Kernel backend selection.

Imports the compiled kernels when the extension built, otherwise the pure
Python ones.  ``MPQG_PURE_PYTHON=1`` forces the fallback (useful for the
benchmark and for debugging).
"""

import os

if os.environ.get("MPQG_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BITS = _impl.BITS
MASK = _impl.MASK
BACKEND = _impl.BACKEND

p_add = _impl.p_add
p_sub = _impl.p_sub
p_neg = _impl.p_neg
p_scale = _impl.p_scale
p_mul_term = _impl.p_mul_term
p_mul = _impl.p_mul
sym_reduce = _impl.sym_reduce
mono_den_reduce = _impl.mono_den_reduce


def backend():
    """Name of the active kernel implementation ('cython' or 'python')."""
    return BACKEND
