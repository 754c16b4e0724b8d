"""Backend selection for the hot kernels.

Prefers the compiled Cython module when it is importable, falling back to
the pure-Python twin.  Set LABELCODES_PURE_PYTHON=1 to force the fallback
(used by the benchmark and the backend-equivalence tests).
"""
import os

if os.environ.get("LABELCODES_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
OK = _impl.OK
INVALID = _impl.INVALID
AMBIGUOUS = _impl.AMBIGUOUS

derivative = _impl.derivative
integrate = _impl.integrate
signature = _impl.signature
vt_weight_sum = _impl.vt_weight_sum
label_word_pairs = _impl.label_word_pairs
label_framed_pairs = _impl.label_framed_pairs
invert_framed_pairs = _impl.invert_framed_pairs
