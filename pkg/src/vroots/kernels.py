"""Hot integer kernels, compiled when available.

The Cython extension is preferred; the pure-Python module is used when the
extension was not built or when ``VROOTS_PURE_PYTHON`` is set to a non-empty
value other than ``0``.
"""
import os

if os.environ.get("VROOTS_PURE_PYTHON", "") not in ("", "0"):
    from vroots import _pykernels as _impl
    BACKEND = "python"
else:
    try:
        from vroots import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        from vroots import _pykernels as _impl
        BACKEND = "python"

sign_at = _impl.sign_at
variations = _impl.variations
bisect = _impl.bisect
centered_sign = _impl.centered_sign

__all__ = ["BACKEND", "sign_at", "variations", "bisect", "centered_sign"]
