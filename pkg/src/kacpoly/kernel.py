"""Kernel lane selection.

Imports the compiled kernel when it is installed and working, otherwise the
pure-Python twin.  Set KACPOLY_PURE=1 to force the pure lane (used by the
benchmark and for debugging); both lanes implement the same contract and the
test suite cross-checks them whenever the compiled one is importable.
"""

import os

from . import _kernel_py

if os.environ.get("KACPOLY_PURE", "") not in ("", "0"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

KERNEL_NAME = _impl.KERNEL_NAME
poly_mul = _impl.poly_mul
poly_divmod = _impl.poly_divmod
poly_gcd_int = _impl.poly_gcd_int
key_weight = _impl.key_weight
series_mul = _impl.series_mul
