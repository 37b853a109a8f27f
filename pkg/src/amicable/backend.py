"""Selects the sigma-table kernel at import time.

The compiled extension is preferred; the NumPy implementation is the
fallback.  Set AMICABLE_PURE_PYTHON=1 to force the fallback (used by the
benchmark and by tests that compare the two).
"""

import os

from . import _sigma_np

if os.environ.get("AMICABLE_PURE_PYTHON"):
    _impl = _sigma_np
    BACKEND = "numpy"
else:
    try:
        from . import _sigma_fast as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _sigma_np
        BACKEND = "numpy"

sigma_range = _impl.sigma_range
