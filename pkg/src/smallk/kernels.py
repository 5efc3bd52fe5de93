"""Kernel selection: compiled extension when available, else pure Python.

Set ``SMALLK_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
freudenthal_dominant = _kernels_py.freudenthal_dominant

if not os.environ.get("SMALLK_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        freudenthal_dominant = _compiled.freudenthal_dominant
        BACKEND = "cython"
