"""Backend selection for the construction kernels.

The compiled extension is used when importable; setting
``WORDPROBE_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("WORDPROBE_PURE_PYTHON") == "1":
        raise ImportError("pure-Python backend forced")
    from . import _kernels as _backend

    BACKEND = "compiled"
except ImportError:
    _backend = _pykernels
    BACKEND = "python"

sa_build = _backend.sa_build
eertree_build = _backend.eertree_build

BACKENDS = {"python": _pykernels}
if BACKEND == "compiled":
    BACKENDS["compiled"] = _backend
