"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is.  Setting ``LOCALCOLOUR_PURE=1`` forces the Python backend.
"""

from __future__ import annotations

import os

if os.environ.get("LOCALCOLOUR_PURE") == "1":
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND
ham_path_ends = _impl.ham_path_ends
ham_cycle_flags = _impl.ham_cycle_flags
canonical_code = _impl.canonical_code
enumerate_bipartite = _impl.enumerate_bipartite

__all__ = ["BACKEND", "ham_path_ends", "ham_cycle_flags", "canonical_code", "enumerate_bipartite"]
