"""Kernel backend selection.

The compiled Cython core is used when it was built; otherwise the numpy
reference implementations take over with identical semantics.  Set the
environment variable ``SUBLIMIT_PURE=1`` before import to force the fallback
(usеd by the benchmark to compare both backends).
"""

import os

from . import _ref

if os.environ.get("SUBLIMIT_PURE"):
    _impl = _ref
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _ref

weighted_interp_sum = _impl.weighted_interp_sum
gheat_steps = _impl.gheat_steps


def backend():
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return "python" if _impl is _ref else "compiled"
