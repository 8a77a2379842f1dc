"""Kernel selection: compiled extension if built, pure Python otherwise.

Set NERONJAC_PURE=1 to force the fallback (used by the benchmark and by
tests that compare the two implementations).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("NERONJAC_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

KERNEL_NAME: str = _impl.KERNEL_NAME
enumerate_box = _impl.enumerate_box
