"""Select the compiled kernels when available, else the pure-Python ones.

Set ``PPICOD_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("PPICOD_PURE_PYTHON", "") not in ("", "0"):
    from . import _pycore as _impl
else:
    try:
        from . import _core as _impl
    except ImportError:
        from . import _pycore as _impl

BACKEND: str = _impl.BACKEND
decodable_masks = _impl.decodable_masks
span_is_valid = _impl.span_is_valid
scan_pattern = _impl.scan_pattern

__all__ = ["BACKEND", "decodable_masks", "span_is_valid", "scan_pattern"]
