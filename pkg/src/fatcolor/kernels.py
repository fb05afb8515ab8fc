"""Backend selection for the hot kernels.

The compiled extension is preferred; the pure-Python module is used when it
is missing or when ``FATCOLOR_PURE_PYTHON=1`` is set before import.
"""

from __future__ import annotations

import os

from fatcolor import _pykernels

if os.environ.get("FATCOLOR_PURE_PYTHON") == "1":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from fatcolor import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

partition_is_fat = _impl.partition_is_fat
first_fat_partition = _impl.first_fat_partition
max_clique = _impl.max_clique

__all__ = ["BACKEND", "partition_is_fat", "first_fat_partition", "max_clique"]
