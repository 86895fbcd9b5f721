"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``CLUSTER_FORGE_KERNELS=python`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

python_kernels = _pykernels
compiled_kernels = None

try:
    from . import _kernels as compiled_kernels  # type: ignore[no-redef]
except ImportError:  # pragma: no cover - depends on the build
    compiled_kernels = None

if compiled_kernels is not None and os.environ.get("CLUSTER_FORGE_KERNELS", "").lower() != "python":
    kernels = compiled_kernels
else:
    kernels = python_kernels

BACKEND = kernels.NAME
