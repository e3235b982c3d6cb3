"""Kernel selection: compiled extension when available, else pure Python.

``TRIGGAUDIN_PURE_PYTHON=1`` in the environment forces the fallback
(used by the benchmark to compare both implementations).
"""

import os

if os.environ.get("TRIGGAUDIN_PURE_PYTHON") == "1":
    from ._kernels_py import sparse_add, sparse_matmul

    BACKEND = "python"
else:
    try:
        from ._kernels_cy import sparse_add, sparse_matmul

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import sparse_add, sparse_matmul

        BACKEND = "python"

__all__ = ["sparse_matmul", "sparse_add", "BACKEND"]
