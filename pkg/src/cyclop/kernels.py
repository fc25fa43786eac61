"""Backend selection for the refinement kernels.

The compiled extension is used when it was built; otherwise (or when the
environment variable ``CYCLOP_PURE_PYTHON`` is set to a non-empty value)
the pure-Python implementation is loaded. ``BACKEND`` records the choice.
"""

import os

if os.environ.get("CYCLOP_PURE_PYTHON"):
    from cyclop._kernels_py import refinement_matrix, refines_many, refines_pair

    BACKEND = "python"
else:
    try:
        from cyclop._kernels import refinement_matrix, refines_many, refines_pair

        BACKEND = "cython"
    except ImportError:
        from cyclop._kernels_py import refinement_matrix, refines_many, refines_pair

        BACKEND = "python"

__all__ = ["BACKEND", "refinement_matrix", "refines_many", "refines_pair"]
