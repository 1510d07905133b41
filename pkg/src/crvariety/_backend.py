"""Kernel backend selection.

The hot scalar kernels exist twice: a compiled Cython extension
(``_kernels_c``) and a pure-Python twin (``_kernels_py``).  The compiled
module is preferred when importable; ``CRVARIETY_KERNELS`` overrides:

* ``auto`` (default) -- compiled if available, else pure Python;
* ``c``              -- compiled, ImportError if the extension is missing;
* ``py``             -- force the pure-Python kernels.
"""

import os

_choice = os.environ.get("CRVARIETY_KERNELS", "auto")
if _choice not in ("auto", "c", "py"):
    raise ImportError(
        f"CRVARIETY_KERNELS must be 'auto', 'c' or 'py', got {_choice!r}"
    )

if _choice == "py":
    from . import _kernels_py as kernels

    BACKEND = "py"
else:
    try:
        from . import _kernels_c as kernels  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        if _choice == "c":
            raise
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "py"


def backend_name() -> str:
    """Name of the kernel backend in use ('c' or 'py')."""
    return BACKEND
