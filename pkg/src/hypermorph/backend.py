"""Kernel backend selection.

Every hot loop in :mod:`hypermorph.kernels` exists twice: a numba
``@njit`` kernel and a pure-numpy fallback.  The environment variable
``HYPERMORPH_BACKEND`` picks the default at import time:

* ``auto`` (or unset): numba when importable, numpy otherwise
* ``numba``: require numba, raise if it cannot be imported
* ``numpy``: force the pure-numpy path

Both paths compute bit-identical results; ``benchmarks/compare_backends.py``
measures the difference in speed.
"""

import os

ENV_VAR = "HYPERMORPH_BACKEND"

NUMBA = "numba"
NUMPY = "numpy"


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def resolve_backend(requested: str | None = None) -> str:
    """Map a requested backend name to ``"numba"`` or ``"numpy"``.

    ``requested`` defaults to the ``HYPERMORPH_BACKEND`` environment
    variable.  Unknown names raise ``ValueError``; requesting numba
    without numba installed raises ``ImportError``.
    """
    if requested is None:
        requested = os.environ.get(ENV_VAR, "")
    name = requested.strip().lower()
    if name in ("", "auto"):
        return NUMBA if numba_available() else NUMPY
    if name == NUMBA:
        if not numba_available():
            raise ImportError(
                f"{ENV_VAR}={requested!r} requires numba, which is not installed"
            )
        return NUMBA
    if name == NUMPY:
        return NUMPY
    raise ValueError(
        f"unknown {ENV_VAR} value {requested!r}; expected 'auto', 'numba' or 'numpy'"
    )


# numba compile options shared by all kernels; cache=True persists the
# compiled code next to the source so repeat runs skip compilation.
JIT_OPTIONS = {"cache": True, "nogil": True}
