"""Acceptance-search kernels.

The compiled ``_ckernel`` extension is used when it was built; otherwise
the pure-Python ``_pykernel`` takes over.  Setting ``JUMPFA_PURE_PYTHON=1``
forces the fallback.  Both expose ``prepare(program)`` and
``search(prepared, model_code, tape, strict)``.
"""

import os

from . import _pykernel

MODEL_CODES = {
    "rowj": _pykernel.ROWJ,
    "lowj": _pykernel.LOWJ,
    "grl": _pykernel.GRL,
    "gll": _pykernel.GLL,
    "grc": _pykernel.GRC,
    "glc": _pykernel.GLC,
    "gjfa": _pykernel.GJFA,
}

BACKENDS = {"python": _pykernel}

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None
else:
    BACKENDS["cython"] = _ckernel

if _ckernel is not None and os.environ.get("JUMPFA_PURE_PYTHON", "") in ("", "0"):
    DEFAULT_BACKEND = "cython"
else:
    DEFAULT_BACKEND = "python"


def get_backend(name=None):
    name = name or DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"kernel backend {name!r} unavailable (have: {', '.join(sorted(BACKENDS))})"
        ) from None
