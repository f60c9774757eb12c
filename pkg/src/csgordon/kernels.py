"""Backend selection for the time-stepping kernel.

The compiled extension is used when it imports; ``CSG_BACKEND=python``
forces the numpy fallback.
"""
import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["cython"] = _compiled


def get_backend(name=None):
    if name is None:
        name = os.environ.get("CSG_BACKEND") or ("cython" if _compiled is not None else "python")
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}; "
                         f"have {sorted(BACKENDS)}") from None


_active = get_backend()
BACKEND = "cython" if _active is _compiled else "python"
accel = _active.accel
kdk = _active.kdk
