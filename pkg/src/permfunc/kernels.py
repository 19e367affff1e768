"""Backend selection for the exact kernels.

The compiled extension is preferred when importable; the pure-Python
module is the drop-in fallback.  ``available_backends`` exposes every
importable backend so benchmarks and parity tests can compare them.
"""

from __future__ import annotations

import contextlib

from . import _kernels_py

try:
    from . import _kernels  # compiled extension, optional
except ImportError:  # pragma: no cover - depends on the build
    _kernels = None

_active = _kernels if _kernels is not None else _kernels_py

BACKEND = _active.BACKEND_NAME
gmf_sum = _active.gmf_sum
det_gaussian_int = _active.det_gaussian_int


def available_backends() -> dict[str, object]:
    """Importable kernel backends keyed by name."""
    found: dict[str, object] = {_kernels_py.BACKEND_NAME: _kernels_py}
    if _kernels is not None:
        found[_kernels.BACKEND_NAME] = _kernels
    return found


@contextlib.contextmanager
def use_backend(name: str):
    """Temporarily route kernel calls through the named backend."""
    global BACKEND, gmf_sum, det_gaussian_int
    backends = available_backends()
    if name not in backends:
        raise ValueError(f"unknown backend {name!r}; have {sorted(backends)}")
    module = backends[name]
    saved = (BACKEND, gmf_sum, det_gaussian_int)
    BACKEND = module.BACKEND_NAME
    gmf_sum = module.gmf_sum
    det_gaussian_int = module.det_gaussian_int
    try:
        yield module
    finally:
        BACKEND, gmf_sum, det_gaussian_int = saved
