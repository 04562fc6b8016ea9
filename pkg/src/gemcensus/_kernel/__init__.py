"""Kernel backend selection.

The compiled kernel (``gemcensus._kernel._fast``, built from Cython) and
the pure-Python kernel (``gemcensus._kernel.pure``) implement the same
interface with byte-identical results.  The compiled one is preferred
when importable; set ``GEMCENSUS_BACKEND=pure`` to force the fallback,
``GEMCENSUS_BACKEND=fast`` to require the compiled kernel.
"""

import os

from gemcensus._kernel import pure

_choice = os.environ.get("GEMCENSUS_BACKEND", "").strip().lower()

if _choice == "pure":
    _impl = pure
else:
    try:
        from gemcensus._kernel import _fast as _impl
    except ImportError:
        if _choice == "fast":
            raise
        _impl = pure

BACKEND = _impl.BACKEND
canonical_code = _impl.canonical_code
complete_surfaces = _impl.complete_surfaces
complete_gems = _impl.complete_gems


def get_backend(name=None):
    """Return the kernel module for ``name`` (None = the active one)."""
    if name in (None, BACKEND):
        return _impl
    if name == "pure":
        return pure
    if name == "fast":
        from gemcensus._kernel import _fast
        return _fast
    raise ValueError(f"unknown kernel backend: {name!r}")
