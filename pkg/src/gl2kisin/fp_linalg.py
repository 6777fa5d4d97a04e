"""Kernel computations mod p with a compiled fast path.

The compiled backend (_fastkernel, built from the .pyx source when Cython
and a C compiler are available) and the pure-Python fallback (_purekernel)
share one contract: identical canonical output for identical input.  Set
GL2KISIN_BACKEND=pure or =fast to force a choice; forcing "fast" raises if
the extension is missing.
"""

import os

from . import _purekernel

_FORCED = os.environ.get("GL2KISIN_BACKEND", "").strip().lower()
if _FORCED not in ("", "pure", "fast"):
    raise ImportError("GL2KISIN_BACKEND must be 'pure' or 'fast', not %r" % _FORCED)

BACKEND = "pure"
_impl = _purekernel
if _FORCED != "pure":
    try:
        from . import _fastkernel as _impl  # type: ignore[no-redef]

        BACKEND = "fast"
    except ImportError:
        if _FORCED == "fast":
            raise


def kernel_basis(rows, ncols, p):
    """Kernel basis and rank of a sparse matrix mod p; see _purekernel."""
    return _impl.kernel_basis(rows, ncols, p)


def kernel_dim(rows, ncols, p):
    basis, _rank = kernel_basis(rows, ncols, p)
    return len(basis)
