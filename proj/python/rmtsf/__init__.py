"""Exact trace and characteristic-polynomial moments of the Gaussian,
Laguerre and Jacobi unitary ensembles via symmetric-function theory."""

try:
    from ._rmtsf import *  # noqa: F401,F403  (installed package layout)
    from . import _rmtsf as _impl
except ImportError:  # in-tree build: extension sits on sys.path directly
    from _rmtsf import *  # noqa: F401,F403
    import _rmtsf as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
