"""Piecewise-linear sequence representations and shape queries.

The heavy lifting lives in the _seqbreak extension; this package just
re-exports it. The extension sits inside the package when installed, or on
PYTHONPATH next to it in a development build.
"""

try:
    from ._seqbreak import *  # noqa: F401,F403
    from . import _seqbreak as _impl
except ImportError:
    from _seqbreak import *  # noqa: F401,F403
    import _seqbreak as _impl

__version__ = getattr(_impl, "__version__", "0.0.0")
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
