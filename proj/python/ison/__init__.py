"""Exact arithmetic in the monoid of cofinite partial isometries."""

try:
    from ._ison import *  # noqa: F401,F403
    from ._ison import verify  # noqa: F401
except ImportError:  # running against a plain build tree
    from _ison import *  # noqa: F401,F403
    from _ison import verify  # noqa: F401

__version__ = "0.1.0"
