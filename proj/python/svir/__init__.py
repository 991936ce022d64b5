"""Exact computations with the N=2 super-Virasoro discrete series.

Thin wrapper over the compiled core; rationals cross the boundary as
canonical "p/q" strings.
"""

from svir._core import *  # noqa: F401,F403
from svir._core import __version__  # noqa: F401
