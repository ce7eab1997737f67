"""Fock-space simulator for the beam-splitter entangler of two light fields.

The compiled core exposes the state constructors, the beam-splitter action,
the conditional-detection protocol, and the concurrence analytics.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
