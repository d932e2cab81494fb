"""Double-star calculus for finite symmetric graphs."""

from dstar._core import *  # noqa: F401,F403
from dstar._core import __doc__ as _core_doc

__doc__ = _core_doc
