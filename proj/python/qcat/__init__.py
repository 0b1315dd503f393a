"""Weyl-group indexing of cofinite quotient-closed subcategories of quiver
representations: leftmost subwords, preprojective dimension bookkeeping,
preprojective-algebra ideals, sortability and antimatroid checks."""

from ._qcat import *  # noqa: F401,F403
from ._qcat import __doc__ as _core_doc

__version__ = "0.1.0"
