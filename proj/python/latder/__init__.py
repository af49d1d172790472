"""Finite lattices, their cover posets and derived lattices.

A thin layer over the compiled ``_latder`` extension. Lattices are opaque
``Lattice`` objects with integer element ids; covers are ``(lo, hi)`` tuples.
"""

from ._latder import *  # noqa: F401,F403
from ._latder import LatderError, Lattice

__all__ = [name for name in dir() if not name.startswith("_")]
