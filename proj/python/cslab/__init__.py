"""Lattice paths, Catalan-Spitzer permutations, Foata-Strehl trees, type series and orbits."""

from ._core import *  # noqa: F401,F403
from ._core import InvalidInput

__all__ = [name for name in dir() if not name.startswith("_")]
