"""Exact root-theoretic invariants of flag varieties and their boundary orbits.

Construct a root system with :func:`hodgeorbit.root_system`, then query
gradings, representations, lines, Cayley bigradings and the Chevalley basis
through the submodules.  Everything is exact (integers, rationals, Gaussian
rationals); all data structures are immutable after construction and safe to
share between threads.
"""

from .rootdata import LieType, RootSystem, build_root_system, root_system

__version__ = "0.1.0"

__all__ = [
    "LieType",
    "RootSystem",
    "build_root_system",
    "root_system",
    "__version__",
]
