"""Exact computations with root systems, orbit-averaged characters and their polynomial shadows."""

from .lattice import AmbientSpace, Lattice, pairing, reflect, maximal_root_system
from .rootsys import TypeLabel, RootSystem, SubRootSystem, build
from .weyl import SymmetrySpec, BACKEND

__all__ = [
    "AmbientSpace",
    "Lattice",
    "pairing",
    "reflect",
    "maximal_root_system",
    "TypeLabel",
    "RootSystem",
    "SubRootSystem",
    "build",
    "SymmetrySpec",
    "BACKEND",
]

__version__ = "0.1.0"
