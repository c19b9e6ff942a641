"""Exact finite models of pointfree real functions and their Riesz structure."""

from .frames import FiniteFrame, FrameHom, booleanize, build_frame, classify
from .realfn import PartialRealFn, RealFn, Scale

__all__ = ["FiniteFrame", "FrameHom", "PartialRealFn", "RealFn", "Scale",
           "booleanize", "build_frame", "classify"]
__version__ = "0.1.0"
