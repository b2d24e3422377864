"""Lakshmibai-Seshadri path crystals for rank-2 Kac-Moody algebras.

Exact-arithmetic construction of LS paths of a given shape, their root
operators and Weyl group action, bounded exploration of crystal graphs, and
checks of the similarity embedding into tensor powers.
"""
from .cartan import LAMBDA, CartanMatrix, CorootVector, RootVector, Weight
from .crystal import TensorElem, is_extremal_bounded
from .explorer import CrystalGraph, explore
from .order import OrderConfig
from .paths import LSPath, canonicalize, straight, validate
from .weyl import IDENTITY, WeylWord

__version__ = "0.1.0"

__all__ = [
    "LAMBDA",
    "CartanMatrix",
    "CorootVector",
    "CrystalGraph",
    "IDENTITY",
    "LSPath",
    "OrderConfig",
    "RootVector",
    "TensorElem",
    "Weight",
    "WeylWord",
    "canonicalize",
    "explore",
    "is_extremal_bounded",
    "straight",
    "validate",
]
