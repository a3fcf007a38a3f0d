"""Exact computations in Ore monoid rings ``R[G; pi]``."""

from .coeffring import AddMap, Algebra, make_algebra
from .monoid import FiniteMonoid, FreeCommutativeMonoid, two_element_monoid
from .orering import OreElem, OreRing
from .pistructure import DeltaFamily, DeltaPi, ExplicitPi, check_all, classify
from .scalars import QQ, ModRing, PrimeField, base_from_tag

__all__ = [
    "AddMap",
    "Algebra",
    "DeltaFamily",
    "DeltaPi",
    "ExplicitPi",
    "FiniteMonoid",
    "FreeCommutativeMonoid",
    "ModRing",
    "OreElem",
    "OreRing",
    "PrimeField",
    "QQ",
    "base_from_tag",
    "check_all",
    "classify",
    "make_algebra",
    "two_element_monoid",
]
