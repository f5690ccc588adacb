"""Garside-theoretic computations in braid groups with band generators."""
from .artin import ArtinInstance
from .bkl import BklInstance, centralizer_atoms, to_artin
from .garside import Fraction, NormalForm, PreGarside, check_axioms
from .ncp import NcPartition
from .perm import Permutation

__all__ = [
    "ArtinInstance",
    "BklInstance",
    "Fraction",
    "NcPartition",
    "NormalForm",
    "Permutation",
    "PreGarside",
    "centralizer_atoms",
    "check_axioms",
    "to_artin",
]
