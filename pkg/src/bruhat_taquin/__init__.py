"""Jeu de taquin on chains in k-Bruhat order, with Schubert-calculus oracles."""

from .chains import BruhatInterval, ChainWord, InvalidChain, enumerate_maximal_chains, has_nesting
from .growth import GrowthDiagram, fill_growth_diagram, jdt_chain, local_rule
from .perms import Permutation, ValueTransposition
from .plactic import TranspositionTableau, beligan_count, canonical_P, recording_Q
from .schubert import (
    Polynomial, grassmannian_coefficient, schubert_polynomial, structure_constant,
    structure_constants,
)
from .young import Tableau

__all__ = [
    "BruhatInterval", "ChainWord", "InvalidChain", "enumerate_maximal_chains", "has_nesting",
    "GrowthDiagram", "fill_growth_diagram", "jdt_chain", "local_rule",
    "Permutation", "ValueTransposition",
    "TranspositionTableau", "beligan_count", "canonical_P", "recording_Q",
    "Polynomial", "grassmannian_coefficient", "schubert_polynomial", "structure_constant",
    "structure_constants", "Tableau",
]
