from moncat.signatures.polygraph import Doctrine, Generator, Polygraph, Word, format_word, word
from moncat.signatures.multigraph import Multigraph, Operation
from moncat.signatures.symmetric import (
    OrbitElement, Permutation, SymmetricMultigraph, clique, representative)
from moncat.signatures.morphisms import MultigraphMorphism, PolygraphMorphism
from moncat.signatures.report import Issue, ValidationReport
from moncat.signatures.validator import validate_multigraph, validate_polygraph

__all__ = [
    'Doctrine',
    'Generator',
    'Polygraph',
    'Word',
    'format_word',
    'word',
    'Multigraph',
    'Operation',
    'OrbitElement',
    'Permutation',
    'SymmetricMultigraph',
    'clique',
    'representative',
    'MultigraphMorphism',
    'PolygraphMorphism',
    'Issue',
    'ValidationReport',
    'validate_multigraph',
    'validate_polygraph',
]
