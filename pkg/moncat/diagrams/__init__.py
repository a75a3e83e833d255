from moncat.diagrams.diagram import Diagram, DiagramKey, Slice, equal
from moncat.diagrams.canonical import Wiring, canonical_form
from moncat.diagrams.context import (
    DiagramContext, HoleLabel, contexts_equal, hole_context, hole_generator, make_context,
    permute_holes, substitute)
from moncat.diagrams.expression import build_expression, parse_diagram, parse_expression

__all__ = [
    'Diagram',
    'DiagramKey',
    'Slice',
    'equal',
    'Wiring',
    'canonical_form',
    'DiagramContext',
    'HoleLabel',
    'contexts_equal',
    'hole_context',
    'hole_generator',
    'make_context',
    'permute_holes',
    'substitute',
    'build_expression',
    'parse_diagram',
    'parse_expression',
]
