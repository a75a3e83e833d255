from moncat.optics.functor import MonoidalFunctor, apply_functor, apply_functor_context
from moncat.optics.raw import (
    RawOptic, evaluate_raw, factor_context, glue, glued_equal, identity_optic, raw_compose,
    raw_optic_equal, raw_representative)
from moncat.optics.contour import (
    ContourPolygraph, contour_bound, contour_grammar_language, contour_of_derivation, contours,
    derivation_of_contour, grammar_contour, induced_functor, optical_contour,
    regular_representative)
from moncat.optics.representation import (
    RepresentationReport, cf_side, compare_sides, contour_side, verify_representation)

__all__ = [
    'MonoidalFunctor',
    'apply_functor',
    'apply_functor_context',
    'RawOptic',
    'evaluate_raw',
    'factor_context',
    'glue',
    'glued_equal',
    'identity_optic',
    'raw_compose',
    'raw_optic_equal',
    'raw_representative',
    'ContourPolygraph',
    'contour_bound',
    'contour_grammar_language',
    'contour_of_derivation',
    'contours',
    'derivation_of_contour',
    'grammar_contour',
    'induced_functor',
    'optical_contour',
    'regular_representative',
    'RepresentationReport',
    'cf_side',
    'compare_sides',
    'contour_side',
    'verify_representation',
]
