from moncat.contextfree.grammar import CFMonoidalGrammar, Rule, format_interface, validate_grammar
from moncat.contextfree.derivation import (
    Derivation, check_derivation, derivation_size, enumerate_derivations, evaluate_context,
    evaluate_derivation)
from moncat.contextfree.language import cf_language, language_keys
from moncat.contextfree.lifting import lift_regular
from moncat.contextfree.closure import map_image, union

__all__ = [
    'CFMonoidalGrammar',
    'Rule',
    'format_interface',
    'validate_grammar',
    'Derivation',
    'check_derivation',
    'derivation_size',
    'enumerate_derivations',
    'evaluate_context',
    'evaluate_derivation',
    'cf_language',
    'language_keys',
    'lift_regular',
    'map_image',
    'union',
]
