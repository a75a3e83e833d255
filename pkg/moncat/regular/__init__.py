from moncat.regular.automaton import MonoidalAutomaton, StateWord, accepts, delta_hat, run
from moncat.regular.enumeration import enumerate_free, enumerate_regular
from moncat.regular.grammar import (
    RegularMonoidalGrammar, apply_morphism, automaton_to_grammar, grammar_language,
    grammar_to_automaton)
from moncat.regular.pumping import (
    FamilyFactory, Factorization, PumpingFamily, WitnessReport, check_family, factorize, pump,
    pumping_witness)

__all__ = [
    'MonoidalAutomaton',
    'StateWord',
    'accepts',
    'delta_hat',
    'run',
    'enumerate_free',
    'enumerate_regular',
    'RegularMonoidalGrammar',
    'apply_morphism',
    'automaton_to_grammar',
    'grammar_language',
    'grammar_to_automaton',
    'FamilyFactory',
    'Factorization',
    'PumpingFamily',
    'WitnessReport',
    'check_family',
    'factorize',
    'pump',
    'pumping_witness',
]
