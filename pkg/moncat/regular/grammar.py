from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from moncat.diagrams.diagram import Diagram, Slice
from moncat.regular.automaton import MonoidalAutomaton
from moncat.regular.enumeration import enumerate_free
from moncat.signatures.morphisms import PolygraphMorphism
from moncat.signatures.polygraph import Generator, Polygraph, Word
from moncat.signatures.report import ValidationReport
from moncat.utils.budget import WorkBudget
from moncat.utils.logger import MoncatLogger


@dataclass(frozen=True)
class RegularMonoidalGrammar:
    """ A morphism of polygraphs ψ: ℚ → Γ with initial and final words over ℚ. """

    name: str
    morphism: PolygraphMorphism
    initial: Word
    final: Word

    @property
    def states(self) -> Polygraph:
        return self.morphism.source

    @property
    def alphabet(self) -> Polygraph:
        return self.morphism.target

    @property
    def domain(self) -> Word:
        return self.morphism.apply_word(self.initial)

    @property
    def codomain(self) -> Word:
        return self.morphism.apply_word(self.final)

    def validate(self) -> ValidationReport:
        report = ValidationReport(self.name)
        report.extend(self.morphism.validate())
        for label, w in (('initial', self.initial), ('final', self.final)):
            for sort in w:
                if not self.states.has_sort(sort):
                    report.add('undeclared sort', f"'{sort}' in the {label} word")
        return report


def apply_morphism(morphism: PolygraphMorphism, d: Diagram) -> Diagram:
    """ ψ^⊗ on a diagram: every slice is renamed, the pads keep their widths. """
    slices = [
        Slice(s.left, morphism.target.generator(morphism.gen_map[s.generator.name]), s.right)
        for s in d.slices
    ]
    return Diagram(
        morphism.target, morphism.apply_word(d.domain), morphism.apply_word(d.codomain), slices)


def _state_sort(state: str, sort: str) -> str:
    return f'{state}.{sort}'


def automaton_to_grammar(a: MonoidalAutomaton) -> RegularMonoidalGrammar:
    """ One ℚ-sort per (state, sort) pair and one generator per transition tuple. """
    domain, codomain = a.typed()
    sorts = tuple(_state_sort(q, s) for q in a.states for s in a.alphabet.sorts)
    generators: List[Generator] = []
    gen_map: Dict[str, str] = {}
    for gen in a.alphabet.generators:
        for index, (q, r) in enumerate(sorted(a.transitions.get(gen.name, ()))):
            name = f'{gen.name}.{index}'
            generators.append(Generator(
                name,
                tuple(_state_sort(state, sort) for state, sort in zip(q, gen.arity)),
                tuple(_state_sort(state, sort) for state, sort in zip(r, gen.coarity)),
            ))
            gen_map[name] = gen.name
    states = Polygraph(f'{a.name}.Q', sorts, tuple(generators))
    morphism = PolygraphMorphism(
        states,
        a.alphabet,
        {_state_sort(q, s): s for q in a.states for s in a.alphabet.sorts},
        gen_map,
    )
    return RegularMonoidalGrammar(
        a.name,
        morphism,
        tuple(_state_sort(q, s) for q, s in zip(a.initial, domain)),
        tuple(_state_sort(q, s) for q, s in zip(a.final, codomain)),
    )


def grammar_to_automaton(
    g: RegularMonoidalGrammar,
    name: Optional[str] = None,
) -> MonoidalAutomaton:
    """ States are the ℚ-sorts; each ℚ-generator over γ adds its interface to Δ_γ. """
    transitions: Dict[str, set] = {gen.name: set() for gen in g.alphabet.generators}
    for gen in g.states.generators:
        transitions.setdefault(g.morphism.gen_map[gen.name], set()).add((gen.arity, gen.coarity))
    return MonoidalAutomaton(
        name or g.name,
        g.alphabet,
        g.states.sorts,
        {label: frozenset(relation) for label, relation in transitions.items()},
        g.initial,
        g.final,
        g.domain,
        g.codomain,
    )


def grammar_language(
    g: RegularMonoidalGrammar,
    bound: int,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
) -> List[Diagram]:
    """ ψ^⊗ image of the ℚ-diagrams initial -> final with at most ``bound`` generators. """
    found = enumerate_free(g.states, g.initial, g.final, bound, budget=budget, logger=logger)
    images: Dict[Tuple, Diagram] = {}
    for d in found:
        image = apply_morphism(g.morphism, d).canonical()
        images.setdefault(image.syntax(), image)
    return sorted(images.values(), key=lambda d: (d.generator_count, d.syntax()))

