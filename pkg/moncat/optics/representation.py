from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional

from moncat.contextfree.grammar import CFMonoidalGrammar
from moncat.contextfree.language import cf_language
from moncat.diagrams.diagram import Diagram
from moncat.doctrines.keys import doctrine_key, sort_key
from moncat.optics.contour import contour_grammar_language, grammar_contour, induced_functor
from moncat.optics.functor import apply_functor
from moncat.optics.raw import raw_representative
from moncat.utils.budget import WorkBudget
from moncat.utils.logger import MoncatLogger

Side = Dict[Hashable, Diagram]


@dataclass
class RepresentationReport:
    grammar: str
    bound: int
    lhs: int
    rhs: int
    missing: List[Diagram] = field(default_factory=list)
    extra: List[Diagram] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.missing and not self.extra

    def summary(self) -> str:
        return (
            f'VERIFY {self.grammar} bound={self.bound} equal={str(self.equal).lower()} '
            f'lhs={self.lhs} rhs={self.rhs}')


def cf_side(
    g: CFMonoidalGrammar,
    bound: int,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
) -> Side:
    """ The context-free language, keyed by doctrine equality. """
    return {doctrine_key(d): d for d in cf_language(g, bound, budget=budget, logger=logger)}


def contour_side(
    g: CFMonoidalGrammar,
    bound: int,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
) -> Side:
    """ Images of the regular representative's language under the induced functor. """
    _, optics = raw_representative(g)
    functor = induced_functor(g, optics, grammar_contour(g))
    result: Side = {}
    for c in contour_grammar_language(g, bound, budget=budget, logger=logger):
        image = apply_functor(functor, c)
        result.setdefault(doctrine_key(image), image)
    return result


def compare_sides(g: CFMonoidalGrammar, bound: int, lhs: Side, rhs: Side) -> RepresentationReport:
    ordered = sorted(set(lhs) ^ set(rhs), key=sort_key)
    return RepresentationReport(
        g.name,
        bound,
        len(lhs),
        len(rhs),
        missing=[lhs[key] for key in ordered if key not in rhs],
        extra=[rhs[key] for key in ordered if key not in lhs],
    )


def verify_representation(
    g: CFMonoidalGrammar,
    bound: int,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
) -> RepresentationReport:
    """ Compare the language of ``g`` with the image of its regular representative,
    both restricted to derivations with at most ``bound`` rule nodes.
    """
    logger = logger or MoncatLogger()
    logger.info(f'Enumerating {g.name} up to {bound} rule nodes')
    lhs = cf_side(g, bound, budget=budget, logger=logger)
    logger.info(f'Enumerating the contour language of {g.name}')
    rhs = contour_side(g, bound, budget=budget, logger=logger)
    report = compare_sides(g, bound, lhs, rhs)
    logger.info(report.summary())
    return report
