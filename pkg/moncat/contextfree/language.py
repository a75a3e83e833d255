from __future__ import annotations

from typing import Dict, Hashable, List, Optional, Set

from moncat.contextfree.derivation import enumerate_derivations, evaluate_derivation
from moncat.contextfree.grammar import CFMonoidalGrammar
from moncat.diagrams.diagram import Diagram
from moncat.doctrines.keys import doctrine_key, sort_key
from moncat.utils.budget import WorkBudget
from moncat.utils.logger import MoncatLogger


def cf_language(
    g: CFMonoidalGrammar,
    bound: int,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
) -> List[Diagram]:
    """ Evaluations of the start derivations with at most ``bound`` rule nodes,
    one representative per doctrine equivalence class.
    """
    found: Dict[Hashable, Diagram] = {}
    for d in enumerate_derivations(g, g.start, bound, budget=budget, logger=logger):
        diagram = evaluate_derivation(g, d)
        found.setdefault(doctrine_key(diagram), diagram)
    return [
        found[key] for key in sorted(
            found, key=lambda k: (found[k].generator_count, sort_key(k)))
    ]


def language_keys(
    g: CFMonoidalGrammar,
    bound: int,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
) -> Set[Hashable]:
    return {doctrine_key(d) for d in cf_language(g, bound, budget=budget, logger=logger)}
