from __future__ import annotations

from typing import Callable, Dict, Iterable, List, Optional, Sequence

from moncat.diagrams.diagram import Diagram, DiagramKey, Slice
from moncat.regular.automaton import MonoidalAutomaton, accepts, run
from moncat.signatures.polygraph import Generator, Polygraph, Word
from moncat.utils.budget import WorkBudget
from moncat.utils.logger import MoncatLogger


def _width_reachable(width: int, target: int, remaining: int, low: int, high: int) -> bool:
    """ Some t <= remaining generators, each changing the width by low..high, close the gap. """
    gap = target - width
    return any(t * low <= gap <= t * high for t in range(remaining + 1))


def _extensions(d: Diagram, generators: Sequence[Generator]) -> Iterable[Diagram]:
    frontier = d.codomain
    for gen in generators:
        k = len(gen.arity)
        for left in range(len(frontier) - k + 1):
            if frontier[left:left + k] == gen.arity:
                s = Slice(left, gen, len(frontier) - left - k)
                yield Diagram(d.polygraph, d.domain, s.apply(frontier), d.slices + (s,))


def enumerate_free(
    polygraph: Polygraph,
    domain: Word,
    codomain: Word,
    max_generators: int,
    admit: Optional[Callable[[Diagram], bool]] = None,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
    generators: Optional[Sequence[Generator]] = None,
) -> List[Diagram]:
    """ All morphisms domain -> codomain of the free monoidal category with at most
    ``max_generators`` generator occurrences, in canonical form.

    The search grows canonical partial diagrams one generator at a time,
    breadth first; ``admit`` prunes partial diagrams that cannot be
    completed (e.g. those no run of an automaton survives).
    """
    budget = budget or WorkBudget()
    logger = logger or MoncatLogger()
    generators = list(polygraph.generators if generators is None else generators)
    domain, codomain = tuple(domain), tuple(codomain)
    deltas = [len(g.coarity) - len(g.arity) for g in generators] or [0]
    low, high = min(deltas), max(deltas)

    start = Diagram.identity(polygraph, domain)
    level: Dict[DiagramKey, Diagram] = {}
    if admit is None or admit(start):
        level[start.key()] = start
    seen = set(level)
    found: List[Diagram] = []
    for size in range(max_generators + 1):
        found.extend(d for d in level.values() if d.codomain == codomain)
        if size == max_generators:
            break
        remaining = max_generators - size - 1
        following: Dict[DiagramKey, Diagram] = {}
        for partial in level.values():
            for extended in _extensions(partial, generators):
                budget.tick()
                if not _width_reachable(
                        len(extended.codomain), len(codomain), remaining, low, high):
                    continue
                canonical = extended.canonical()
                key = canonical.syntax()
                if key in seen:
                    continue
                seen.add(key)
                if admit is not None and not admit(canonical):
                    continue
                following[key] = canonical
        logger.debug(f'{len(following)} partial diagrams with {size + 1} generators')
        level = following
        if not level:
            break
    return sorted(found, key=lambda d: (d.generator_count, d.syntax()))


def enumerate_regular(
    a: MonoidalAutomaton,
    max_generators: int,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
) -> List[Diagram]:
    """ Accepted diagrams with at most ``max_generators`` generators. """
    domain, codomain = a.typed()
    generators = [g for g in a.alphabet.generators if g.name in a.transitions]
    found = enumerate_free(
        a.alphabet,
        domain,
        codomain,
        max_generators,
        admit=lambda d: bool(run(a, a.initial, d)),
        budget=budget,
        logger=logger,
        generators=generators,
    )
    return [d for d in found if accepts(a, d)]
