from __future__ import annotations

from typing import Optional

from moncat.contextfree.grammar import CFMonoidalGrammar, Rule
from moncat.diagrams.context import DiagramContext, HoleLabel, hole_context
from moncat.exceptions import InterfaceMismatchException, PolygraphMismatchException
from moncat.optics.functor import MonoidalFunctor, apply_functor_context

UNION_START = 'U'


def _relabelled(g: CFMonoidalGrammar, prefix: str):
    interfaces = {f'{prefix}.{sort}': interface for sort, interface in g.interfaces.items()}
    rules = []
    for r in g.rules:
        holes = tuple(
            HoleLabel(label.variable, label.domain, label.codomain, f'{prefix}.{label.sort}')
            for label in r.context.holes)
        rules.append(Rule(
            f'{prefix}.{r.name}', f'{prefix}.{r.output}',
            tuple(f'{prefix}.{sort}' for sort in r.inputs),
            DiagramContext(r.context.diagram, holes)))
    return interfaces, rules


def union(
    g1: CFMonoidalGrammar,
    g2: CFMonoidalGrammar,
    name: Optional[str] = None,
) -> CFMonoidalGrammar:
    """ Disjoint copies of both grammars under a fresh start with two unit rules.

    Derivations of the union carry one extra rule node, so its language at
    bound n + 1 is the union of both languages at bound n.
    """
    if g1.target.name != g2.target.name:
        raise PolygraphMismatchException(g1.target.name, g2.target.name)
    if g1.start_interface != g2.start_interface:
        (d1, c1), (d2, c2) = g1.start_interface, g2.start_interface
        raise InterfaceMismatchException(
            d1 + ('|',) + c1, d2 + ('|',) + c2, where='start symbols of a union')
    domain, codomain = g1.start_interface
    interfaces = {UNION_START: (domain, codomain)}
    rules = []
    for index, g in enumerate((g1, g2), start=1):
        prefix = f'u{index}'
        relabelled, renamed = _relabelled(g, prefix)
        interfaces.update(relabelled)
        start = f'{prefix}.{g.start}'
        rules.append(Rule.of(
            f'union.{index}', UNION_START,
            hole_context(g1.target, 'x1', domain, codomain, start)))
        rules.extend(renamed)
    return CFMonoidalGrammar(
        name or f'{g1.name}+{g2.name}', g1.target, interfaces, tuple(rules), UNION_START)


def map_image(
    g: CFMonoidalGrammar,
    f: MonoidalFunctor,
    name: Optional[str] = None,
) -> CFMonoidalGrammar:
    """ Postcompose every rule context with ``f``; the language becomes its image. """
    if f.source.name != g.target.name:
        raise PolygraphMismatchException(f.source.name, g.target.name)
    interfaces = {
        sort: (f.apply_word(dom), f.apply_word(cod)) for sort, (dom, cod) in g.interfaces.items()}
    rules = tuple(
        Rule(r.name, r.output, r.inputs, apply_functor_context(f, r.context)) for r in g.rules)
    return CFMonoidalGrammar(name or f'{g.name}.image', f.target, interfaces, rules, g.start)
