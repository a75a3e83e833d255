""" The optical contour of a multigraph.

Every sort X splits into a left half X^L and a right half X^R, and every
operation f: X1..Xn -> Y into n + 1 sectors ``f.0 .. f.n`` separated by
the padding sorts M{i}^f and N{i}^f:

    f.0: Y^L -> M1^f X1^L N1^f
    f.i: Mi^f Xi^R Ni^f -> M(i+1)^f X(i+1)^L N(i+1)^f
    f.n: Mn^f Xn^R Nn^f -> Y^R

and a nullary f has the single sector f.0: Y^L -> Y^R. Walking around a
derivation tree yields a diagram S^L -> S^R of these sectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from moncat.contextfree.derivation import Derivation, enumerate_derivations
from moncat.contextfree.grammar import CFMonoidalGrammar
from moncat.diagrams.diagram import Diagram
from moncat.exceptions import MalformedContourException
from moncat.optics.functor import MonoidalFunctor
from moncat.optics.raw import RawOptic, raw_representative
from moncat.regular.grammar import RegularMonoidalGrammar, grammar_language
from moncat.signatures.morphisms import PolygraphMorphism
from moncat.signatures.multigraph import Multigraph, Operation
from moncat.signatures.polygraph import Generator, Polygraph
from moncat.utils.budget import WorkBudget
from moncat.utils.logger import MoncatLogger


def left(sort: str) -> str:
    return f'{sort}^L'


def right(sort: str) -> str:
    return f'{sort}^R'


def pad(side: str, position: int, operation: str) -> str:
    return f'{side}{position}^{operation}'


def sector(operation: str, index: int) -> str:
    return f'{operation}.{index}'


@dataclass(frozen=True)
class ContourPolygraph:
    multigraph: Multigraph
    polygraph: Polygraph
    sectors: Dict[str, Tuple[str, int]]

    @property
    def name(self) -> str:
        return self.polygraph.name

    def generator(self, operation: str, index: int) -> Generator:
        return self.polygraph.generator(sector(operation, index))


def _sectors(op: Operation) -> List[Generator]:
    n = op.arity
    if n == 0:
        return [Generator(sector(op.name, 0), (left(op.output),), (right(op.output),))]

    def padded(i: int, middle: str) -> Tuple[str, ...]:
        return pad('M', i, op.name), middle, pad('N', i, op.name)

    result = [Generator(sector(op.name, 0), (left(op.output),), padded(1, left(op.inputs[0])))]
    for i in range(1, n):
        result.append(Generator(
            sector(op.name, i),
            padded(i, right(op.inputs[i - 1])),
            padded(i + 1, left(op.inputs[i]))))
    result.append(Generator(
        sector(op.name, n), padded(n, right(op.inputs[-1])), (right(op.output),)))
    return result


def optical_contour(m: Multigraph) -> ContourPolygraph:
    sorts: List[str] = []
    for sort in m.sorts:
        sorts.extend((left(sort), right(sort)))
    generators: List[Generator] = []
    sectors: Dict[str, Tuple[str, int]] = {}
    for op in m.operations:
        for i in range(1, op.arity + 1):
            sorts.extend((pad('M', i, op.name), pad('N', i, op.name)))
        for index, gen in enumerate(_sectors(op)):
            generators.append(gen)
            sectors[gen.name] = (op.name, index)
    polygraph = Polygraph(f'{m.name}.contour', tuple(sorts), tuple(generators))
    return ContourPolygraph(m, polygraph, sectors)


def grammar_contour(g: CFMonoidalGrammar) -> ContourPolygraph:
    return optical_contour(g.multigraph())


def contour_of_derivation(cp: ContourPolygraph, d: Derivation) -> Diagram:
    """ (r.0) ⨾ C(d1) ⨾ (r.1) ⨾ ... ⨾ C(dn) ⨾ (r.n), children whiskered by their pads. """
    result = Diagram.of_generator(cp.polygraph, cp.generator(d.rule, 0))
    for i, child in enumerate(d.children, start=1):
        inner = contour_of_derivation(cp, child).whisker(
            (pad('M', i, d.rule),), (pad('N', i, d.rule),))
        result = result.compose(inner).compose(
            Diagram.of_generator(cp.polygraph, cp.generator(d.rule, i)))
    return result


def derivation_of_contour(
    cp: ContourPolygraph,
    c: Diagram,
    sort: Optional[str] = None,
) -> Derivation:
    """ Read a contour back into the derivation it walks around. """
    if c.polygraph.name != cp.name:
        raise MalformedContourException(f"diagram is over '{c.polygraph.name}'")
    if len(c.domain) != 1 or len(c.codomain) != 1:
        raise MalformedContourException('a contour goes from one left sort to one right sort')
    found = c.domain[0][:-2]
    if sort is not None and found != sort:
        raise MalformedContourException(f"expected a contour of '{sort}', not '{found}'")
    if c.domain != (left(found),) or c.codomain != (right(found),):
        raise MalformedContourException('boundary is not of the form S^L -> S^R')
    names = [s.generator.name for s in c.slices]

    def parse(expected: str, position: int) -> Tuple[Derivation, int]:
        if position >= len(names) or names[position] not in cp.sectors:
            raise MalformedContourException(f'no sector at slice {position}')
        operation, index = cp.sectors[names[position]]
        op = cp.multigraph.operation(operation)
        if index != 0 or op.output != expected:
            raise MalformedContourException(
                f"slice {position} is '{names[position]}', expected an opening sector of "
                f"'{expected}'")
        position += 1
        children = []
        for i, child_sort in enumerate(op.inputs, start=1):
            child, position = parse(child_sort, position)
            children.append(child)
            if position >= len(names) or names[position] != sector(operation, i):
                raise MalformedContourException(
                    f"expected '{sector(operation, i)}' at slice {position}")
            position += 1
        return Derivation(operation, expected, tuple(children)), position

    result, end = parse(found, 0)
    if end != len(names):
        raise MalformedContourException(f'{len(names) - end} trailing slice(s)')
    return result


def regular_representative(
    g: CFMonoidalGrammar,
    cp: Optional[ContourPolygraph] = None,
) -> RegularMonoidalGrammar:
    """ The identity grammar over the contour, from S^L to S^R. """
    cp = cp or grammar_contour(g)
    return RegularMonoidalGrammar(
        f'{g.name}.representative',
        PolygraphMorphism.identity(cp.polygraph),
        (left(g.start),),
        (right(g.start),),
    )


def contour_bound(max_rules: int) -> int:
    """ A derivation with n rule nodes has a contour of 2n - 1 sectors. """
    return 2 * max_rules - 1


def contour_grammar_language(
    g: CFMonoidalGrammar,
    max_rules: int,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
) -> List[Diagram]:
    """ Contours of the start derivations with at most ``max_rules`` rule nodes,
    enumerated from the regular representative.
    """
    if max_rules < 1:
        return []
    return grammar_language(
        regular_representative(g), contour_bound(max_rules), budget=budget, logger=logger)


def contours(g: CFMonoidalGrammar, max_rules: int) -> List[Diagram]:
    """ Contours computed directly from the enumerated derivations. """
    cp = grammar_contour(g)
    return [contour_of_derivation(cp, d) for d in enumerate_derivations(g, g.start, max_rules)]


def induced_functor(
    g: CFMonoidalGrammar,
    optics: Optional[Dict[str, RawOptic]] = None,
    cp: Optional[ContourPolygraph] = None,
) -> MonoidalFunctor:
    """ The strict monoidal functor out of the contour fixed by the rule optics:
    halves of X go to the sides of its interface, pads to the optic pads and
    sector f.i to the i-th component of the optic of f.
    """
    cp = cp or grammar_contour(g)
    if optics is None:
        _, optics = raw_representative(g)
    sort_map = {}
    for sort, (dom, cod) in g.interfaces.items():
        sort_map[left(sort)] = dom
        sort_map[right(sort)] = cod
    gen_map = {}
    for r in g.rules:
        optic = optics[r.name]
        for i, (m, n) in enumerate(optic.pads, start=1):
            sort_map[pad('M', i, r.name)] = m
            sort_map[pad('N', i, r.name)] = n
        for i, component in enumerate(optic.components):
            gen_map[sector(r.name, i)] = component
    return MonoidalFunctor(cp.polygraph, g.target, sort_map, gen_map)
