from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from moncat.diagrams.diagram import Diagram, DiagramKey, Slice
from moncat.exceptions import (
    InterfaceMismatchException, NonlinearContextException, OpenContextException,
    PolygraphMismatchException, UnknownVariableException)
from moncat.signatures.polygraph import Generator, Polygraph, Word
from moncat.signatures.symmetric import Permutation, is_permutation, permute


@dataclass(frozen=True)
class HoleLabel:
    """ A hole variable, its interface ⟨domain|codomain⟩ and, in grammar rules, its sort. """

    variable: str
    domain: Word
    codomain: Word
    sort: Optional[str] = None

    def renamed(self, variable: str) -> HoleLabel:
        return HoleLabel(variable, self.domain, self.codomain, self.sort)


def hole_generator(variable: str, domain: Iterable[str], codomain: Iterable[str]) -> Generator:
    return Generator(f'[{variable}]', tuple(domain), tuple(codomain), Generator.Kind.HOLE)


def hole_variable(gen: Generator) -> str:
    return gen.name[1:-1]


def _hole_slices(d: Diagram) -> List[Tuple[int, Slice]]:
    return [(index, s) for index, s in enumerate(d.slices) if s.generator.is_hole]


@dataclass(frozen=True)
class DiagramContext:
    """ A diagram with linear, labelled holes.

    Holes are slices whose generator has kind ``HOLE``; ``holes`` fixes the
    order in which they are filled by ``substitute``.
    """

    diagram: Diagram
    holes: Tuple[HoleLabel, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'holes', tuple(self.holes))
        seen: Dict[str, Generator] = {}
        for _, s in _hole_slices(self.diagram):
            variable = hole_variable(s.generator)
            if variable in seen:
                raise NonlinearContextException(variable)
            seen[variable] = s.generator
        labels = set()
        for label in self.holes:
            if label.variable in labels:
                raise NonlinearContextException(label.variable)
            labels.add(label.variable)
            if label.variable not in seen:
                raise UnknownVariableException(label.variable)
            gen = seen[label.variable]
            if (gen.arity, gen.coarity) != (label.domain, label.codomain):
                raise InterfaceMismatchException(
                    label.domain + ('|',) + label.codomain,
                    gen.arity + ('|',) + gen.coarity,
                    where=f"hole '{label.variable}'",
                )
        for variable in seen:
            if variable not in labels:
                raise UnknownVariableException(variable)

    @classmethod
    def of(cls, diagram: Diagram) -> DiagramContext:
        return make_context(diagram)

    @property
    def polygraph(self) -> Polygraph:
        return self.diagram.polygraph

    @property
    def domain(self) -> Word:
        return self.diagram.domain

    @property
    def codomain(self) -> Word:
        return self.diagram.codomain

    @property
    def arity(self) -> int:
        return len(self.holes)

    @property
    def is_closed(self) -> bool:
        return not self.holes

    def variables(self) -> Tuple[str, ...]:
        return tuple(label.variable for label in self.holes)

    def hole(self, variable: str) -> HoleLabel:
        for label in self.holes:
            if label.variable == variable:
                return label
        raise UnknownVariableException(variable)

    def close(self) -> Diagram:
        if self.holes:
            raise OpenContextException(self.variables())
        return self.diagram

    def rename(self, mapping: Mapping[str, str]) -> DiagramContext:
        for variable in mapping:
            self.hole(variable)
        targets = [mapping.get(v, v) for v in self.variables()]
        if len(set(targets)) != len(targets):
            duplicate = next(t for t in targets if targets.count(t) > 1)
            raise NonlinearContextException(duplicate)
        slices = []
        for s in self.diagram.slices:
            if s.generator.is_hole and hole_variable(s.generator) in mapping:
                gen = hole_generator(
                    mapping[hole_variable(s.generator)], s.generator.arity, s.generator.coarity)
                s = Slice(s.left, gen, s.right)
            slices.append(s)
        return DiagramContext(
            Diagram(self.polygraph, self.domain, self.codomain, slices),
            tuple(label.renamed(mapping.get(label.variable, label.variable))
                  for label in self.holes),
        )

    def positional(self, prefix: str = 'x') -> DiagramContext:
        """ Rename holes to x1..xn following the hole order. """
        return self.rename({v: f'{prefix}{k + 1}' for k, v in enumerate(self.variables())})

    def key(self) -> Tuple[DiagramKey, Tuple[Tuple[Word, Word], ...]]:
        normal = self.positional('#')
        interfaces = tuple((label.domain, label.codomain) for label in normal.holes)
        return normal.diagram.key(), interfaces


def make_context(
    diagram: Diagram,
    order: Optional[Sequence[str]] = None,
    sorts: Optional[Mapping[str, str]] = None,
) -> DiagramContext:
    """ Collect the holes of ``diagram`` into a context.

    Without ``order`` the holes are listed left to right as they first
    appear in the canonical form.
    """
    sorts = sorts or {}
    found: Dict[str, HoleLabel] = {}
    for _, s in _hole_slices(diagram):
        variable = hole_variable(s.generator)
        if variable in found:
            raise NonlinearContextException(variable)
        found[variable] = HoleLabel(
            variable, s.generator.arity, s.generator.coarity, sorts.get(variable))
    if order is None:
        order = [hole_variable(s.generator) for _, s in _hole_slices(diagram.canonical())]
    else:
        for variable in order:
            if variable not in found:
                raise UnknownVariableException(variable)
        if len(set(order)) != len(order):
            raise NonlinearContextException(next(v for v in order if list(order).count(v) > 1))
        missing = [v for v in found if v not in order]
        if missing:
            raise UnknownVariableException(missing[0])
    return DiagramContext(diagram, tuple(found[v] for v in order))


def hole_context(
    polygraph: Polygraph,
    variable: str,
    domain: Iterable[str],
    codomain: Iterable[str],
    sort: Optional[str] = None,
) -> DiagramContext:
    """ The context consisting of a single bare hole. """
    gen = hole_generator(variable, domain, codomain)
    return DiagramContext(
        Diagram(polygraph, gen.arity, gen.coarity, (Slice(0, gen, 0),)),
        (HoleLabel(variable, gen.arity, gen.coarity, sort),),
    )


def substitute(ctx: DiagramContext, assignment: Mapping[str, DiagramContext]) -> DiagramContext:
    """ Fill holes of ``ctx`` with contexts; holes of the arguments take their place in order. """
    for variable, filler in assignment.items():
        label = ctx.hole(variable)
        if filler.polygraph.name != ctx.polygraph.name:
            raise PolygraphMismatchException(ctx.polygraph.name, filler.polygraph.name)
        if (filler.domain, filler.codomain) != (label.domain, label.codomain):
            raise InterfaceMismatchException(
                label.domain + ('|',) + label.codomain,
                filler.domain + ('|',) + filler.codomain,
                where=f"substitution for '{variable}'",
            )

    holes: List[HoleLabel] = []
    for label in ctx.holes:
        if label.variable in assignment:
            holes.extend(assignment[label.variable].holes)
        else:
            holes.append(label)
    names = [label.variable for label in holes]
    if len(set(names)) != len(names):
        raise NonlinearContextException(next(v for v in names if names.count(v) > 1))

    slices: List[Slice] = []
    for s in ctx.diagram.slices:
        variable = hole_variable(s.generator) if s.generator.is_hole else None
        if variable in assignment:
            slices.extend(f.shifted(s.left, s.right) for f in assignment[variable].diagram.slices)
        else:
            slices.append(s)
    return DiagramContext(Diagram(ctx.polygraph, ctx.domain, ctx.codomain, slices), tuple(holes))


def permute_holes(ctx: DiagramContext, sigma: Permutation) -> DiagramContext:
    """ Reorder the holes: position k of the result is hole σ(k) of ``ctx``. """
    sigma = tuple(sigma)
    if len(sigma) != ctx.arity or not is_permutation(sigma):
        raise UnknownVariableException(f'permutation {sigma}')
    return DiagramContext(ctx.diagram, permute(ctx.holes, sigma))


def contexts_equal(c1: DiagramContext, c2: DiagramContext) -> bool:
    if c1.polygraph.name != c2.polygraph.name:
        raise PolygraphMismatchException(c1.polygraph.name, c2.polygraph.name)
    return c1.key() == c2.key()
