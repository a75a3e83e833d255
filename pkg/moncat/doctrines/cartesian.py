""" Term forests: the normal form of the free cartesian category.

Every morphism built from coarity-1 generators, ``copy[a]``, ``del[a]``
and ``swap[a,b]`` is a tuple of terms over the input variables, with
variables free to repeat or disappear. Generators into the empty word
are erased, the empty word being terminal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple, Union

from moncat.diagrams.diagram import Diagram
from moncat.exceptions import DoctrineException, PolygraphMismatchException
from moncat.signatures.polygraph import Doctrine, Generator, Word, format_word
from moncat.signatures.structural import parse_structural_name


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self) -> str:
        return f'x{self.index + 1}'


@dataclass(frozen=True)
class App:
    name: str
    args: Tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({', '.join(str(arg) for arg in self.args)})"


Term = Union[Var, App]


@dataclass(frozen=True)
class TermForest:
    inputs: Word
    outputs: Word
    terms: Tuple[Term, ...]

    def __str__(self) -> str:
        terms = ', '.join(str(t) for t in self.terms)
        return f'[{format_word(self.inputs)}] ⊢ ({terms}) : [{format_word(self.outputs)}]'

    def key(self) -> Tuple[Word, Word, Tuple[Term, ...]]:
        return self.inputs, self.outputs, self.terms


def _structural(gen: Generator, args: List[Term]) -> List[Term]:
    operation, _ = parse_structural_name(gen.name)
    if operation == 'copy':
        return [args[0], args[0]]
    if operation == 'del':
        return []
    if operation == 'swap':
        return [args[1], args[0]]
    raise DoctrineException(f"'{gen.name}' is not a cartesian structural generator")


def to_term_forest(d: Diagram) -> TermForest:
    if d.polygraph.doctrine not in (Doctrine.CARTESIAN, Doctrine.FREE):
        raise DoctrineException(
            f"Polygraph '{d.polygraph.name}' is {d.polygraph.doctrine.value}, not cartesian")
    frontier: List[Term] = [Var(index) for index in range(len(d.domain))]
    for s in d.slices:
        gen = s.generator
        k = len(gen.arity)
        args = frontier[s.left:s.left + k]
        if gen.kind is Generator.Kind.STRUCTURAL:
            produced = _structural(gen, args)
        elif len(gen.coarity) == 1:
            produced = [App(gen.name, tuple(args))]
        elif not gen.coarity:
            produced = []
        else:
            raise DoctrineException(
                f"Generator '{gen.name}' has coarity {len(gen.coarity)}, "
                'term forests need coarity 1')
        frontier[s.left:s.left + k] = produced
    return TermForest(d.domain, d.codomain, tuple(frontier))


def term_forest_equal(d1: Diagram, d2: Diagram) -> bool:
    if d1.polygraph.name != d2.polygraph.name:
        raise PolygraphMismatchException(d1.polygraph.name, d2.polygraph.name)
    return to_term_forest(d1) == to_term_forest(d2)
