from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, List, Tuple, Union

from moncat.exceptions import (
    InterchangeException, InterfaceMismatchException, PolygraphMismatchException)
from moncat.signatures.polygraph import Generator, Polygraph, Word

SliceKey = Tuple[int, str, int]
DiagramKey = Tuple[Word, Word, Tuple[SliceKey, ...]]


@dataclass(frozen=True)
class Slice:
    """ id_left ⊗ generator ⊗ id_right applied to the current frontier. """

    left: int
    generator: Generator
    right: int

    def shifted(self, left: int = 0, right: int = 0) -> Slice:
        return Slice(self.left + left, self.generator, self.right + right)

    @property
    def width_in(self) -> int:
        return self.left + len(self.generator.arity) + self.right

    @property
    def width_out(self) -> int:
        return self.left + len(self.generator.coarity) + self.right

    def key(self) -> SliceKey:
        return self.left, self.generator.name, self.right

    def apply(self, frontier: Word) -> Word:
        arity = self.generator.arity
        if len(frontier) != self.width_in or frontier[self.left:self.left + len(arity)] != arity:
            raise InterfaceMismatchException(
                arity,
                frontier[self.left:self.left + len(arity)],
                where=f"slice '{self.generator.name}' at {self.left}/{len(frontier)}",
            )
        return frontier[:self.left] + self.generator.coarity + frontier[self.left + len(arity):]


@dataclass(frozen=True)
class Diagram:
    """ A morphism of the free strict monoidal category over ``polygraph``.

    The diagram is stored as a foliation: a list of slices, each one
    generator surrounded by identity wires. Two foliations denote the same
    morphism iff their canonical forms coincide, see ``canonical_form``.
    """

    polygraph: Polygraph
    domain: Word
    codomain: Word
    slices: Tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'domain', tuple(self.domain))
        object.__setattr__(self, 'codomain', tuple(self.codomain))
        object.__setattr__(self, 'slices', tuple(self.slices))
        frontier = self.domain
        for s in self.slices:
            frontier = s.apply(frontier)
        if frontier != self.codomain:
            raise InterfaceMismatchException(self.codomain, frontier, where='diagram codomain')

    @classmethod
    def identity(cls, polygraph: Polygraph, w: Iterable[str] = ()) -> Diagram:
        w = polygraph.check_word(w)
        return cls(polygraph, w, w, ())

    @classmethod
    def of_generator(cls, polygraph: Polygraph, generator: Union[str, Generator]) -> Diagram:
        if isinstance(generator, str):
            generator = polygraph.generator(generator)
        return cls(polygraph, generator.arity, generator.coarity, (Slice(0, generator, 0),))

    @property
    def generator_count(self) -> int:
        return len(self.slices)

    @property
    def is_identity(self) -> bool:
        return not self.slices

    def generators(self) -> List[Generator]:
        return [s.generator for s in self.slices]

    def frontiers(self) -> List[Word]:
        result = [self.domain]
        for s in self.slices:
            result.append(s.apply(result[-1]))
        return result

    def width(self) -> int:
        return max(len(f) for f in self.frontiers())

    def _check_polygraph(self, other: Diagram) -> None:
        if self.polygraph.name != other.polygraph.name:
            raise PolygraphMismatchException(self.polygraph.name, other.polygraph.name)

    def compose(self, other: Diagram) -> Diagram:
        self._check_polygraph(other)
        if self.codomain != other.domain:
            raise InterfaceMismatchException(self.codomain, other.domain, where='composition')
        return Diagram(self.polygraph, self.domain, other.codomain, self.slices + other.slices)

    def tensor(self, other: Diagram) -> Diagram:
        self._check_polygraph(other)
        slices = tuple(s.shifted(right=len(other.domain)) for s in self.slices) + tuple(
            s.shifted(left=len(self.codomain)) for s in other.slices)
        return Diagram(
            self.polygraph,
            self.domain + other.domain,
            self.codomain + other.codomain,
            slices,
        )

    def __rshift__(self, other: Diagram) -> Diagram:
        return self.compose(other)

    def __matmul__(self, other: Diagram) -> Diagram:
        return self.tensor(other)

    def whisker(self, left: Word, right: Word) -> Diagram:
        """ id_left ⊗ self ⊗ id_right. """
        return Diagram(
            self.polygraph,
            tuple(left) + self.domain + tuple(right),
            tuple(left) + self.codomain + tuple(right),
            tuple(s.shifted(len(left), len(right)) for s in self.slices),
        )

    def power(self, exponent: int) -> Diagram:
        if self.domain != self.codomain:
            raise InterfaceMismatchException(self.domain, self.codomain, where='power')
        return Diagram(self.polygraph, self.domain, self.codomain, self.slices * exponent)

    def with_polygraph(self, polygraph: Polygraph) -> Diagram:
        return replace(self, polygraph=polygraph)

    def interchangeable(self, index: int) -> Tuple[bool, ...]:
        """ The interchange moves available for slices ``index`` and ``index + 1``.

        Returns the admissible values of ``prefer_left`` (empty when the
        slices share a wire).
        """
        first, second = self.slices[index], self.slices[index + 1]
        outputs = len(first.generator.coarity)
        inputs = len(second.generator.arity)
        on_left = second.left + inputs <= first.left
        on_right = second.left >= first.left + outputs
        return tuple(flag for flag, ok in ((True, on_left), (False, on_right)) if ok)

    def interchange(self, index: int, prefer_left: bool = True) -> Diagram:
        options = self.interchangeable(index)
        if not options:
            raise InterchangeException(index)
        to_left = prefer_left if len(options) == 2 else options[0]
        first, second = self.slices[index], self.slices[index + 1]
        k1, m1 = len(first.generator.arity), len(first.generator.coarity)
        k2, m2 = len(second.generator.arity), len(second.generator.coarity)
        width = first.width_in
        if to_left:
            moved_second = Slice(second.left, second.generator, width - second.left - k2)
            moved_first_left = first.left - k2 + m2
        else:
            moved_second_left = second.left - m1 + k1
            moved_second = Slice(
                moved_second_left, second.generator, width - moved_second_left - k2)
            moved_first_left = first.left
        middle = width - k2 + m2
        moved_first = Slice(moved_first_left, first.generator, middle - moved_first_left - k1)
        slices = self.slices[:index] + (moved_second, moved_first) + self.slices[index + 2:]
        return Diagram(self.polygraph, self.domain, self.codomain, slices)

    def syntax(self) -> DiagramKey:
        return self.domain, self.codomain, tuple(s.key() for s in self.slices)

    def canonical(self) -> Diagram:
        from moncat.diagrams.canonical import canonical_form
        return canonical_form(self)

    def key(self) -> DiagramKey:
        return self.canonical().syntax()


def equal(d1: Diagram, d2: Diagram) -> bool:
    if d1.polygraph.name != d2.polygraph.name:
        raise PolygraphMismatchException(d1.polygraph.name, d2.polygraph.name)
    return d1.key() == d2.key()
