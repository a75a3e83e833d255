from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, Optional, Tuple

from moncat.exceptions import UnknownGeneratorException, UnknownSortException

Word = Tuple[str, ...]


def word(*sorts: str) -> Word:
    """ Build a word from sorts, splitting whitespace separated strings. """
    return tuple(s for part in sorts for s in part.split())


def format_word(w: Iterable[str]) -> str:
    text = ' '.join(w)
    return text if text else 'ε'


class Doctrine(Enum):
    FREE = 'free'
    CARTESIAN = 'cartesian'
    HYPERGRAPH = 'hypergraph'


@dataclass(frozen=True)
class Generator:
    class Kind(Enum):
        BASE = 'base'
        STRUCTURAL = 'structural'
        HOLE = 'hole'

    name: str
    arity: Word
    coarity: Word
    kind: Kind = Kind.BASE

    @property
    def is_state(self) -> bool:
        return not self.arity

    @property
    def is_hole(self) -> bool:
        return self.kind is Generator.Kind.HOLE

    def __str__(self) -> str:
        return f'{self.name} : {format_word(self.arity)} -> {format_word(self.coarity)}'


@dataclass(frozen=True)
class Polygraph:
    """ A finite signature of generators with word shaped interfaces.

    Structural generators of the cartesian and hypergraph doctrines are
    not stored: they are synthesized on lookup from names such as
    ``copy[a]`` or ``swap[a,b]``.
    """

    name: str
    sorts: Tuple[str, ...] = ()
    generators: Tuple[Generator, ...] = ()
    doctrine: Doctrine = Doctrine.FREE
    _index: Dict[str, Generator] = field(
        default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        for gen in self.generators:
            index.setdefault(gen.name, gen)
        object.__setattr__(self, '_index', index)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def has_sort(self, sort: str) -> bool:
        return sort in self.sorts

    def check_word(self, w: Iterable[str]) -> Word:
        w = tuple(w)
        for sort in w:
            if sort not in self.sorts:
                raise UnknownSortException(sort, self.name)
        return w

    def find(self, name: str) -> Optional[Generator]:
        if name in self._index:
            return self._index[name]
        if self.doctrine is not Doctrine.FREE:
            from moncat.signatures.structural import structural_generator
            gen = structural_generator(self.doctrine, name)
            if gen is not None and all(s in self.sorts for s in gen.arity + gen.coarity):
                return gen
        return None

    def generator(self, name: str) -> Generator:
        gen = self.find(name)
        if gen is None:
            raise UnknownGeneratorException(name, self.name)
        return gen

    def rank(self, gen: Generator) -> int:
        for index, candidate in enumerate(self.generators):
            if candidate.name == gen.name:
                return index
        return len(self.generators)

    def extend(self, generators: Iterable[Generator], name: Optional[str] = None) -> Polygraph:
        return Polygraph(
            name=name or self.name,
            sorts=self.sorts,
            generators=self.generators + tuple(generators),
            doctrine=self.doctrine,
        )

    def with_doctrine(self, doctrine: Doctrine) -> Polygraph:
        return Polygraph(self.name, self.sorts, self.generators, doctrine)
