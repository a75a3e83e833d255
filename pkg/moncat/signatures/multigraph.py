from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

from moncat.exceptions import UnknownGeneratorException
from moncat.signatures.polygraph import Word, format_word


@dataclass(frozen=True)
class Operation:
    name: str
    inputs: Word
    output: str

    @property
    def arity(self) -> int:
        return len(self.inputs)

    def __str__(self) -> str:
        return f'{self.name} : {format_word(self.inputs)} -> {self.output}'


@dataclass(frozen=True)
class Multigraph:
    name: str
    sorts: Tuple[str, ...] = ()
    operations: Tuple[Operation, ...] = ()
    _index: Dict[str, Operation] = field(
        default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        for op in self.operations:
            index.setdefault(op.name, op)
        object.__setattr__(self, '_index', index)

    def __iter__(self) -> Iterator[Operation]:
        return iter(self.operations)

    def __len__(self) -> int:
        return len(self.operations)

    def find(self, name: str) -> Optional[Operation]:
        return self._index.get(name)

    def operation(self, name: str) -> Operation:
        op = self.find(name)
        if op is None:
            raise UnknownGeneratorException(name, self.name)
        return op

    def producing(self, sort: str) -> Tuple[Operation, ...]:
        return tuple(op for op in self.operations if op.output == sort)
