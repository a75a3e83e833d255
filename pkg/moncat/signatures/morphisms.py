from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable

from moncat.exceptions import MorphismException
from moncat.signatures.multigraph import Multigraph
from moncat.signatures.polygraph import Polygraph, Word, format_word
from moncat.signatures.report import ValidationReport


@dataclass(frozen=True)
class PolygraphMorphism:
    """ Maps sorts to sorts and generators to generators (by name). """

    source: Polygraph
    target: Polygraph
    sort_map: Dict[str, str]
    gen_map: Dict[str, str]

    @classmethod
    def identity(cls, p: Polygraph) -> PolygraphMorphism:
        return cls(
            source=p,
            target=p,
            sort_map={sort: sort for sort in p.sorts},
            gen_map={gen.name: gen.name for gen in p.generators},
        )

    def apply_word(self, w: Iterable[str]) -> Word:
        try:
            return tuple(self.sort_map[sort] for sort in w)
        except KeyError as error:
            raise MorphismException(f'Sort {error} is not mapped') from None

    def validate(self) -> ValidationReport:
        report = ValidationReport(f'{self.source.name} -> {self.target.name}')
        for sort in self.source.sorts:
            if sort not in self.sort_map:
                report.add('unmapped sort', sort)
            elif self.sort_map[sort] not in self.target.sorts:
                report.add('undeclared sort', f"'{self.sort_map[sort]}' in the target")
        for gen in self.source.generators:
            if gen.name not in self.gen_map:
                report.add('unmapped generator', gen.name)
                continue
            image = self.target.find(self.gen_map[gen.name])
            if image is None:
                report.add('unknown generator', f"'{self.gen_map[gen.name]}' in the target")
                continue
            if any(sort not in self.sort_map for sort in gen.arity + gen.coarity):
                continue
            arity, coarity = self.apply_word(gen.arity), self.apply_word(gen.coarity)
            if (arity, coarity) != (image.arity, image.coarity):
                report.add(
                    'interface mismatch',
                    f"'{gen.name}' maps to '{image.name}' but "
                    f'[{format_word(arity)}] -> [{format_word(coarity)}] differs from '
                    f'[{format_word(image.arity)}] -> [{format_word(image.coarity)}]'
                )
        return report

    def compose(self, other: PolygraphMorphism) -> PolygraphMorphism:
        """ Diagrammatic order: first ``self`` then ``other``. """
        if self.target.name != other.source.name:
            raise MorphismException(
                f"Cannot compose into '{other.source.name}' from '{self.target.name}'")
        return PolygraphMorphism(
            source=self.source,
            target=other.target,
            sort_map={s: other.sort_map[t] for s, t in self.sort_map.items()},
            gen_map={g: other.gen_map[h] for g, h in self.gen_map.items()},
        )


@dataclass(frozen=True)
class MultigraphMorphism:
    source: Multigraph
    target: Multigraph
    sort_map: Dict[str, str]
    op_map: Dict[str, str]

    @classmethod
    def identity(cls, m: Multigraph) -> MultigraphMorphism:
        return cls(m, m, {s: s for s in m.sorts}, {op.name: op.name for op in m.operations})

    def validate(self) -> ValidationReport:
        report = ValidationReport(f'{self.source.name} -> {self.target.name}')
        for op in self.source.operations:
            image = self.target.find(self.op_map.get(op.name, ''))
            if image is None:
                report.add('unmapped operation', op.name)
                continue
            inputs = tuple(self.sort_map.get(s) for s in op.inputs)
            if inputs != image.inputs or self.sort_map.get(op.output) != image.output:
                report.add('interface mismatch', f"'{op.name}' maps to '{image.name}'")
        return report

    def compose(self, other: MultigraphMorphism) -> MultigraphMorphism:
        if self.target.name != other.source.name:
            raise MorphismException(
                f"Cannot compose into '{other.source.name}' from '{self.target.name}'")
        return MultigraphMorphism(
            source=self.source,
            target=other.target,
            sort_map={s: other.sort_map[t] for s, t in self.sort_map.items()},
            op_map={o: other.op_map[p] for o, p in self.op_map.items()},
        )
