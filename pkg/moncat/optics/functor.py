from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from moncat.diagrams.context import DiagramContext, HoleLabel, hole_generator, hole_variable
from moncat.diagrams.diagram import Diagram, Slice
from moncat.exceptions import DoctrineException, MorphismException, PolygraphMismatchException
from moncat.signatures.polygraph import Generator, Polygraph, Word, format_word
from moncat.signatures.report import ValidationReport
from moncat.signatures.structural import parse_structural_name, structural_name


@dataclass(frozen=True)
class MonoidalFunctor:
    """ A strict monoidal functor out of the free category on ``source``.

    Sorts go to words and generators to diagrams of ``target``; holes are
    carried over with translated interfaces.
    """

    source: Polygraph
    target: Polygraph
    sort_map: Mapping[str, Word]
    gen_map: Mapping[str, Diagram]

    def __post_init__(self):
        object.__setattr__(self, 'sort_map', {s: tuple(w) for s, w in self.sort_map.items()})
        object.__setattr__(self, 'gen_map', dict(self.gen_map))

    @classmethod
    def identity(cls, p: Polygraph) -> MonoidalFunctor:
        return cls(
            p, p, {s: (s,) for s in p.sorts},
            {gen.name: Diagram.of_generator(p, gen) for gen in p.generators})

    def apply_word(self, w: Iterable[str]) -> Word:
        result: Word = ()
        for sort in w:
            if sort not in self.sort_map:
                raise MorphismException(f"Sort '{sort}' is not mapped")
            result += self.sort_map[sort]
        return result

    def image(self, gen: Generator) -> Diagram:
        arity, coarity = self.apply_word(gen.arity), self.apply_word(gen.coarity)
        if gen.is_hole:
            hole = hole_generator(hole_variable(gen), arity, coarity)
            return Diagram(self.target, arity, coarity, (Slice(0, hole, 0),))
        if gen.kind is Generator.Kind.STRUCTURAL:
            operation, sorts = parse_structural_name(gen.name)
            images = [self.sort_map.get(s, ()) for s in sorts]
            if any(len(w) != 1 for w in images):
                raise DoctrineException(
                    f"'{gen.name}' can only be mapped when its sorts go to single sorts")
            name = structural_name(operation, *(w[0] for w in images))
            return Diagram.of_generator(self.target, self.target.generator(name))
        if gen.name not in self.gen_map:
            raise MorphismException(f"Generator '{gen.name}' is not mapped")
        return self.gen_map[gen.name]

    def validate(self) -> ValidationReport:
        report = ValidationReport(f'{self.source.name} => {self.target.name}')
        for sort in self.source.sorts:
            if sort not in self.sort_map:
                report.add('unmapped sort', sort)
            else:
                for s in self.sort_map[sort]:
                    if not self.target.has_sort(s):
                        report.add('undeclared sort', f"'{s}' in the image of '{sort}'")
        for gen in self.source.generators:
            image = self.gen_map.get(gen.name)
            if image is None:
                report.add('unmapped generator', gen.name)
                continue
            if any(s not in self.sort_map for s in gen.arity + gen.coarity):
                continue
            expected = (self.apply_word(gen.arity), self.apply_word(gen.coarity))
            if (image.domain, image.codomain) != expected:
                report.add(
                    'interface mismatch',
                    f"'{gen.name}' needs [{format_word(expected[0])}] -> "
                    f'[{format_word(expected[1])}] but its image is '
                    f'[{format_word(image.domain)}] -> [{format_word(image.codomain)}]')
        return report


def apply_functor(f: MonoidalFunctor, d: Diagram) -> Diagram:
    """ Each generator is replaced by its image, whiskered by the images of the pads. """
    if d.polygraph.name != f.source.name:
        raise PolygraphMismatchException(f.source.name, d.polygraph.name)
    slices = []
    frontier = d.domain
    for s in d.slices:
        k = len(s.generator.arity)
        left = f.apply_word(frontier[:s.left])
        right = f.apply_word(frontier[s.left + k:])
        slices.extend(t.shifted(len(left), len(right)) for t in f.image(s.generator).slices)
        frontier = s.apply(frontier)
    return Diagram(f.target, f.apply_word(d.domain), f.apply_word(d.codomain), slices)


def apply_functor_context(f: MonoidalFunctor, ctx: DiagramContext) -> DiagramContext:
    return DiagramContext(
        apply_functor(f, ctx.diagram),
        tuple(
            HoleLabel(label.variable, f.apply_word(label.domain),
                      f.apply_word(label.codomain), label.sort)
            for label in ctx.holes
        ),
    )
