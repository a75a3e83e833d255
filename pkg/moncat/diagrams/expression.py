from __future__ import annotations

from typing import List, Mapping, Optional, Tuple

from lark import Transformer, Tree
from lark.exceptions import VisitError

from moncat.diagrams.context import DiagramContext, HoleLabel, hole_generator, make_context
from moncat.diagrams.diagram import Diagram, Slice
from moncat.exceptions import OpenContextException, UnresolvedReferenceException
from moncat.signatures.polygraph import Polygraph, Word
from moncat.syntax.parser import parse_tree

Interfaces = Mapping[str, Tuple[Word, Word]]


class _ExpressionBuilder(Transformer):
    def __init__(self, polygraph: Polygraph, holes: Interfaces, positional: bool):
        super().__init__()
        self.polygraph = polygraph
        self.holes = holes
        self.positional = positional
        self.labels: List[HoleLabel] = []

    def seq(self, items):
        result = items[0]
        for d in items[1:]:
            result = result.compose(d)
        return result

    def par(self, items):
        result = items[0]
        for d in items[1:]:
            result = result.tensor(d)
        return result

    def names(self, items):
        return [str(token) for token in items]

    def generator(self, items):
        name = str(items[0])
        if name == 'id':
            return Diagram.identity(self.polygraph)
        return Diagram.of_generator(self.polygraph, name)

    def call(self, items):
        name, arguments = str(items[0]), items[1]
        if name == 'id':
            return Diagram.identity(self.polygraph, arguments)
        return Diagram.of_generator(self.polygraph, f"{name}[{','.join(arguments)}]")

    def hole(self, items):
        name = str(items[0])
        if name not in self.holes:
            raise UnresolvedReferenceException('hole', name)
        domain, codomain = self.holes[name]
        if self.positional:
            label = HoleLabel(f'x{len(self.labels) + 1}', tuple(domain), tuple(codomain), name)
        else:
            label = HoleLabel(name, tuple(domain), tuple(codomain))
        self.labels.append(label)
        gen = hole_generator(label.variable, label.domain, label.codomain)
        return Diagram(self.polygraph, gen.arity, gen.coarity, (Slice(0, gen, 0),))


def build_expression(
    tree: Tree,
    polygraph: Polygraph,
    holes: Optional[Interfaces] = None,
    positional: bool = False,
) -> DiagramContext:
    """ Evaluate a parsed expression; holes are ordered as they appear in the text.

    With ``positional`` every ``[X]`` is a fresh hole ``x1``, ``x2``, ...
    whose sort is ``X`` (the convention of grammar rules).
    """
    builder = _ExpressionBuilder(polygraph, holes or {}, positional)
    try:
        result = builder.transform(tree)
    except VisitError as error:
        raise error.orig_exc from None
    sorts = {label.variable: label.sort for label in builder.labels if label.sort}
    return make_context(result, order=[label.variable for label in builder.labels], sorts=sorts)


def parse_expression(
    text: str,
    polygraph: Polygraph,
    holes: Optional[Interfaces] = None,
    positional: bool = False,
) -> DiagramContext:
    return build_expression(parse_tree(text, start='expr'), polygraph, holes, positional)


def parse_diagram(text: str, polygraph: Polygraph) -> Diagram:
    context = parse_expression(text, polygraph)
    if not context.is_closed:
        raise OpenContextException(context.variables())
    return context.diagram
