from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from moncat.contextfree.derivation import Derivation
from moncat.contextfree.grammar import CFMonoidalGrammar
from moncat.diagrams.canonical import Wiring
from moncat.diagrams.context import (
    DiagramContext, HoleLabel, contexts_equal, hole_generator, hole_variable)
from moncat.diagrams.diagram import Diagram, Slice
from moncat.exceptions import (
    FactorizationException, InterfaceMismatchException, PolygraphMismatchException)
from moncat.signatures.multigraph import Multigraph
from moncat.signatures.polygraph import Polygraph, Word

Pads = Tuple[Word, Word]


@dataclass(frozen=True)
class RawOptic:
    """ Diagrams f0..fn separated by n holes.

    Hole i sits between f(i-1) and f(i), padded by ``pads[i-1] = (M_i, N_i)``:
    f(i-1) ends in M_i·A_i·N_i and f(i) starts at M_i·B_i·N_i, where
    ``holes[i-1] = (A_i, B_i)``.
    """

    components: Tuple[Diagram, ...]
    pads: Tuple[Pads, ...] = ()
    holes: Tuple[Pads, ...] = ()
    sorts: Tuple[Optional[str], ...] = None

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(self.components))
        object.__setattr__(self, 'pads', tuple((tuple(m), tuple(n)) for m, n in self.pads))
        object.__setattr__(self, 'holes', tuple((tuple(a), tuple(b)) for a, b in self.holes))
        if self.sorts is None:
            object.__setattr__(self, 'sorts', (None,) * len(self.holes))
        object.__setattr__(self, 'sorts', tuple(self.sorts))
        n = len(self.holes)
        if len(self.components) != n + 1 or len(self.pads) != n or len(self.sorts) != n:
            raise FactorizationException(
                f'A raw optic with {n} hole(s) needs {n + 1} components and {n} pads')
        name = self.components[0].polygraph.name
        for f in self.components[1:]:
            if f.polygraph.name != name:
                raise PolygraphMismatchException(name, f.polygraph.name)
        for i, ((m, n_), (a, b)) in enumerate(zip(self.pads, self.holes)):
            before, after = self.components[i], self.components[i + 1]
            if before.codomain != m + a + n_:
                raise InterfaceMismatchException(
                    m + a + n_, before.codomain, where=f'component {i} codomain')
            if after.domain != m + b + n_:
                raise InterfaceMismatchException(
                    m + b + n_, after.domain, where=f'component {i + 1} domain')

    @property
    def arity(self) -> int:
        return len(self.holes)

    @property
    def polygraph(self) -> Polygraph:
        return self.components[0].polygraph

    @property
    def domain(self) -> Word:
        return self.components[0].domain

    @property
    def codomain(self) -> Word:
        return self.components[-1].codomain


def identity_optic(
    polygraph: Polygraph,
    a: Word,
    b: Word,
    sort: Optional[str] = None,
) -> RawOptic:
    return RawOptic(
        (Diagram.identity(polygraph, a), Diagram.identity(polygraph, b)),
        (((), ()),), ((a, b),), (sort,))


def glue(o: RawOptic) -> DiagramContext:
    """ f0 ⨾ (id ⊗ x1 ⊗ id) ⨾ f1 ⨾ ... ⨾ fn with holes named x1..xn. """
    slices: List[Slice] = list(o.components[0].slices)
    labels = []
    for i, ((m, n), (a, b)) in enumerate(zip(o.pads, o.holes)):
        variable = f'x{i + 1}'
        slices.append(Slice(len(m), hole_generator(variable, a, b), len(n)))
        slices.extend(o.components[i + 1].slices)
        labels.append(HoleLabel(variable, a, b, o.sorts[i]))
    return DiagramContext(Diagram(o.polygraph, o.domain, o.codomain, slices), tuple(labels))


def raw_compose(f: RawOptic, g: RawOptic, index: int) -> RawOptic:
    """ Plug ``f`` into hole ``index`` (0-based) of ``g``.

    The components of ``f`` are whiskered by the pads of that hole; a
    nullary ``f`` fuses the two components of ``g`` around the hole.
    """
    if not 0 <= index < g.arity:
        raise FactorizationException(f'Raw optic has no hole {index}')
    a, b = g.holes[index]
    if (f.domain, f.codomain) != (a, b):
        raise InterfaceMismatchException(
            a + ('|',) + b, f.domain + ('|',) + f.codomain, where=f'hole {index}')
    m, n = g.pads[index]
    inner = [c.whisker(m, n) for c in f.components]
    before, after = g.components[index], g.components[index + 1]
    if len(inner) == 1:
        inner = [before.compose(inner[0]).compose(after)]
    else:
        inner[0] = before.compose(inner[0])
        inner[-1] = inner[-1].compose(after)
    components = g.components[:index] + tuple(inner) + g.components[index + 2:]
    pads = g.pads[:index] + tuple((m + p, q + n) for p, q in f.pads) + g.pads[index + 1:]
    return RawOptic(
        components,
        pads,
        g.holes[:index] + f.holes + g.holes[index + 1:],
        g.sorts[:index] + f.sorts + g.sorts[index + 1:],
    )


def _dependencies(d: Diagram) -> nx.DiGraph:
    wiring = Wiring(d)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(d.slices)))
    for occ, wires in enumerate(wiring.inputs):
        for w in wires:
            producer = wiring.producer[w]
            if producer is not None:
                graph.add_edge(producer[0], occ)
    return graph


def _in_hole_order(ctx: DiagramContext) -> Diagram:
    """ A foliation of the context whose hole slices appear in the declared hole order.

    Slices are bubbled towards a topological order of the occurrence graph
    extended by the hole chain; adjacent slices that turn out to be stuck
    add an edge and the order is recomputed.
    """
    d = ctx.diagram
    graph = _dependencies(d)
    occurrence = {
        hole_variable(s.generator): index
        for index, s in enumerate(d.slices) if s.generator.is_hole
    }
    chain = [occurrence[v] for v in ctx.variables()]
    graph.add_edges_from(zip(chain, chain[1:]))
    order = list(range(len(d.slices)))
    while True:
        if not nx.is_directed_acyclic_graph(graph):
            raise FactorizationException(
                f"Holes {', '.join(ctx.variables())} cannot be sequenced in this order")
        ranking = nx.lexicographical_topological_sort(graph)
        target = {occ: rank for rank, occ in enumerate(ranking)}
        stuck = None
        changed = True
        while changed and stuck is None:
            changed = False
            for i in range(len(order) - 1):
                if target[order[i]] < target[order[i + 1]]:
                    continue
                if not d.interchangeable(i):
                    stuck = (order[i], order[i + 1])
                    break
                d = d.interchange(i)
                order[i], order[i + 1] = order[i + 1], order[i]
                changed = True
        if stuck is None:
            return d
        graph.add_edge(*stuck)


def factor_context(ctx: DiagramContext) -> RawOptic:
    """ Split a context at its holes, in the declared hole order. """
    d = _in_hole_order(ctx)
    components: List[Diagram] = []
    pads: List[Pads] = []
    holes: List[Pads] = []
    start = frontier = d.domain
    run: List[Slice] = []
    for s in d.slices:
        following = s.apply(frontier)
        if s.generator.is_hole:
            components.append(Diagram(d.polygraph, start, frontier, run))
            k = len(s.generator.arity)
            pads.append((frontier[:s.left], frontier[s.left + k:]))
            holes.append((s.generator.arity, s.generator.coarity))
            start, run = following, []
        else:
            run.append(s)
        frontier = following
    components.append(Diagram(d.polygraph, start, frontier, run))
    return RawOptic(
        tuple(components), tuple(pads), tuple(holes), tuple(label.sort for label in ctx.holes))


def raw_representative(g: CFMonoidalGrammar) -> Tuple[Multigraph, Dict[str, RawOptic]]:
    """ The rule multigraph with one raw optic per rule, factored in the declared hole order. """
    return g.multigraph(), {r.name: factor_context(r.context) for r in g.rules}


def evaluate_raw(
    g: CFMonoidalGrammar,
    d: Derivation,
    optics: Optional[Dict[str, RawOptic]] = None,
) -> RawOptic:
    """ Compose the raw optics of the rules along the derivation tree. """
    if optics is None:
        _, optics = raw_representative(g)
    result = optics[d.rule]
    for index in reversed(range(len(d.children))):
        result = raw_compose(evaluate_raw(g, d.children[index], optics), result, index)
    return result


def raw_optic_equal(o1: RawOptic, o2: RawOptic) -> bool:
    """ Equality of raw optics: same pads and holes, equal components. """
    if (o1.pads, o1.holes) != (o2.pads, o2.holes):
        return False
    return all(f.key() == g.key() for f, g in zip(o1.components, o2.components))


def glued_equal(o1: RawOptic, o2: RawOptic) -> bool:
    """ Equality after quotienting to diagram contexts. """
    return contexts_equal(glue(o1), glue(o2))
