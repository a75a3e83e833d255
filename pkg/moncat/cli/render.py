from __future__ import annotations

from typing import List

import pydot

from moncat.diagrams.canonical import Wiring
from moncat.diagrams.diagram import Diagram


def render_dot(d: Diagram, name: str = 'diagram') -> str:
    """ Boxes become nodes, wires edges labelled by their sort; interface wires end in
    point nodes ranked at the top and bottom. Holes are shaded.
    """
    wiring = Wiring(d)
    graph = pydot.Dot(name, graph_type='digraph', rankdir='TB')
    graph.set_node_defaults(shape='box')
    for prefix, width, rank in (('in', len(d.domain), 'source'), ('out', len(d.codomain), 'sink')):
        for i in range(width):
            graph.add_node(pydot.Node(f'{prefix}{i}', shape='point'))
        if width:
            ranked = pydot.Subgraph(rank=rank)
            for i in range(width):
                ranked.add_node(pydot.Node(f'{prefix}{i}'))
            graph.add_subgraph(ranked)
    for occ, gen in enumerate(wiring.generators):
        shading = {'style': 'filled', 'fillcolor': 'lightgrey'} if gen.is_hole else {}
        graph.add_node(pydot.Node(f'b{occ}', label=gen.name, **shading))

    sorts: List[str] = list(d.domain)
    for gen in wiring.generators:
        sorts.extend(gen.coarity)
    domain_index = {w: i for i, w in enumerate(wiring.domain_wires)}
    for wire, producer in enumerate(wiring.producer):
        source = f'in{domain_index[wire]}' if producer is None else f'b{producer[0]}'
        consumer = wiring.consumer[wire]
        if consumer is not None:
            target = f'b{consumer[0]}'
        else:
            target = f'out{wiring.codomain_index[wire]}'
        graph.add_edge(pydot.Edge(source, target, label=sorts[wire]))
    return graph.to_string()


def render_ascii(d: Diagram) -> str:
    """ One row per slice between rows of wires:

        w w
        | |
        [over]
        | |
    """
    def wires(n: int) -> str:
        return ' '.join('|' * n) if n else '.'

    frontiers = d.frontiers()
    lines = [' '.join(d.domain) or 'ε', wires(len(d.domain))]
    for s, after in zip(d.slices, frontiers[1:]):
        row = ['|'] * s.left + [f'[{s.generator.name}]'] + ['|'] * s.right
        lines.append(' '.join(row))
        lines.append(wires(len(after)))
    lines.append(' '.join(d.codomain) or 'ε')
    return '\n'.join(lines) + '\n'
