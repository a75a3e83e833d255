""" Multi-pointed hypergraphs: the normal form of the free hypergraph category.

Wires are merged into nodes along the Frobenius generators ``mu``, ``eta``,
``delta``, ``eps``; every other generator becomes a hyperedge. Two diagrams
are equal iff their hypergraphs are isomorphic by a map fixing the
interfaces pointwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from moncat.diagrams.diagram import Diagram
from moncat.exceptions import DoctrineException, PolygraphMismatchException
from moncat.signatures.polygraph import Doctrine, Generator, Word
from moncat.signatures.structural import parse_structural_name


@dataclass(frozen=True)
class Hyperedge:
    label: str
    sources: Tuple[int, ...]
    targets: Tuple[int, ...]


@dataclass(frozen=True)
class MultiPointedHypergraph:
    nodes: Tuple[str, ...]
    edges: Tuple[Hyperedge, ...]
    domain_nodes: Tuple[int, ...]
    codomain_nodes: Tuple[int, ...]

    @property
    def domain(self) -> Word:
        return tuple(self.nodes[n] for n in self.domain_nodes)

    @property
    def codomain(self) -> Word:
        return tuple(self.nodes[n] for n in self.codomain_nodes)

    def degree(self, node: int) -> Tuple[int, int]:
        incoming = sum(e.targets.count(node) for e in self.edges)
        outgoing = sum(e.sources.count(node) for e in self.edges)
        return incoming, outgoing

    def to_networkx(self) -> nx.DiGraph:
        """ Bipartite incidence graph with interface positions as node attributes. """
        graph = nx.DiGraph()
        for node, sort in enumerate(self.nodes):
            graph.add_node(
                ('n', node),
                kind='node',
                label=sort,
                dom=tuple(p for p, n in enumerate(self.domain_nodes) if n == node),
                cod=tuple(p for p, n in enumerate(self.codomain_nodes) if n == node),
            )
        for index, edge in enumerate(self.edges):
            graph.add_node(('e', index), kind='edge', label=edge.label, dom=(), cod=())
            sides = (('src', edge.sources, False), ('tgt', edge.targets, True))
            for ports, nodes, outgoing in sides:
                for node in set(nodes):
                    positions = tuple(p for p, n in enumerate(nodes) if n == node)
                    if outgoing:
                        graph.add_edge(('e', index), ('n', node), ports=(ports, positions))
                    else:
                        graph.add_edge(('n', node), ('e', index), ports=(ports, positions))
        return graph


class _Nodes:
    def __init__(self):
        self.parent: List[int] = []
        self.sort: List[str] = []

    def fresh(self, sort: str) -> int:
        self.parent.append(len(self.parent))
        self.sort.append(sort)
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> int:
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)
        return min(x, y)


def _frobenius(gen: Generator, nodes: _Nodes, args: List[int]) -> List[int]:
    operation, sorts = parse_structural_name(gen.name)
    if operation == 'mu':
        return [nodes.union(args[0], args[1])]
    if operation == 'eta':
        return [nodes.fresh(sorts[0])]
    if operation == 'delta':
        return [args[0], args[0]]
    if operation == 'eps':
        return []
    if operation == 'swap':
        return [args[1], args[0]]
    raise DoctrineException(f"'{gen.name}' is not a hypergraph structural generator")


def to_hypergraph(d: Diagram) -> MultiPointedHypergraph:
    if d.polygraph.doctrine not in (Doctrine.HYPERGRAPH, Doctrine.FREE):
        raise DoctrineException(
            f"Polygraph '{d.polygraph.name}' is {d.polygraph.doctrine.value}, not hypergraph")
    nodes = _Nodes()
    frontier = [nodes.fresh(sort) for sort in d.domain]
    domain = list(frontier)
    raw_edges: List[Tuple[str, List[int], List[int]]] = []
    for s in d.slices:
        gen = s.generator
        k = len(gen.arity)
        args = frontier[s.left:s.left + k]
        if gen.kind is Generator.Kind.STRUCTURAL:
            produced = _frobenius(gen, nodes, args)
        else:
            produced = [nodes.fresh(sort) for sort in gen.coarity]
            raw_edges.append((gen.name, args, produced))
        frontier[s.left:s.left + k] = produced

    order: Dict[int, int] = {}

    def number(node: int) -> int:
        root = nodes.find(node)
        if root not in order:
            order[root] = len(order)
        return order[root]

    domain_nodes = tuple(number(n) for n in domain)
    edges = tuple(
        Hyperedge(label, tuple(number(n) for n in sources), tuple(number(n) for n in targets))
        for label, sources, targets in raw_edges)
    codomain_nodes = tuple(number(n) for n in frontier)
    for node in range(len(nodes.parent)):
        number(node)
    sorts = [''] * len(order)
    for root, index in order.items():
        sorts[index] = nodes.sort[root]
    return MultiPointedHypergraph(tuple(sorts), edges, domain_nodes, codomain_nodes)


def _same(a: dict, b: dict) -> bool:
    return a == b


def hypergraph_iso(h1: MultiPointedHypergraph, h2: MultiPointedHypergraph) -> bool:
    if len(h1.nodes) != len(h2.nodes) or len(h1.edges) != len(h2.edges):
        return False
    if (h1.domain, h1.codomain) != (h2.domain, h2.codomain):
        return False
    if sorted(h1.nodes) != sorted(h2.nodes):
        return False
    if sorted(e.label for e in h1.edges) != sorted(e.label for e in h2.edges):
        return False
    degrees1 = sorted((h1.nodes[n],) + h1.degree(n) for n in range(len(h1.nodes)))
    degrees2 = sorted((h2.nodes[n],) + h2.degree(n) for n in range(len(h2.nodes)))
    if degrees1 != degrees2:
        return False
    matcher = DiGraphMatcher(
        h1.to_networkx(), h2.to_networkx(), node_match=_same, edge_match=_same)
    return matcher.is_isomorphic()


def weisfeiler_lehman_hash(h: MultiPointedHypergraph) -> str:
    graph = h.to_networkx()
    for _, data in graph.nodes(data=True):
        data['wl'] = f"{data['kind']}:{data['label']}:{data['dom']}:{data['cod']}"
    for _, _, data in graph.edges(data=True):
        data['wl'] = str(data['ports'])
    return nx.weisfeiler_lehman_graph_hash(graph, node_attr='wl', edge_attr='wl')


class HypergraphClass:
    """ Hashable isomorphism class of a hypergraph, usable as a set element.

    Only the isomorphism invariants in ``fingerprint`` travel with the object;
    the hash is derived from them in whatever process the class ends up in.
    """

    def __init__(self, hypergraph: MultiPointedHypergraph):
        self.hypergraph = hypergraph
        self.fingerprint = (
            weisfeiler_lehman_hash(hypergraph),
            hypergraph.domain,
            hypergraph.codomain,
            len(hypergraph.nodes),
            len(hypergraph.edges),
        )

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HypergraphClass):
            return NotImplemented
        return self.fingerprint == other.fingerprint and hypergraph_iso(
            self.hypergraph, other.hypergraph)

    def __lt__(self, other: HypergraphClass) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> Tuple:
        wl, _, _, nodes, edges = self.fingerprint
        return edges, nodes, wl

    def __repr__(self) -> str:
        return f'HypergraphClass(nodes={len(self.hypergraph.nodes)}, ' \
               f'edges={len(self.hypergraph.edges)})'


def hypergraph_equal(d1: Diagram, d2: Diagram) -> bool:
    if d1.polygraph.name != d2.polygraph.name:
        raise PolygraphMismatchException(d1.polygraph.name, d2.polygraph.name)
    return hypergraph_iso(to_hypergraph(d1), to_hypergraph(d2))


def is_control_flow_graph(h: MultiPointedHypergraph, statement='stmt', test='test') -> bool:
    """ Single entry and single exit, every node reachable from the entry.

    Statements have one input and one output node, tests one input and
    two outputs. Only the exit may lack a successor.
    """
    if len(h.domain_nodes) != 1 or len(h.codomain_nodes) != 1:
        return False
    shapes = {statement: (1, 1), test: (1, 2)}
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(h.nodes)))
    for edge in h.edges:
        if shapes.get(edge.label) != (len(edge.sources), len(edge.targets)):
            return False
        for source in edge.sources:
            for target in edge.targets:
                graph.add_edge(source, target)
    entry, exit_ = h.domain_nodes[0], h.codomain_nodes[0]
    reachable = nx.descendants(graph, entry) | {entry}
    if len(reachable) != len(h.nodes):
        return False
    if exit_ not in reachable:
        return False
    return all(graph.out_degree(node) > 0 for node in graph.nodes if node != exit_)
