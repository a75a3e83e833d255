from moncat.doctrines.cartesian import App, Term, TermForest, Var, term_forest_equal, to_term_forest
from moncat.doctrines.hypergraph import (
    Hyperedge, HypergraphClass, MultiPointedHypergraph, hypergraph_equal, hypergraph_iso,
    is_control_flow_graph, to_hypergraph, weisfeiler_lehman_hash)
from moncat.doctrines.keys import doctrine_key, sort_key

__all__ = [
    'App',
    'Term',
    'TermForest',
    'Var',
    'term_forest_equal',
    'to_term_forest',
    'Hyperedge',
    'HypergraphClass',
    'MultiPointedHypergraph',
    'hypergraph_equal',
    'hypergraph_iso',
    'is_control_flow_graph',
    'to_hypergraph',
    'weisfeiler_lehman_hash',
    'doctrine_key',
    'sort_key',
]
