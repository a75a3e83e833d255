from __future__ import annotations

from typing import Hashable

from moncat.diagrams.diagram import Diagram
from moncat.doctrines.cartesian import to_term_forest
from moncat.doctrines.hypergraph import HypergraphClass, to_hypergraph
from moncat.signatures.polygraph import Doctrine


def doctrine_key(d: Diagram) -> Hashable:
    """ Equality key of ``d`` in the category its polygraph's doctrine presents. """
    doctrine = d.polygraph.doctrine
    if doctrine is Doctrine.CARTESIAN:
        return to_term_forest(d).key()
    if doctrine is Doctrine.HYPERGRAPH:
        return HypergraphClass(to_hypergraph(d))
    return d.key()


def sort_key(key: Hashable) -> str:
    """ Deterministic ordering for mixed keys in reports and CLI output. """
    if isinstance(key, HypergraphClass):
        return repr(key.sort_key())
    return repr(key)
