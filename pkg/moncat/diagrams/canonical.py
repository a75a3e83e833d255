""" Canonical foliations of planar string diagrams.

A diagram is read as a planar graph: occurrences of generators are
vertices, wires are edges, and every gap between two neighbouring wires
of some frontier belongs to a face. The canonical form is computed in
three steps:

1. the part connected to the boundary is labelled by a breadth first
   traversal from the domain and codomain wires and re-foliated greedily:
   boxes with contiguous inputs are emitted eagerly (leftmost first),
   states only when nothing else is available, in the face they occupy;
2. every closed component (a scalar) is foliated on its own, trying each
   of its states as the topmost one and keeping the smallest result;
3. closed components are inserted, sorted, at the first gap of the face
   that encloses them.

Equal morphisms yield identical slice lists.
"""
from __future__ import annotations

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from moncat.diagrams.diagram import Diagram, Slice, SliceKey
from moncat.signatures.polygraph import Generator

Step = Tuple[int, int]


class _UnionFind:
    def __init__(self):
        self._parent: List[int] = []

    def fresh(self) -> int:
        self._parent.append(len(self._parent))
        return len(self._parent) - 1

    def find(self, x: int) -> int:
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x != y:
            self._parent[max(x, y)] = min(x, y)


class Wiring:
    """ Occurrences, wires and faces of a foliated diagram. """

    def __init__(self, diagram: Diagram):
        self.generators: List[Generator] = []
        self.inputs: List[Tuple[int, ...]] = []
        self.outputs: List[Tuple[int, ...]] = []
        self.producer: List[Optional[Tuple[int, int]]] = []
        self.consumer: List[Optional[Tuple[int, int]]] = []
        self.left_side: List[int] = []
        self.right_side: List[int] = []
        self.state_face: Dict[int, int] = {}
        self.faces = _UnionFind()

        gaps = [self.faces.fresh() for _ in range(len(diagram.domain) + 1)]
        self.left_face, self.right_face = gaps[0], gaps[-1]
        frontier = [self._wire(None) for _ in diagram.domain]
        self._record_sides(frontier, gaps, 0, len(frontier))
        self.domain_wires = tuple(frontier)

        for s in diagram.slices:
            gen, left = s.generator, s.left
            k, m = len(gen.arity), len(gen.coarity)
            occ = len(self.generators)
            self.generators.append(gen)
            consumed = tuple(frontier[left:left + k])
            for port, w in enumerate(consumed):
                self.consumer[w] = (occ, port)
            produced = tuple(self._wire((occ, j)) for j in range(m))
            self.inputs.append(consumed)
            self.outputs.append(produced)
            if k == 0:
                self.state_face[occ] = gaps[left]
            if m == 0:
                if k > 0:
                    self.faces.union(gaps[left], gaps[left + k])
                gaps = gaps[:left + 1] + gaps[left + k + 1:]
            else:
                inner = [self.faces.fresh() for _ in range(m - 1)]
                gaps = gaps[:left + 1] + inner + gaps[left + k:]
            frontier[left:left + k] = produced
            self._record_sides(frontier, gaps, left, left + m)

        self.codomain_wires = tuple(frontier)
        self.codomain_index = {w: i for i, w in enumerate(self.codomain_wires)}

    def _wire(self, producer: Optional[Tuple[int, int]]) -> int:
        self.producer.append(producer)
        self.consumer.append(None)
        self.left_side.append(-1)
        self.right_side.append(-1)
        return len(self.producer) - 1

    def _record_sides(self, frontier, gaps, start, stop) -> None:
        for p in range(start, stop):
            self.left_side[frontier[p]] = gaps[p]
            self.right_side[frontier[p]] = gaps[p + 1]

    def face(self, gap_class: int) -> int:
        return self.faces.find(gap_class)

    def components(self) -> Tuple[Set[int], List[List[int]]]:
        """ Split occurrences into the boundary part and closed components. """
        n_occ, n_wires = len(self.generators), len(self.producer)
        links = _UnionFind()
        for _ in range(n_occ + n_wires):
            links.fresh()
        for occ in range(n_occ):
            for w in self.inputs[occ] + self.outputs[occ]:
                links.union(occ, n_occ + w)
        anchored = {links.find(n_occ + w) for w in self.domain_wires + self.codomain_wires}
        boundary = set()
        closed: Dict[int, List[int]] = {}
        for occ in range(n_occ):
            root = links.find(occ)
            if root in anchored:
                boundary.add(occ)
            else:
                closed.setdefault(root, []).append(occ)
        return boundary, sorted(closed.values(), key=min)


class _Foliation:
    """ Greedy re-foliation with backtracking on the placement of states. """

    def __init__(
        self,
        wiring: Wiring,
        members: Iterable[int],
        outer: int,
        target: Sequence[int],
        labels: Dict[int, int],
    ):
        self.w = wiring
        self.members = frozenset(members)
        self.outer = outer
        self.target = tuple(target)
        self.labels = labels
        self._failed: Set[Tuple[Tuple[int, ...], FrozenSet[int]]] = set()

    def face(self, frontier: Sequence[int], gap: int) -> int:
        if not frontier:
            return self.w.face(self.outer)
        if gap == 0:
            return self.w.face(self.w.left_side[frontier[0]])
        return self.w.face(self.w.right_side[frontier[gap - 1]])

    def _next_box(self, frontier: List[int], remaining: Set[int]) -> Optional[Step]:
        position = {wire: p for p, wire in enumerate(frontier)}
        best = None
        for occ in remaining:
            consumed = self.w.inputs[occ]
            if not consumed or consumed[0] not in position:
                continue
            p = position[consumed[0]]
            if tuple(frontier[p:p + len(consumed)]) == consumed and (best is None or p < best[1]):
                best = (occ, p)
        return best

    def _consistent(self, frontier: Sequence[int]) -> bool:
        last: Dict[object, int] = {}
        for wire in frontier:
            end = self.w.consumer[wire]
            if end is None:
                key, port = 'codomain', self.w.codomain_index.get(wire, -1)
            else:
                key, port = end
            if key in last and last[key] >= port:
                return False
            last[key] = port
        return True

    def complete(
        self,
        frontier: Sequence[int],
        remaining: Iterable[int],
        trail: Sequence[Step],
    ) -> Optional[List[Step]]:
        frontier, remaining, trail = list(frontier), set(remaining), list(trail)
        while True:
            step = self._next_box(frontier, remaining)
            if step is None:
                break
            occ, p = step
            frontier[p:p + len(self.w.inputs[occ])] = self.w.outputs[occ]
            remaining.discard(occ)
            trail.append(step)
        if not remaining:
            return trail if tuple(frontier) == self.target else None

        memo = (tuple(frontier), frozenset(remaining))
        if memo in self._failed:
            return None
        states = sorted((o for o in remaining if not self.w.inputs[o]), key=self.labels.get)
        for occ in states:
            face = self.w.face(self.w.state_face[occ])
            for gap in range(len(frontier) + 1):
                if self.face(frontier, gap) != face:
                    continue
                candidate = frontier[:gap] + list(self.w.outputs[occ]) + frontier[gap:]
                if not self._consistent(candidate):
                    continue
                result = self.complete(candidate, remaining - {occ}, trail + [(occ, gap)])
                if result is not None:
                    return result
        self._failed.add(memo)
        return None

    def render(
        self,
        trail: Sequence[Step],
        start: Sequence[int],
        children: Dict[int, List[Tuple[Slice, ...]]],
    ) -> List[Slice]:
        slices: List[Slice] = []
        frontier = list(start)
        pending = {face: list(items) for face, items in children.items()}

        def insert_children():
            if not pending:
                return
            for gap in range(len(frontier) + 1):
                for child in pending.pop(self.face(frontier, gap), ()):
                    slices.extend(s.shifted(gap, len(frontier) - gap) for s in child)

        insert_children()
        for occ, p in trail:
            k = len(self.w.inputs[occ])
            slices.append(Slice(p, self.w.generators[occ], len(frontier) - p - k))
            frontier[p:p + k] = self.w.outputs[occ]
            insert_children()
        if pending:
            raise RuntimeError('Closed components could not be placed in their faces')
        return slices


def _labels(wiring: Wiring, wires: Sequence[int] = (), occurrences: Sequence[int] = ()):
    labels: Dict[int, int] = {}
    seen = set(wires)
    queue = deque([('w', w) for w in wires])
    for occ in occurrences:
        labels[occ] = len(labels)
        queue.append(('o', occ))
    while queue:
        kind, item = queue.popleft()
        if kind == 'w':
            for end in (wiring.producer[item], wiring.consumer[item]):
                if end is not None and end[0] not in labels:
                    labels[end[0]] = len(labels)
                    queue.append(('o', end[0]))
        else:
            for w in wiring.inputs[item] + wiring.outputs[item]:
                if w not in seen:
                    seen.add(w)
                    queue.append(('w', w))
    return labels


def _slices_key(slices: Sequence[Slice]) -> Tuple[SliceKey, ...]:
    return tuple(s.key() for s in slices)


class _Canonicalizer:
    def __init__(self, diagram: Diagram):
        self.diagram = diagram
        self.w = Wiring(diagram)
        self.boundary, self.closed = self.w.components()
        self.enclosing = [self.w.face(self.w.state_face[min(comp)]) for comp in self.closed]
        self.owner: Dict[int, object] = {}
        boundary_wires = list(self.w.domain_wires + self.w.codomain_wires)
        for occ in self.boundary:
            boundary_wires.extend(self.w.inputs[occ] + self.w.outputs[occ])
        for face in [self.w.left_face, self.w.right_face] + [
                side for wire in boundary_wires
                for side in (self.w.left_side[wire], self.w.right_side[wire])]:
            self.owner[self.w.face(face)] = 'boundary'
        for index, comp in enumerate(self.closed):
            for occ in comp:
                for wire in self.w.inputs[occ] + self.w.outputs[occ]:
                    for side in (self.w.left_side[wire], self.w.right_side[wire]):
                        face = self.w.face(side)
                        if face != self.enclosing[index]:
                            self.owner.setdefault(face, index)
        self._forms: Dict[int, Tuple[Slice, ...]] = {}

    def _children(self, owner: object) -> Dict[int, List[Tuple[Slice, ...]]]:
        children: Dict[int, List[Tuple[Slice, ...]]] = {}
        for index, face in enumerate(self.enclosing):
            if self.owner.get(face) == owner:
                children.setdefault(face, []).append(self._closed_form(index))
        for items in children.values():
            items.sort(key=_slices_key)
        return children

    def _closed_form(self, index: int) -> Tuple[Slice, ...]:
        if index in self._forms:
            return self._forms[index]
        comp = self.closed[index]
        children = self._children(index)
        best = None
        for root in comp:
            if self.w.inputs[root]:
                continue
            labels = _labels(self.w, occurrences=[root])
            foliation = _Foliation(self.w, comp, self.enclosing[index], (), labels)
            trail = foliation.complete(self.w.outputs[root], set(comp) - {root}, [(root, 0)])
            if trail is None:
                continue
            slices = tuple(foliation.render(trail, (), children))
            if best is None or _slices_key(slices) < _slices_key(best):
                best = slices
        if best is None:
            raise RuntimeError('A closed component admits no foliation')
        self._forms[index] = best
        return best

    def run(self) -> Diagram:
        labels = _labels(self.w, wires=self.w.domain_wires + self.w.codomain_wires)
        foliation = _Foliation(
            self.w, self.boundary, self.w.left_face, self.w.codomain_wires, labels)
        trail = foliation.complete(self.w.domain_wires, self.boundary, [])
        if trail is None:
            raise RuntimeError('The boundary part admits no foliation')
        slices = foliation.render(trail, self.w.domain_wires, self._children('boundary'))
        return Diagram(self.diagram.polygraph, self.diagram.domain, self.diagram.codomain, slices)


def canonical_form(d: Diagram) -> Diagram:
    if len(d.slices) <= 1:
        return d
    return _Canonicalizer(d).run()
