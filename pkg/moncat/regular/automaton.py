from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Set, Tuple

from moncat.diagrams.diagram import Diagram, Slice
from moncat.exceptions import AutomatonException, PolygraphMismatchException
from moncat.signatures.polygraph import Polygraph, Word, format_word
from moncat.signatures.report import ValidationReport

StateWord = Tuple[str, ...]
Transition = Tuple[StateWord, StateWord]


@dataclass(frozen=True)
class MonoidalAutomaton:
    """ Non-deterministic automaton reading string diagrams over ``alphabet``.

    ``transitions`` maps a generator name to its relation Δ_γ, a set of
    pairs of state words sized like the generator's arity and coarity.
    ``domain`` and ``codomain`` type the accepted diagrams; for one-sort
    alphabets they default to that sort repeated ``|initial|`` and
    ``|final|`` times.
    """

    name: str
    alphabet: Polygraph
    states: Tuple[str, ...]
    transitions: Mapping[str, FrozenSet[Transition]]
    initial: StateWord
    final: StateWord
    domain: Optional[Word] = None
    codomain: Optional[Word] = None
    _table: Dict[str, Dict[StateWord, Tuple[StateWord, ...]]] = field(
        default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, 'states', tuple(self.states))
        object.__setattr__(self, 'initial', tuple(self.initial))
        object.__setattr__(self, 'final', tuple(self.final))
        object.__setattr__(self, 'transitions', {
            name: frozenset((tuple(q), tuple(r)) for q, r in relation)
            for name, relation in self.transitions.items()
        })
        if self.domain is None and len(self.alphabet.sorts) == 1:
            object.__setattr__(self, 'domain', self.alphabet.sorts * len(self.initial))
        if self.codomain is None and len(self.alphabet.sorts) == 1:
            object.__setattr__(self, 'codomain', self.alphabet.sorts * len(self.final))
        if self.domain is not None:
            object.__setattr__(self, 'domain', tuple(self.domain))
        if self.codomain is not None:
            object.__setattr__(self, 'codomain', tuple(self.codomain))
        table: Dict[str, Dict[StateWord, list]] = {}
        for name, relation in self.transitions.items():
            rows = table.setdefault(name, {})
            for q, r in sorted(relation):
                rows.setdefault(q, []).append(r)
        object.__setattr__(self, '_table', {
            name: {q: tuple(rs) for q, rs in rows.items()} for name, rows in table.items()})

    def step(self, generator: str, q: StateWord) -> Tuple[StateWord, ...]:
        return self._table.get(generator, {}).get(q, ())

    def transition_count(self) -> int:
        return sum(len(relation) for relation in self.transitions.values())

    def typed(self) -> Tuple[Word, Word]:
        if self.domain is None or self.codomain is None:
            raise AutomatonException(
                f"Automaton '{self.name}' needs explicit domain and codomain words "
                'over a many-sorted alphabet')
        return self.domain, self.codomain

    def validate(self) -> ValidationReport:
        report = ValidationReport(self.name)
        states = set(self.states)
        if len(states) != len(self.states):
            report.add('duplicate state', ', '.join(sorted(
                {s for s in self.states if self.states.count(s) > 1})))
        for label, w in (('initial', self.initial), ('final', self.final)):
            for state in w:
                if state not in states:
                    report.add('undeclared state', f"'{state}' in the {label} word")
        for name, relation in sorted(self.transitions.items()):
            gen = self.alphabet.find(name)
            if gen is None:
                report.add('unknown generator', name)
                continue
            for q, r in sorted(relation):
                if len(q) != len(gen.arity) or len(r) != len(gen.coarity):
                    report.add(
                        'transition shape',
                        f"'{name}': {format_word(q)} -> {format_word(r)} does not fit "
                        f'{len(gen.arity)} -> {len(gen.coarity)}')
                for state in q + r:
                    if state not in states:
                        report.add('undeclared state', f"'{state}' in '{name}'")
        for label, w, states_word in (
                ('domain', self.domain, self.initial), ('codomain', self.codomain, self.final)):
            if w is not None and len(w) != len(states_word):
                report.add('interface', f'{label} [{format_word(w)}] has the wrong length')
        return report


def tensor_split(
        slices: Sequence[Slice], width: int,
) -> Optional[Tuple[int, Tuple[Slice, ...], Tuple[Slice, ...]]]:
    """ Finds the first cut 0 < c < width of the domain that no slice crosses, so
    the slices read as a tensor d1 ⊗ d2 with |dom d1| = c. Returns the cut and
    the slices of both factors re-anchored to their own frontier, or None.
    """
    for cut in range(1, width):
        left, right = [], []
        boundary = cut
        for s in slices:
            k, m = len(s.generator.arity), len(s.generator.coarity)
            if boundary <= s.left:
                right.append(Slice(s.left - boundary, s.generator, s.right))
            elif boundary >= s.left + k:
                left.append(Slice(s.left, s.generator, boundary - s.left - k))
                boundary += m - k
            else:
                break
        else:
            return cut, tuple(left), tuple(right)
    return None


def _delta_slices(a: MonoidalAutomaton, q: StateWord, slices: Sequence[Slice]) -> Set[StateWord]:
    if not slices:
        return {q}
    if len(slices) == 1:
        s = slices[0]
        k = len(s.generator.arity)
        before, inner, after = q[:s.left], q[s.left:s.left + k], q[s.left + k:]
        return {before + r + after for r in a.step(s.generator.name, inner)}
    split = tensor_split(slices, len(q))
    if split is not None:
        cut, left, right = split
        return {
            p + r
            for p in _delta_slices(a, q[:cut], left)
            for r in _delta_slices(a, q[cut:], right)
        }
    middle = len(slices) // 2
    result: Set[StateWord] = set()
    for p in _delta_slices(a, q, slices[:middle]):
        result |= _delta_slices(a, p, slices[middle:])
    return result


def delta_hat(a: MonoidalAutomaton, q: Iterable[str], d: Diagram) -> FrozenSet[StateWord]:
    """ δ̂(q, d): identities keep q, a slice id ⊗ γ ⊗ id splits q around Δ_γ,
    a tensor d1 ⊗ d2 pairs δ̂(q1, d1) with δ̂(q2, d2) for q = q1 q2, and a
    composite takes the union over all intermediate state words.
    """
    q = tuple(q)
    if len(q) != len(d.domain):
        raise AutomatonException(
            f'State word [{format_word(q)}] has length {len(q)} but the diagram '
            f'domain has length {len(d.domain)}')
    return frozenset(_delta_slices(a, q, d.slices))


def run(a: MonoidalAutomaton, q: Iterable[str], d: Diagram) -> FrozenSet[StateWord]:
    """ Slice by slice frontier evaluation of the reachable state words. """
    q = tuple(q)
    if len(q) != len(d.domain):
        raise AutomatonException(f'State word length differs from |{format_word(d.domain)}|')
    current = {q}
    for s in d.slices:
        k = len(s.generator.arity)
        current = {
            p[:s.left] + r + p[s.left + k:]
            for p in current
            for r in a.step(s.generator.name, p[s.left:s.left + k])
        }
        if not current:
            break
    return frozenset(current)


def accepts(a: MonoidalAutomaton, d: Diagram) -> bool:
    if d.polygraph.name != a.alphabet.name:
        raise PolygraphMismatchException(a.alphabet.name, d.polygraph.name)
    if (d.domain, d.codomain) != a.typed():
        return False
    return a.final in delta_hat(a, a.initial, d)
