from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Type
from warnings import warn

from moncat.diagrams.diagram import Diagram
from moncat.exceptions import (
    FactorizationException, InterfaceMismatchException, WidthMismatchException)
from moncat.regular.automaton import MonoidalAutomaton, accepts
from moncat.signatures.polygraph import Generator, Polygraph, word

DEFAULT_EXPONENTS = (0, 1, 2, 3)


@dataclass(frozen=True)
class Factorization:
    """ A diagram written as s_1 ⨾ ... ⨾ s_m; cut i sits after the i-th factor. """

    pieces: Tuple[Diagram, ...]

    def __post_init__(self):
        object.__setattr__(self, 'pieces', tuple(self.pieces))
        if not self.pieces:
            raise FactorizationException('A factorization needs at least one factor')
        for index, piece in enumerate(self.pieces):
            if piece.is_identity:
                raise FactorizationException(f'Factor {index} is an identity')
            if index and self.pieces[index - 1].codomain != piece.domain:
                raise InterfaceMismatchException(
                    self.pieces[index - 1].codomain, piece.domain, where=f'factor {index}')

    def __len__(self) -> int:
        return len(self.pieces)

    @property
    def widths(self) -> Tuple[int, ...]:
        return tuple(len(p.domain) for p in self.pieces) + (len(self.pieces[-1].codomain),)

    def segment(self, start: int, stop: int) -> Diagram:
        if start == stop:
            boundary = self.pieces[start].domain if start < len(self) else self.pieces[-1].codomain
            return Diagram.identity(self.pieces[0].polygraph, boundary)
        result = self.pieces[start]
        for piece in self.pieces[start + 1:stop]:
            result = result.compose(piece)
        return result

    def composite(self) -> Diagram:
        return self.segment(0, len(self))


def factorize(d: Diagram) -> Factorization:
    """ One factor per slice. """
    frontiers = d.frontiers()
    return Factorization(tuple(
        Diagram(d.polygraph, frontiers[i], frontiers[i + 1], (s,))
        for i, s in enumerate(d.slices)
    ))


def pump(fact: Factorization, i: int, j: int, a: int) -> Diagram:
    """ s' ⨾ (s'')^a ⨾ s''' where s'' is the segment between cuts i and j. """
    if not 0 <= i < j <= len(fact):
        raise FactorizationException(f'Cut points must satisfy 0 <= {i} < {j} <= {len(fact)}')
    widths = fact.widths
    if widths[i] != widths[j]:
        raise WidthMismatchException(i, j, widths[i], widths[j])
    return fact.segment(0, i).compose(fact.segment(i, j).power(a)).compose(
        fact.segment(j, len(fact)))


@dataclass
class PumpingCase:
    n: int
    pairs: List[Tuple[int, int]] = field(default_factory=list)
    violations: List[Tuple[int, int, int]] = field(default_factory=list)
    surviving: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def violates_all(self) -> bool:
        return not self.surviving


@dataclass
class WitnessReport:
    family: str
    k: int
    cases: List[PumpingCase] = field(default_factory=list)

    @property
    def witness_found(self) -> bool:
        """ Every member with a cut pair leaves the language under some pumping. """
        checked = [case for case in self.cases if case.pairs]
        return bool(checked) and all(case.violates_all for case in checked)

    def lines(self) -> List[str]:
        result = []
        for case in self.cases:
            if not case.pairs:
                result.append(f'n={case.n} pairs=0 vacuous')
                continue
            triples = ' '.join(f'({i},{j},{a})' for i, j, a in case.violations)
            result.append(
                f'n={case.n} pairs={len(case.pairs)} violated={len(case.violations)} '
                f'surviving={len(case.surviving)} {triples}'.rstrip())
        result.append(
            f'PUMP {self.family} k={self.k} witness={str(self.witness_found).lower()}')
        return result


def pumping_witness(
    member: Callable[[Diagram], bool],
    k: int,
    family: Callable[[int], Optional[Factorization]],
    max_n: int,
    exponents: Sequence[int] = DEFAULT_EXPONENTS,
    name: str = 'family',
) -> WitnessReport:
    """ Look for a pumping counterexample on every member of ``family`` up to ``max_n``.

    For each pair of cuts 1 <= i < j <= m of equal width at most ``k`` the
    exponents are tried in order; the first one leaving the language is
    reported as a violation of that pair.
    """
    report = WitnessReport(name, k)
    for n in range(max_n + 1):
        case = PumpingCase(n)
        report.cases.append(case)
        fact = family(n)
        if fact is None:
            continue
        widths = fact.widths
        for i in range(1, len(fact)):
            for j in range(i + 1, len(fact) + 1):
                if widths[i] != widths[j] or widths[i] > k:
                    continue
                case.pairs.append((i, j))
                for a in exponents:
                    if not member(pump(fact, i, j, a)):
                        case.violations.append((i, j, a))
                        break
                else:
                    case.surviving.append((i, j))
    return report


class PumpingFamily(ABC):
    """ An indexed family of diagrams with factorizations and a membership test. """

    k: int = 2

    @abstractmethod
    def factorization(self, n: int) -> Optional[Factorization]:
        raise NotImplementedError()

    @abstractmethod
    def member(self, d: Diagram) -> bool:
        raise NotImplementedError()


class FamilyFactory:
    family_references: Dict[str, Type[PumpingFamily]] = {}

    @classmethod
    def register(cls, tag: str, ref: Type[PumpingFamily]) -> None:
        if not isinstance(ref, type) or not issubclass(ref, PumpingFamily):
            raise TypeError('Only PumpingFamily classes can be registered!')
        if not isinstance(tag, str):
            raise TypeError('Tag must be a string!')
        cls.family_references[tag] = ref

    @classmethod
    def unregister(cls, tag: Optional[str] = None) -> None:
        if tag is None:
            cls.family_references.clear()
        elif tag in cls.family_references:
            cls.family_references.pop(tag)
        else:
            warn(f'There is no such family in FamilyFactory as {tag}.')

    @classmethod
    def get(cls, tag: str) -> Type[PumpingFamily]:
        return cls.family_references[tag]

    @classmethod
    def create(cls, tag: str) -> PumpingFamily:
        if tag not in cls.family_references:
            raise KeyError(f"'{tag}' hasn't been registered in the FamilyFactory.")
        return cls.family_references[tag]()


def family(tag: str):
    def wrapper(ref):
        FamilyFactory.register(tag, ref)
        return ref
    return wrapper


def braid_polygraph() -> Polygraph:
    return Polygraph('braids', ('w',), (
        Generator('over', word('w w'), word('w w')),
        Generator('under', word('w w'), word('w w')),
    ))


def parens_polygraph() -> Polygraph:
    return Polygraph('parens', ('w',), (
        Generator('open', word('w'), word('w w')),
        Generator('close', word('w w'), word('w')),
    ))


def parens_automaton(alphabet: Optional[Polygraph] = None) -> MonoidalAutomaton:
    return MonoidalAutomaton(
        'parensAut',
        alphabet or parens_polygraph(),
        ('S', 'M'),
        {
            'open': frozenset({(('S',), ('S', 'M'))}),
            'close': frozenset({(('S', 'M'), ('S',))}),
        },
        ('S',),
        ('S',),
    )


@family('unbraids')
class UnbraidFamily(PumpingFamily):
    """ overⁿ ⨾ underⁿ, factored as n single crossings followed by the block underⁿ. """

    k = 2

    def __init__(self):
        self.polygraph = braid_polygraph()

    def factorization(self, n: int) -> Optional[Factorization]:
        if n == 0:
            return None
        over = Diagram.of_generator(self.polygraph, 'over')
        under = Diagram.of_generator(self.polygraph, 'under')
        return Factorization((over,) * n + (under.power(n),))

    def member(self, d: Diagram) -> bool:
        """ Two-strand braids are trivial iff the crossings cancel. """
        balance = sum(
            {'over': 1, 'under': -1}.get(s.generator.name, 0) for s in d.slices)
        return d.domain == d.codomain == word('w w') and balance == 0


@family('parens')
class ParensFamily(PumpingFamily):
    """ (open ⨾ close)ⁿ with one factor per slice, checked by the parentheses automaton. """

    k = 2

    def __init__(self):
        self.automaton = parens_automaton()

    def factorization(self, n: int) -> Optional[Factorization]:
        if n == 0:
            return None
        alphabet = self.automaton.alphabet
        pair = Diagram.of_generator(alphabet, 'open').compose(
            Diagram.of_generator(alphabet, 'close'))
        return factorize(pair.power(n))

    def member(self, d: Diagram) -> bool:
        return accepts(self.automaton, d)


def register_builtin_families() -> None:
    FamilyFactory.register('unbraids', UnbraidFamily)
    FamilyFactory.register('parens', ParensFamily)


def check_family(
    tag: str,
    max_n: int,
    exponents: Sequence[int] = DEFAULT_EXPONENTS,
) -> WitnessReport:
    instance = FamilyFactory.create(tag)
    return pumping_witness(
        instance.member, instance.k, instance.factorization, max_n, exponents, name=tag)
