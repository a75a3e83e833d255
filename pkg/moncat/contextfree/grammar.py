from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from moncat.diagrams.context import DiagramContext
from moncat.exceptions import GrammarException
from moncat.signatures.multigraph import Multigraph, Operation
from moncat.signatures.polygraph import Polygraph, Word, format_word
from moncat.signatures.report import ValidationReport
from moncat.signatures.symmetric import SymmetricMultigraph, clique

Interface = Tuple[Word, Word]


def format_interface(interface: Interface) -> str:
    return f'⟨{format_word(interface[0])}|{format_word(interface[1])}⟩'


@dataclass(frozen=True)
class Rule:
    """ r: (inputs...) -> output, realized by a context whose i-th hole has sort inputs[i]. """

    name: str
    output: str
    inputs: Tuple[str, ...]
    context: DiagramContext

    @classmethod
    def of(cls, name: str, output: str, context: DiagramContext) -> Rule:
        return cls(name, output, tuple(label.sort for label in context.holes), context)

    @property
    def arity(self) -> int:
        return len(self.inputs)

    def operation(self) -> Operation:
        return Operation(self.name, self.inputs, self.output)


@dataclass(frozen=True)
class CFMonoidalGrammar:
    """ A context-free monoidal grammar: rules of a finite multigraph of nonterminals
    mapped to diagram contexts of ``target``, with a start nonterminal.

    The symmetric multigraph of the definition is kept implicit: rules store
    one hole order (a representative of the orbit).
    """

    name: str
    target: Polygraph
    interfaces: Mapping[str, Interface]
    rules: Tuple[Rule, ...]
    start: str

    def __post_init__(self):
        object.__setattr__(self, 'rules', tuple(self.rules))
        object.__setattr__(self, 'interfaces', {
            sort: (tuple(dom), tuple(cod)) for sort, (dom, cod) in self.interfaces.items()})

    @property
    def nonterminals(self) -> Tuple[str, ...]:
        return tuple(self.interfaces)

    @property
    def start_interface(self) -> Interface:
        if self.start not in self.interfaces:
            raise GrammarException(f"Unknown start nonterminal '{self.start}'")
        return self.interfaces[self.start]

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise GrammarException(f"Unknown rule '{name}' in '{self.name}'")

    def rules_for(self, sort: str) -> List[Rule]:
        return [r for r in self.rules if r.output == sort]

    def multigraph(self) -> Multigraph:
        return Multigraph(self.name, self.nonterminals, tuple(r.operation() for r in self.rules))

    def symmetric(self) -> SymmetricMultigraph:
        return clique(self.multigraph())


def validate_grammar(g: CFMonoidalGrammar) -> ValidationReport:
    report = ValidationReport(g.name)
    if g.start not in g.interfaces:
        report.add('unknown start', g.start)
    for sort, (dom, cod) in g.interfaces.items():
        for s in dom + cod:
            if not g.target.has_sort(s):
                report.add('undeclared sort', f"'{s}' in the interface of '{sort}'")
    seen: Dict[str, int] = {}
    for r in g.rules:
        seen[r.name] = seen.get(r.name, 0) + 1
        if seen[r.name] == 2:
            report.add('duplicate name', f"rule '{r.name}'")
        if r.output not in g.interfaces:
            report.add('unknown nonterminal', f"'{r.output}' produced by '{r.name}'")
            continue
        if r.context.polygraph.name != g.target.name:
            report.add('polygraph mismatch', f"'{r.name}' is over '{r.context.polygraph.name}'")
        expected = g.interfaces[r.output]
        actual = (r.context.domain, r.context.codomain)
        if actual != expected:
            report.add(
                'interface mismatch',
                f"'{r.name}' has {format_interface(actual)} "
                f'but {r.output} needs {format_interface(expected)}')
        if len(r.context.holes) != r.arity:
            report.add(
                'hole count',
                f"'{r.name}' takes {r.arity} argument(s) but its context has "
                f'{len(r.context.holes)} hole(s)')
            continue
        for index, (sort, label) in enumerate(zip(r.inputs, r.context.holes)):
            if sort not in g.interfaces:
                report.add('unknown nonterminal', f"'{sort}' in '{r.name}'")
                continue
            hole = (label.domain, label.codomain)
            if hole != g.interfaces[sort]:
                report.add(
                    'interface mismatch',
                    f"hole {index + 1} of '{r.name}' has {format_interface(hole)} "
                    f'but {sort} needs {format_interface(g.interfaces[sort])}')
    return report
