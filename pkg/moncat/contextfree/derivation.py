from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from moncat.contextfree.grammar import CFMonoidalGrammar
from moncat.diagrams.context import DiagramContext, substitute
from moncat.diagrams.diagram import Diagram
from moncat.exceptions import GrammarException
from moncat.utils.budget import WorkBudget
from moncat.utils.logger import MoncatLogger


@dataclass(frozen=True)
class Derivation:
    """ A closed tree of rules; child i derives the i-th input sort of ``rule``. """

    rule: str
    sort: str
    children: Tuple[Derivation, ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children)

    def nodes(self) -> Iterator[Derivation]:
        yield self
        for child in self.children:
            yield from child.nodes()

    def render(self) -> str:
        if not self.children:
            return self.rule
        return f"{self.rule}({', '.join(child.render() for child in self.children)})"

    def __str__(self) -> str:
        return self.render()


def derivation_size(d: Derivation) -> int:
    return d.size


def _splits(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """ Ordered ways of writing ``total`` as ``parts`` positive integers. """
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _splits(total - first, parts - 1):
            yield (first,) + rest


def enumerate_derivations(
    g: CFMonoidalGrammar,
    sort: Optional[str] = None,
    max_rules: int = 1,
    budget: Optional[WorkBudget] = None,
    logger: Optional[MoncatLogger] = None,
) -> List[Derivation]:
    """ Closed derivations of ``sort`` with at most ``max_rules`` rule nodes.

    Built by increasing size: derivations with exactly n nodes combine, for
    every rule, children whose sizes add up to n - 1.
    """
    sort = g.start if sort is None else sort
    budget = budget or WorkBudget()
    logger = logger or MoncatLogger()
    exact: Dict[Tuple[str, int], List[Derivation]] = {}
    for n in range(1, max_rules + 1):
        for nonterminal in g.nonterminals:
            found: List[Derivation] = []
            for r in g.rules_for(nonterminal):
                for sizes in _splits(n - 1, r.arity):
                    pools = [exact.get((s, k), []) for s, k in zip(r.inputs, sizes)]
                    for children in product(*pools):
                        budget.tick()
                        found.append(Derivation(r.name, nonterminal, tuple(children)))
            exact[(nonterminal, n)] = found
        logger.debug(f'{len(exact[(sort, n)])} derivations with {n} rule node(s)')
    result = [d for n in range(1, max_rules + 1) for d in exact.get((sort, n), [])]
    return sorted(result, key=lambda d: (d.size, d.render()))


def check_derivation(g: CFMonoidalGrammar, d: Derivation) -> None:
    r = g.rule(d.rule)
    if r.output != d.sort:
        raise GrammarException(f"Rule '{r.name}' produces {r.output}, not {d.sort}")
    if len(d.children) != r.arity:
        raise GrammarException(
            f"Rule '{r.name}' takes {r.arity} argument(s), got {len(d.children)}")
    for child, sort in zip(d.children, r.inputs):
        if child.sort != sort:
            raise GrammarException(f"Argument of '{r.name}' must derive {sort}, not {child.sort}")
        check_derivation(g, child)


def evaluate_context(g: CFMonoidalGrammar, d: Derivation) -> DiagramContext:
    r = g.rule(d.rule)
    if not d.children:
        return r.context
    assignment = {
        label.variable: evaluate_context(g, child)
        for label, child in zip(r.context.holes, d.children)
    }
    return substitute(r.context, assignment)


def evaluate_derivation(g: CFMonoidalGrammar, d: Derivation) -> Diagram:
    """ Ψ̂(d): the contexts of the rules substituted into each other along the tree. """
    return evaluate_context(g, d).close()
