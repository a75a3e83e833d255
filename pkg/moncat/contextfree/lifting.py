from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, List, Set, Tuple

from moncat.contextfree.grammar import CFMonoidalGrammar, Rule
from moncat.diagrams.context import DiagramContext, HoleLabel, hole_generator
from moncat.diagrams.diagram import Diagram, Slice
from moncat.regular.grammar import RegularMonoidalGrammar
from moncat.signatures.polygraph import Generator, Word

DEFAULT_MAX_WIDTH = 8


def nonterminal_name(states: Word) -> str:
    return 'R_' + '_'.join(states)


def _rewrites(w: Word, generators: Iterable[Generator]) -> Iterable[Tuple[int, Generator, Word]]:
    for gen in generators:
        k = len(gen.arity)
        for left in range(len(w) - k + 1):
            if w[left:left + k] == gen.arity:
                yield left, gen, w[:left] + gen.coarity + w[left + k:]


def _reachable(start: Word, generators: List[Generator], max_width: int) -> Set[Word]:
    seen = {start} if len(start) <= max_width else set()
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        for _, _, following in _rewrites(w, generators):
            if len(following) <= max_width and following not in seen:
                seen.add(following)
                queue.append(following)
    return seen


def _reversed(gen: Generator) -> Generator:
    return Generator(gen.name, gen.coarity, gen.arity, gen.kind)


def lift_regular(
    rg: RegularMonoidalGrammar,
    max_width: int = DEFAULT_MAX_WIDTH,
) -> CFMonoidalGrammar:
    """ A right-linear context-free grammar with the language of ``rg``, up to width.

    There is one nonterminal R_w per ℚ-word w reachable from the initial
    word and co-reachable to the final one with |w| <= ``max_width``; it
    derives ψ-images of ℚ-diagrams w -> final. The start nonterminal is
    R_initial, of interface ⟨ψ(initial)|ψ(final)⟩.

    The result under-approximates the regular language: a run whose frontier
    grows past ``max_width`` state wires has no nonterminal, so its diagram
    is missing. When every run of ``rg`` stays within the bound the languages
    agree exactly; for parentheses the lift at width k keeps the diagrams
    nesting fewer than k brackets.
    """
    psi = rg.morphism
    generators = list(rg.states.generators)
    forward = _reachable(rg.initial, generators, max_width)
    backward = _reachable(rg.final, [_reversed(gen) for gen in generators], max_width)
    words = sorted(forward & backward, key=lambda w: (len(w), w))
    codomain = psi.apply_word(rg.final)

    interfaces: Dict[str, Tuple[Word, Word]] = {
        nonterminal_name(w): (psi.apply_word(w), codomain) for w in words}
    start = nonterminal_name(rg.initial)
    interfaces.setdefault(start, (psi.apply_word(rg.initial), codomain))

    rules: List[Rule] = []
    members = set(words)
    for w in words:
        name = nonterminal_name(w)
        if w == rg.final:
            rules.append(Rule.of(
                f'{name}.done', name,
                DiagramContext(Diagram.identity(rg.alphabet, codomain))))
        for left, gen, following in _rewrites(w, generators):
            if following not in members:
                continue
            image = rg.alphabet.generator(psi.gen_map[gen.name])
            pad_left = psi.apply_word(w[:left])
            pad_right = psi.apply_word(w[left + len(gen.arity):])
            middle = pad_left + image.coarity + pad_right
            target = nonterminal_name(following)
            hole = hole_generator('x1', middle, codomain)
            diagram = Diagram(
                rg.alphabet, psi.apply_word(w), codomain,
                (Slice(len(pad_left), image, len(pad_right)), Slice(0, hole, 0)))
            context = DiagramContext(diagram, (HoleLabel('x1', middle, codomain, target),))
            rules.append(Rule.of(f'{name}.{gen.name}.{left}', name, context))
    return CFMonoidalGrammar(f'{rg.name}.cf', rg.alphabet, interfaces, tuple(rules), start)
