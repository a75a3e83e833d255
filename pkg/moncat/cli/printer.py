from __future__ import annotations

from typing import Dict, List, Optional

from moncat.cli.workspace import Workspace
from moncat.contextfree.grammar import CFMonoidalGrammar
from moncat.diagrams.context import DiagramContext, hole_variable
from moncat.diagrams.diagram import Diagram, Slice
from moncat.regular.automaton import MonoidalAutomaton
from moncat.signatures.multigraph import Multigraph
from moncat.signatures.polygraph import Doctrine, Polygraph, Word

INDENT = '  '


def _identity(w: Word) -> str:
    return f"id[{' '.join(w)}]" if w else 'id'


def _slice(s: Slice, frontier: Word, holes: Dict[str, str]) -> str:
    gen = s.generator
    name = f'[{holes.get(hole_variable(gen), hole_variable(gen))}]' if gen.is_hole else gen.name
    k = len(gen.arity)
    parts = []
    if s.left:
        parts.append(_identity(frontier[:s.left]))
    parts.append(name)
    if s.right:
        parts.append(_identity(frontier[s.left + k:]))
    return ' * '.join(parts)


def format_diagram(d: Diagram, holes: Optional[Dict[str, str]] = None) -> str:
    """ Slice by slice expression; reading it back gives the same foliation. """
    if not d.slices:
        return _identity(d.domain)
    holes = holes or {}
    lines = []
    for s, frontier in zip(d.slices, d.frontiers()):
        lines.append(_slice(s, frontier, holes))
    return ' ; '.join(f'({line})' if ' * ' in line else line for line in lines)


def format_context(ctx: DiagramContext) -> str:
    """ Holes are written as ``[sort]`` when they carry a sort, ``[variable]`` otherwise. """
    return format_diagram(ctx.diagram, {
        label.variable: label.sort for label in ctx.holes if label.sort is not None})


def _word(w: Word) -> str:
    return ' '.join(w)


def _arrow(source: Word, target: Word) -> str:
    return ' '.join(part for part in (_word(source), '->', _word(target)) if part)


def _statement(text: str) -> str:
    return f'{INDENT}{text.rstrip()};'


def print_polygraph(p: Polygraph) -> str:
    lines = [f'polygraph {p.name} {{', _statement(f'sorts: {_word(p.sorts)}')]
    if p.doctrine is not Doctrine.FREE:
        lines.append(_statement(f'doctrine: {p.doctrine.value}'))
    for gen in p.generators:
        lines.append(_statement(f'gen {gen.name}: {_arrow(gen.arity, gen.coarity)}'))
    lines.append('}')
    return '\n'.join(lines)


def print_multigraph(m: Multigraph) -> str:
    lines = [f'multigraph {m.name} {{', _statement(f'sorts: {_word(m.sorts)}')]
    for op in m.operations:
        lines.append(_statement(f'op {op.name}: {_arrow(op.inputs, (op.output,))}'))
    lines.append('}')
    return '\n'.join(lines)


def print_automaton(a: MonoidalAutomaton) -> str:
    lines = [
        f'automaton {a.name} over {a.alphabet.name} {{',
        _statement(f'states: {_word(a.states)}'),
        _statement(f'init: {_word(a.initial)}'),
        _statement(f'final: {_word(a.final)}'),
    ]
    if len(a.alphabet.sorts) != 1:
        for label, w in (('domain', a.domain), ('codomain', a.codomain)):
            if w is not None:
                lines.append(_statement(f'{label}: {_word(w)}'))
    for name in sorted(a.transitions):
        for q, r in sorted(a.transitions[name]):
            lines.append(_statement(f'{name}: {_arrow(q, r)}'))
    lines.append('}')
    return '\n'.join(lines)


def print_grammar(g: CFMonoidalGrammar) -> str:
    lines = [f'cfg {g.name} over {g.target.name} {{']
    for sort, (dom, cod) in g.interfaces.items():
        lines.append(_statement(f'nt {sort}: {_arrow(dom, cod)}'))
    lines.append(_statement(f'start {g.start}'))
    for r in g.rules:
        lines.append(_statement(f'rule {r.name}: {r.output} := {format_context(r.context)}'))
    lines.append('}')
    return '\n'.join(lines)


def print_workspace(ws: Workspace) -> str:
    blocks: List[str] = []
    blocks.extend(print_polygraph(p) for p in ws.polygraphs.values())
    blocks.extend(print_multigraph(m) for m in ws.multigraphs.values())
    blocks.extend(print_automaton(a) for a in ws.automata.values())
    blocks.extend(print_grammar(g) for g in ws.grammars.values())
    return '\n\n'.join(blocks) + ('\n' if blocks else '')
