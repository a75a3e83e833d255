from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple, Union

from lark import Token, Transformer, Tree, v_args
from lark.exceptions import VisitError

from moncat.contextfree.grammar import CFMonoidalGrammar, Rule
from moncat.diagrams.expression import build_expression
from moncat.exceptions import ParseException, UnresolvedReferenceException
from moncat.regular.automaton import MonoidalAutomaton
from moncat.signatures.multigraph import Multigraph, Operation
from moncat.signatures.polygraph import Doctrine, Generator, Polygraph, Word
from moncat.syntax.parser import parse_tree


@dataclass(frozen=True)
class Statement:
    kind: str
    keyword: str
    parts: Tuple
    line: Optional[int] = None
    column: Optional[int] = None


@dataclass(frozen=True)
class Block:
    kind: str
    name: str
    over: Optional[str]
    statements: Tuple[Statement, ...]
    line: Optional[int] = None
    column: Optional[int] = None


@dataclass
class Workspace:
    """ Everything declared in a set of ``.mon`` files, keyed by name. """

    name: str = 'workspace'
    polygraphs: Dict[str, Polygraph] = field(default_factory=dict)
    multigraphs: Dict[str, Multigraph] = field(default_factory=dict)
    automata: Dict[str, MonoidalAutomaton] = field(default_factory=dict)
    grammars: Dict[str, CFMonoidalGrammar] = field(default_factory=dict)

    def names(self) -> Set[str]:
        return set(self.polygraphs) | set(self.multigraphs) | set(self.automata) | set(
            self.grammars)

    def is_empty(self) -> bool:
        return not self.names()

    def polygraph(self, name: str) -> Polygraph:
        if name not in self.polygraphs:
            raise UnresolvedReferenceException('polygraph', name)
        return self.polygraphs[name]

    def automaton(self, name: str) -> MonoidalAutomaton:
        if name not in self.automata:
            raise UnresolvedReferenceException('automaton', name)
        return self.automata[name]

    def grammar(self, name: str) -> CFMonoidalGrammar:
        if name not in self.grammars:
            raise UnresolvedReferenceException('grammar', name)
        return self.grammars[name]

    def merge(self, other: Workspace) -> Workspace:
        for name in sorted(other.names()):
            if name in self.names():
                raise ParseException(f"'{name}' is declared twice")
        self.polygraphs.update(other.polygraphs)
        self.multigraphs.update(other.multigraphs)
        self.automata.update(other.automata)
        self.grammars.update(other.grammars)
        return self


class _Blocks(Transformer):
    """ Flattens the parse tree into blocks of statements; expressions stay trees. """

    def word(self, items) -> Word:
        return tuple(str(token) for token in items)

    @v_args(meta=True)
    def field(self, meta, items):
        return Statement('field', str(items[0]), (items[1],), meta.line, meta.column)

    @v_args(meta=True)
    def transition(self, meta, items):
        return Statement('transition', str(items[0]), (items[1], items[2]), meta.line, meta.column)

    @v_args(meta=True)
    def declaration(self, meta, items):
        return Statement(
            'declaration', str(items[0]), (str(items[1]), items[2], items[3]),
            meta.line, meta.column)

    @v_args(meta=True)
    def directive(self, meta, items):
        return Statement('directive', str(items[0]), (str(items[1]),), meta.line, meta.column)

    @v_args(meta=True)
    def rule(self, meta, items):
        return Statement(
            'rule', str(items[0]), (str(items[1]), str(items[2]), items[3]),
            meta.line, meta.column)

    @v_args(meta=True)
    def block(self, meta, items):
        names = [str(item) for item in items if isinstance(item, Token)]
        statements = tuple(item for item in items if isinstance(item, Statement))
        kind, name = names[0], names[1]
        connective, over = (names[2], names[3]) if len(names) == 4 else (None, None)
        if connective is not None and connective != 'over':
            raise ParseException(f"expected 'over', found '{connective}'", meta.line, meta.column)
        return Block(kind, name, over, statements, meta.line, meta.column)

    def file(self, items):
        return list(items)


def _fail(message: str, where: Union[Statement, Block]) -> ParseException:
    return ParseException(message, where.line, where.column)


def _expect(stmt: Statement, block: Block, allowed: Dict[str, str]) -> None:
    if allowed.get(stmt.keyword) != stmt.kind and allowed.get('*') != stmt.kind:
        raise _fail(f"unexpected {stmt.kind} '{stmt.keyword}' in {block.kind} '{block.name}'", stmt)


def _single(stmt: Statement) -> str:
    w = stmt.parts[0]
    if len(w) != 1:
        raise _fail(f"'{stmt.keyword}' takes exactly one name", stmt)
    return w[0]


def _build_polygraph(block: Block) -> Polygraph:
    sorts: Word = ()
    doctrine = Doctrine.FREE
    generators: List[Generator] = []
    allowed = {'sorts': 'field', 'doctrine': 'field', 'gen': 'declaration'}
    for stmt in block.statements:
        _expect(stmt, block, allowed)
        if stmt.keyword == 'sorts':
            sorts += stmt.parts[0]
        elif stmt.keyword == 'doctrine':
            value = _single(stmt)
            try:
                doctrine = Doctrine(value)
            except ValueError:
                raise _fail(f"unknown doctrine '{value}'", stmt) from None
        else:
            name, arity, coarity = stmt.parts
            generators.append(Generator(name, arity, coarity))
    return Polygraph(block.name, sorts, tuple(generators), doctrine)


def _build_multigraph(block: Block) -> Multigraph:
    sorts: Word = ()
    operations: List[Operation] = []
    for stmt in block.statements:
        _expect(stmt, block, {'sorts': 'field', 'op': 'declaration'})
        if stmt.keyword == 'sorts':
            sorts += stmt.parts[0]
            continue
        name, inputs, output = stmt.parts
        if len(output) != 1:
            raise _fail(f"operation '{name}' must have exactly one output sort", stmt)
        operations.append(Operation(name, inputs, output[0]))
    return Multigraph(block.name, sorts, tuple(operations))


def _build_automaton(block: Block, alphabet: Polygraph) -> MonoidalAutomaton:
    fields: Dict[str, Word] = {}
    transitions: Dict[str, set] = {}
    allowed = {
        'states': 'field', 'init': 'field', 'final': 'field', 'domain': 'field',
        'codomain': 'field', '*': 'transition',
    }
    for stmt in block.statements:
        _expect(stmt, block, allowed)
        if stmt.kind == 'field':
            fields[stmt.keyword] = fields.get(stmt.keyword, ()) + stmt.parts[0]
        else:
            transitions.setdefault(stmt.keyword, set()).add(stmt.parts)
    for required in ('states', 'init', 'final'):
        if required not in fields:
            raise _fail(f"automaton '{block.name}' has no '{required}'", block)
    return MonoidalAutomaton(
        block.name,
        alphabet,
        fields['states'],
        {name: frozenset(relation) for name, relation in transitions.items()},
        fields['init'],
        fields['final'],
        fields.get('domain'),
        fields.get('codomain'),
    )


def _build_grammar(block: Block, target: Polygraph) -> CFMonoidalGrammar:
    interfaces: Dict[str, Tuple[Word, Word]] = {}
    start: Optional[str] = None
    allowed = {'nt': 'declaration', 'start': 'directive', 'rule': 'rule'}
    for stmt in block.statements:
        _expect(stmt, block, allowed)
        if stmt.keyword == 'nt':
            name, domain, codomain = stmt.parts
            interfaces[name] = (domain, codomain)
        elif stmt.keyword == 'start':
            start = stmt.parts[0]
    if start is None:
        raise _fail(f"grammar '{block.name}' has no start nonterminal", block)
    rules = []
    for stmt in block.statements:
        if stmt.keyword != 'rule':
            continue
        name, sort, tree = stmt.parts
        context = build_expression(tree, target, holes=interfaces, positional=True)
        rules.append(Rule.of(name, sort, context))
    return CFMonoidalGrammar(block.name, target, interfaces, tuple(rules), start)


def parse_text(text: str, name: str = 'workspace') -> Workspace:
    try:
        blocks: List[Block] = _Blocks().transform(parse_tree(text))
    except VisitError as error:
        raise error.orig_exc from None
    workspace = Workspace(name)
    seen: Set[str] = set()
    for block in blocks:
        if block.name in seen:
            raise _fail(f"'{block.name}' is declared twice", block)
        seen.add(block.name)
        if block.kind in ('polygraph', 'multigraph'):
            if block.over is not None:
                raise _fail(f"a {block.kind} is not declared over anything", block)
        elif block.kind in ('automaton', 'cfg'):
            if block.over is None:
                raise _fail(f"{block.kind} '{block.name}' needs 'over <polygraph>'", block)
        else:
            raise _fail(f"unknown block '{block.kind}'", block)
    for block in blocks:
        if block.kind == 'polygraph':
            workspace.polygraphs[block.name] = _build_polygraph(block)
        elif block.kind == 'multigraph':
            workspace.multigraphs[block.name] = _build_multigraph(block)
    for block in blocks:
        if block.kind == 'automaton':
            workspace.automata[block.name] = _build_automaton(
                block, workspace.polygraph(block.over))
        elif block.kind == 'cfg':
            workspace.grammars[block.name] = _build_grammar(
                block, workspace.polygraph(block.over))
    return workspace


def parse_file(path: Union[str, Path]) -> Workspace:
    path = Path(path)
    return parse_text(path.read_text(encoding='utf-8'), name=path.stem)


def load_workspace(paths: List[Union[str, Path]], name: Optional[str] = None) -> Workspace:
    workspace = Workspace(name or 'workspace')
    for path in paths:
        workspace.merge(parse_file(path))
    return workspace
