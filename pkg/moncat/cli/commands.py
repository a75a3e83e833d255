from __future__ import annotations

import argparse
import asyncio
from dataclasses import dataclass
from typing import List, Optional

from moncat.cli.printer import format_diagram, print_automaton, print_grammar, print_polygraph
from moncat.cli.render import render_ascii, render_dot
from moncat.cli.workspace import Workspace
from moncat.config_reader import SessionConfig
from moncat.contextfree.derivation import enumerate_derivations, evaluate_derivation
from moncat.contextfree.grammar import CFMonoidalGrammar, validate_grammar
from moncat.contextfree.language import cf_language
from moncat.contextfree.lifting import lift_regular
from moncat.diagrams.diagram import Diagram
from moncat.diagrams.expression import parse_diagram
from moncat.exceptions import MoncatException, UnresolvedReferenceException
from moncat.optics.contour import grammar_contour, induced_functor, regular_representative
from moncat.optics.representation import verify_representation
from moncat.regular.automaton import accepts
from moncat.regular.enumeration import enumerate_regular
from moncat.regular.grammar import automaton_to_grammar, grammar_to_automaton
from moncat.regular.pumping import check_family
from moncat.signatures.validator import validate_multigraph, validate_polygraph
from moncat.utils.budget import WorkBudget
from moncat.utils.logger import MoncatLogger

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


@dataclass(frozen=True)
class CommandResult:
    output: str
    exit_code: int = EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='moncat',
        description='Workbench for regular and context-free monoidal languages',
    )
    parser.add_argument(
        '--config', metavar='YAML', type=str, help='Path to a session config file')
    parser.add_argument(
        '-f', '--file', metavar='MON', dest='files', action='append', default=[],
        help='A .mon file to load (repeatable)')
    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser('validate', help='Check every declaration of the workspace')

    accept = commands.add_parser('accept', help='Run an automaton on a diagram')
    accept.add_argument('automaton')
    accept.add_argument('expression')

    enumerate_ = commands.add_parser('enumerate', help='Bounded language of an automaton or cfg')
    enumerate_.add_argument('name')
    bound = enumerate_.add_mutually_exclusive_group()
    bound.add_argument('--max-gens', type=int)
    bound.add_argument('--max-rules', type=int)

    derive = commands.add_parser('derive', help='Derivations of a cfg and their diagrams')
    derive.add_argument('grammar')
    derive.add_argument('--max-rules', type=int)

    contour = commands.add_parser('contour', help='Optical contour of a cfg')
    contour.add_argument('grammar')

    represent = commands.add_parser('represent', help='Regular representative of a cfg')
    represent.add_argument('grammar')

    lift = commands.add_parser('lift', help='Right-linear cfg of an automaton')
    lift.add_argument('automaton')
    lift.add_argument('--max-width', type=int)

    verify = commands.add_parser(
        'verify', help='Check the representation of a cfg or of a lifted automaton')
    verify.add_argument('grammar')
    verify.add_argument('--bound', type=int)
    verify.add_argument('--parallel', action='store_true')

    render = commands.add_parser('render', help='Draw a diagram')
    render.add_argument('expression')
    render.add_argument('--format', choices=('dot', 'ascii'), default='ascii')
    render.add_argument('--over', metavar='POLYGRAPH')

    pumpcheck = commands.add_parser('pumpcheck', help='Pumping lemma search on a family')
    pumpcheck.add_argument('family')
    pumpcheck.add_argument('--max-n', type=int, default=6)
    return parser


def _listing(name: str, diagrams: List[Diagram]) -> str:
    lines = [format_diagram(d) for d in diagrams]
    lines.append(f'COUNT {name} {len(diagrams)}')
    return '\n'.join(lines)


def _validate(workspace: Workspace) -> CommandResult:
    reports = [validate_polygraph(p) for p in workspace.polygraphs.values()]
    reports += [validate_multigraph(m) for m in workspace.multigraphs.values()]
    reports += [a.validate() for a in workspace.automata.values()]
    reports += [validate_grammar(g) for g in workspace.grammars.values()]
    ok = all(report.ok for report in reports)
    return CommandResult('\n'.join(map(str, reports)), EXIT_OK if ok else EXIT_FALSE)


def _render(workspace: Workspace, args) -> CommandResult:
    if args.over is not None:
        candidates = [workspace.polygraph(args.over)]
    else:
        candidates = list(workspace.polygraphs.values())
    error: Optional[MoncatException] = None
    for polygraph in candidates:
        try:
            d = parse_diagram(args.expression, polygraph)
        except MoncatException as exc:
            error = error or exc
            continue
        text = render_dot(d) if args.format == 'dot' else render_ascii(d)
        return CommandResult(text.rstrip('\n'))
    if error is not None:
        raise error
    raise UnresolvedReferenceException('polygraph', 'for the expression')


def _lifted(workspace: Workspace, name: str, width: int) -> CFMonoidalGrammar:
    return lift_regular(automaton_to_grammar(workspace.automaton(name)), width)


def _represent(workspace: Workspace, name: str) -> CommandResult:
    g = workspace.grammar(name)
    cp = grammar_contour(g)
    representative = grammar_to_automaton(regular_representative(g, cp))
    functor = induced_functor(g, cp=cp)
    lines = [print_polygraph(cp.polygraph), print_automaton(representative)]
    for sort, w in functor.sort_map.items():
        lines.append(f"sort {sort} |-> {' '.join(w) or 'ε'}")
    for gen, image in functor.gen_map.items():
        lines.append(f'gen {gen} |-> {format_diagram(image)}')
    return CommandResult('\n'.join(lines))


def run_command(
    workspace: Workspace,
    args: argparse.Namespace,
    session: Optional[SessionConfig] = None,
) -> CommandResult:
    session = session or SessionConfig()
    budget = WorkBudget(session.max_work)
    logger = MoncatLogger.of(
        session.logger, workspace=MoncatLogger.Parts.Workspace(name=workspace.name))
    command = args.command

    if command == 'validate':
        return _validate(workspace)

    if command == 'accept':
        a = workspace.automaton(args.automaton)
        result = accepts(a, parse_diagram(args.expression, a.alphabet))
        return CommandResult(str(result).lower(), EXIT_OK if result else EXIT_FALSE)

    if command == 'enumerate':
        if args.name in workspace.automata:
            a = workspace.automata[args.name]
            bound = args.max_gens if args.max_gens is not None else session.bounds.enumerate
            chained = logger.chain(subject=MoncatLogger.Parts.Subject(a.name, 'automaton'))
            return CommandResult(_listing(
                a.name, enumerate_regular(a, bound, budget=budget, logger=chained)))
        g = workspace.grammar(args.name)
        bound = args.max_rules if args.max_rules is not None else session.bounds.derive
        chained = logger.chain(subject=MoncatLogger.Parts.Subject(g.name, 'grammar'))
        return CommandResult(
            _listing(g.name, cf_language(g, bound, budget=budget, logger=chained)))

    if command == 'derive':
        g = workspace.grammar(args.grammar)
        bound = args.max_rules if args.max_rules is not None else session.bounds.derive
        derivations = enumerate_derivations(g, g.start, bound, budget=budget, logger=logger)
        lines = [
            f'{d.render()} => {format_diagram(evaluate_derivation(g, d))}' for d in derivations]
        lines.append(f'COUNT {g.name} {len(derivations)}')
        return CommandResult('\n'.join(lines))

    if command == 'contour':
        cp = grammar_contour(workspace.grammar(args.grammar))
        return CommandResult(print_polygraph(cp.polygraph))

    if command == 'represent':
        return _represent(workspace, args.grammar)

    if command == 'lift':
        width = args.max_width if args.max_width is not None else session.lift_width
        return CommandResult(print_grammar(_lifted(workspace, args.automaton, width)))

    if command == 'verify':
        if args.grammar in workspace.automata and args.grammar not in workspace.grammars:
            g = _lifted(workspace, args.grammar, session.lift_width)
        else:
            g = workspace.grammar(args.grammar)
        bound = args.bound if args.bound is not None else session.bounds.verify
        chained = logger.chain(subject=MoncatLogger.Parts.Subject(g.name, 'grammar'))
        if args.parallel or session.parallel:
            from moncat.parallel import ParallelVerifier, init
            init(ignore_reinit_error=True)
            verifier = ParallelVerifier(chained, max_work=session.max_work)
            report = asyncio.run(verifier.verify(g, bound))
        else:
            report = verify_representation(g, bound, budget=budget, logger=chained)
        lines = [report.summary()]
        lines += [f'missing {format_diagram(d)}' for d in report.missing]
        lines += [f'extra {format_diagram(d)}' for d in report.extra]
        return CommandResult('\n'.join(lines), EXIT_OK if report.equal else EXIT_FALSE)

    if command == 'render':
        return _render(workspace, args)

    if command == 'pumpcheck':
        report = check_family(args.family, args.max_n, session.pump_exponents)
        return CommandResult(
            '\n'.join(report.lines()), EXIT_OK if report.witness_found else EXIT_FALSE)

    raise MoncatException(f"Unknown command '{command}'")
