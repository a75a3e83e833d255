from moncat.cli.commands import CommandResult, build_parser, run_command
from moncat.cli.printer import format_context, format_diagram, print_workspace
from moncat.cli.render import render_ascii, render_dot
from moncat.cli.workspace import Workspace, load_workspace, parse_file, parse_text

__all__ = [
    'CommandResult',
    'build_parser',
    'run_command',
    'format_context',
    'format_diagram',
    'print_workspace',
    'render_ascii',
    'render_dot',
    'Workspace',
    'load_workspace',
    'parse_file',
    'parse_text',
]
