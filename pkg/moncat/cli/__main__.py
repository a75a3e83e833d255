import sys
from pathlib import Path
from typing import List, Optional

from moncat.cli.commands import EXIT_ERROR, build_parser, run_command
from moncat.cli.workspace import load_workspace
from moncat.config_reader import ConfigReader, SessionConfig
from moncat.exceptions import MoncatException


def _session(path: Optional[str]) -> SessionConfig:
    if path is None:
        return SessionConfig()
    return ConfigReader.read(Path(path).read_text(encoding='utf-8'))


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        session = _session(args.config)
        workspace = load_workspace(list(session.corpus) + list(args.files), session.name)
        result = run_command(workspace, args, session)
    except (MoncatException, OSError) as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_ERROR
    if result.output:
        print(result.output)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
