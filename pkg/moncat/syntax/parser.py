from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from lark import Lark, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput

from moncat.exceptions import ParseException

GRAMMAR_PATH = Path(__file__).with_name('grammar.lark')


@lru_cache(maxsize=None)
def get_parser() -> Lark:
    return Lark(
        GRAMMAR_PATH.read_text(encoding='utf-8'),
        parser='earley',
        lexer='basic',
        start=['file', 'expr'],
        propagate_positions=True,
    )


def _describe(error: UnexpectedInput) -> str:
    if isinstance(error, UnexpectedEOF):
        return 'unexpected end of input'
    if isinstance(error, UnexpectedCharacters):
        return f"unexpected character '{error.char}'"
    token = getattr(error, 'token', None)
    if token is not None:
        return f"unexpected token '{token}'"
    return 'syntax error'


def parse_tree(text: str, start: str = 'file') -> Tree:
    try:
        return get_parser().parse(text, start=start)
    except UnexpectedInput as error:
        line = error.line if error.line is not None and error.line > 0 else None
        column = error.column if line is not None else None
        raise ParseException(_describe(error), line, column) from None
