import re
from typing import Dict, Optional, Tuple

from moncat.signatures.polygraph import Doctrine, Generator, Word

_NAME = re.compile(r'^(\w+)\[([\w.^]+(?:,[\w.^]+)*)\]$')


def _copy(a: str) -> Tuple[Word, Word]:
    return (a,), (a, a)


def _delete(a: str) -> Tuple[Word, Word]:
    return (a,), ()


def _swap(a: str, b: str) -> Tuple[Word, Word]:
    return (a, b), (b, a)


def _merge(a: str) -> Tuple[Word, Word]:
    return (a, a), (a,)


def _unit(a: str) -> Tuple[Word, Word]:
    return (), (a,)


STRUCTURE: Dict[Doctrine, Dict[str, callable]] = {
    Doctrine.FREE: {},
    Doctrine.CARTESIAN: {
        'copy': _copy,
        'del': _delete,
        'swap': _swap,
    },
    Doctrine.HYPERGRAPH: {
        'mu': _merge,
        'eta': _unit,
        'delta': _copy,
        'eps': _delete,
        'swap': _swap,
    },
}


def structural_name(operation: str, *sorts: str) -> str:
    return f"{operation}[{','.join(sorts)}]"


def parse_structural_name(name: str) -> Optional[Tuple[str, Tuple[str, ...]]]:
    match = _NAME.match(name)
    if match is None:
        return None
    return match.group(1), tuple(match.group(2).split(','))


def structural_generator(doctrine: Doctrine, name: str) -> Optional[Generator]:
    parsed = parse_structural_name(name)
    if parsed is None:
        return None
    operation, sorts = parsed
    shape = STRUCTURE[doctrine].get(operation)
    if shape is None:
        return None
    try:
        arity, coarity = shape(*sorts)
    except TypeError:
        return None
    return Generator(name, arity, coarity, Generator.Kind.STRUCTURAL)
