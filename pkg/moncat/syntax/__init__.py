from moncat.syntax.parser import get_parser, parse_tree

__all__ = [
    'get_parser',
    'parse_tree',
]
