from typing import Iterable, Optional, Sequence


def _word(word: Iterable[str]) -> str:
    text = ' '.join(word)
    return text if text else 'ε'


class MoncatException(Exception):
    pass


class SignatureException(MoncatException):
    pass


class UnknownGeneratorException(MoncatException):
    def __init__(self, name: str, signature: Optional[str] = None):
        where = f" in '{signature}'" if signature else ''
        super().__init__(f"Unknown generator '{name}'{where}")


class UnknownSortException(MoncatException):
    def __init__(self, sort: str, signature: Optional[str] = None):
        where = f" in '{signature}'" if signature else ''
        super().__init__(f"Undeclared sort '{sort}'{where}")


class InterfaceMismatchException(MoncatException):
    def __init__(self, expected: Sequence[str], actual: Sequence[str], where: str = ''):
        self.expected = tuple(expected)
        self.actual = tuple(actual)
        prefix = f'{where}: ' if where else ''
        super().__init__(
            f'{prefix}interface mismatch, expected [{_word(expected)}] '
            f'but found [{_word(actual)}]'
        )


class PolygraphMismatchException(MoncatException):
    def __init__(self, left: str, right: str):
        super().__init__(f"Diagrams live over different polygraphs: '{left}' and '{right}'")


class InterchangeException(MoncatException):
    def __init__(self, index: int):
        super().__init__(f'Slices {index} and {index + 1} share wires and cannot be interchanged')


class NonlinearContextException(MoncatException):
    def __init__(self, variable: str):
        super().__init__(f"Hole variable '{variable}' is used more than once")


class UnknownVariableException(MoncatException):
    def __init__(self, variable: str):
        super().__init__(f"Unknown hole variable '{variable}'")


class DoctrineException(MoncatException):
    pass


class AutomatonException(MoncatException):
    pass


class WidthMismatchException(MoncatException):
    def __init__(self, i: int, j: int, left: int, right: int):
        super().__init__(
            f'Cut points {i} and {j} have different widths ({left} != {right})'
        )


class GrammarException(MoncatException):
    pass


class MalformedContourException(MoncatException):
    def __init__(self, reason: str):
        super().__init__(f'Malformed contour: {reason}')


class MorphismException(MoncatException):
    pass


class WorkLimitExceededException(MoncatException):
    def __init__(self, limit: int):
        super().__init__(
            f'Enumeration exceeded the work limit of {limit} partial objects '
            '(raise MONCAT_MAX_WORK to continue)'
        )


class ParseException(MoncatException):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = f'{line}:{column}: ' if line is not None else ''
        super().__init__(f'{location}{message}')


class UnresolvedReferenceException(MoncatException):
    def __init__(self, kind: str, name: str):
        super().__init__(f"Unresolved {kind} '{name}'")


class WrongParametersStructureException(MoncatException):
    pass


class WrongParameterValueException(MoncatException):
    pass


class ConfigurationFileException(MoncatException):
    pass


class OpenContextException(MoncatException):
    def __init__(self, variables: Sequence[str]):
        super().__init__(f"Context still has holes: {', '.join(variables)}")


class FactorizationException(MoncatException):
    pass
