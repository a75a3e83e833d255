from collections import Counter
from typing import Iterable

from moncat.signatures.multigraph import Multigraph
from moncat.signatures.polygraph import Polygraph
from moncat.signatures.report import ValidationReport


def _duplicates(names: Iterable[str]):
    return sorted(name for name, count in Counter(names).items() if count > 1)


def validate_polygraph(p: Polygraph) -> ValidationReport:
    report = ValidationReport(p.name)
    for sort in _duplicates(p.sorts):
        report.add('duplicate sort', sort)
    for name in _duplicates(gen.name for gen in p.generators):
        report.add('duplicate name', name)
    declared = set(p.sorts)
    for gen in p.generators:
        for sort in gen.arity + gen.coarity:
            if sort not in declared:
                report.add('undeclared sort', f"'{sort}' used by generator '{gen.name}'")
    return report


def validate_multigraph(m: Multigraph) -> ValidationReport:
    report = ValidationReport(m.name)
    for sort in _duplicates(m.sorts):
        report.add('duplicate sort', sort)
    for name in _duplicates(op.name for op in m.operations):
        report.add('duplicate name', name)
    declared = set(m.sorts)
    for op in m.operations:
        for sort in op.inputs + (op.output,):
            if sort not in declared:
                report.add('undeclared sort', f"'{sort}' used by operation '{op.name}'")
    return report
