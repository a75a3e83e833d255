from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

from moncat.exceptions import SignatureException


@dataclass(frozen=True)
class Issue:
    kind: str
    message: str

    def __str__(self) -> str:
        return f'{self.kind}: {self.message}'


@dataclass
class ValidationReport:
    """ Outcome of a validation pass.

    Validation never stops at the first problem: every violation found
    is collected so that a single run reports all of them.
    """

    subject: str
    issues: List[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, kind: str, message: str) -> None:
        self.issues.append(Issue(kind, message))

    def extend(self, other: ValidationReport) -> None:
        self.issues.extend(other.issues)

    def kinds(self) -> List[str]:
        return [issue.kind for issue in self.issues]

    def raise_for_issues(self, exception=SignatureException) -> None:
        if self.issues:
            raise exception(f"'{self.subject}' is invalid: " + '; '.join(map(str, self.issues)))

    def __str__(self) -> str:
        if self.ok:
            return f'{self.subject}: ok'
        return '\n'.join([f'{self.subject}: {len(self.issues)} issue(s)'] + [
            f'  - {issue}' for issue in self.issues
        ])
