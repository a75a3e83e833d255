from __future__ import annotations

import os
from typing import Optional

from moncat.exceptions import WorkLimitExceededException

MAX_WORK_VARIABLE = 'MONCAT_MAX_WORK'
DEFAULT_MAX_WORK = 10 ** 6


def default_max_work() -> int:
    value = os.environ.get(MAX_WORK_VARIABLE)
    return int(value) if value else DEFAULT_MAX_WORK


class WorkBudget:
    """ Caps the number of partial objects an enumeration may build. """

    def __init__(self, limit: Optional[int] = None):
        self.limit = default_max_work() if limit is None else limit
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise WorkLimitExceededException(self.limit)

    @property
    def remaining(self) -> int:
        return max(self.limit - self.used, 0)
