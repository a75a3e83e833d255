from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from moncat.utils.logger.config import LoggerConfig


class LoggerParts:
    @dataclass(frozen=True)
    class Workspace:
        name: str

    @dataclass(frozen=True)
    class Subject:
        """ The automaton, grammar or family being worked on. """
        name: str
        kind: str

    @dataclass(frozen=True)
    class Worker:
        name: str
        index: Optional[int] = None

    @dataclass(frozen=True)
    class Stage:
        text: str

    @dataclass(frozen=True)
    class Level:
        value: LoggerConfig.Level
