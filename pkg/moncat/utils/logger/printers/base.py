from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Optional

from moncat.utils.logger.parts import LoggerParts


class BasePrinter(ABC):
    @abstractmethod
    def flush(
        self,
        colors: bool,
        *,
        msg: Optional[str] = None,
        workspace: Optional[LoggerParts.Workspace] = None,
        subject: Optional[LoggerParts.Subject] = None,
        worker: Optional[LoggerParts.Worker] = None,
        stage: Optional[LoggerParts.Stage] = None,
        is_event: bool = False,
        level: Optional[LoggerParts.Level] = None,
        **kwargs,
    ) -> Optional[str]:
        raise NotImplementedError()
