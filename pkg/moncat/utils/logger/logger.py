from __future__ import annotations

from functools import partial
from logging import getLogger
from typing import Any, Callable, Optional, Type

from moncat.utils.logger.config import LoggerConfig
from moncat.utils.logger.parts import LoggerParts
from moncat.utils.logger.printers import (
    LevelPrinter, MessagePrinter, StagePrinter, SubjectPrinter, TimestampPrinter,
    WorkerPrinter, WorkspacePrinter)

RUNTIME_LOGGER = 'moncat.runtime'


class MoncatLogger:
    """ Console logger for long running work (enumerations, verification).

    Context such as the workspace or the grammar under work is bound with
    ``of`` and ``chain``; a logger built without a config drops everything.
    """

    Config = LoggerConfig
    Parts = LoggerParts

    _printers = {
        LoggerConfig.Part.LEVEL: LevelPrinter(),
        LoggerConfig.Part.TIMESTAMP: TimestampPrinter(),
        LoggerConfig.Part.WORKSPACE: WorkspacePrinter(),
        LoggerConfig.Part.SUBJECT: SubjectPrinter(),
        LoggerConfig.Part.WORKER: WorkerPrinter(),
        LoggerConfig.Part.STAGE: StagePrinter(),
        LoggerConfig.Part.MESSAGE: MessagePrinter(),
    }

    _logging_methods = {
        LoggerConfig.Level.DEBUG: 'debug',
        LoggerConfig.Level.WARNING: 'warning',
        LoggerConfig.Level.ERROR: 'error',
        LoggerConfig.Level.CRITICAL: 'critical',
    }

    @classmethod
    def of(
        cls: Type[MoncatLogger],
        config: Optional[MoncatLogger.Config],
        **parts,
    ) -> MoncatLogger:
        if config is None:
            return cls()
        return cls(partial(MoncatLogger._prepare_message, config=config, **parts))

    def __init__(self, callback: Optional[Callable[..., Any]] = None) -> None:
        self._callback = callback

    @property
    def enabled(self) -> bool:
        return self._callback is not None

    def log_message(self, msg: str, level: LoggerConfig.Level) -> None:
        if self._callback:
            self._callback(msg=msg, is_event=False, level=LoggerParts.Level(level))

    def info(self, msg: str) -> None:
        self.log_message(msg, LoggerConfig.Level.INFO)

    def debug(self, msg: str) -> None:
        self.log_message(msg, LoggerConfig.Level.DEBUG)

    def warn(self, msg: str) -> None:
        self.log_message(msg, LoggerConfig.Level.WARNING)

    def error(self, msg: str) -> None:
        self.log_message(msg, LoggerConfig.Level.ERROR)

    def critical(self, msg: str) -> None:
        self.log_message(msg, LoggerConfig.Level.CRITICAL)

    def event(self, msg: str) -> None:
        if self._callback:
            self._callback(
                msg=msg, is_event=True, level=LoggerParts.Level(LoggerConfig.Level.INFO))

    def chain(self, **parts) -> MoncatLogger:
        if self._callback is None:
            return self
        return MoncatLogger(partial(self._callback, **parts))

    @staticmethod
    def _prepare_message(config: MoncatLogger.Config, **kwargs) -> None:
        is_event = kwargs.get('is_event', False)
        level = kwargs.get('level', LoggerParts.Level(LoggerConfig.Level.INFO))

        if not config.enable or (is_event and not config.log_events):
            return

        to_logging = config.output == LoggerConfig.Output.LOGGING
        parts = [
            MoncatLogger._printers[part].flush(colors=config.colors, **kwargs)
            for part in config.format
            if not (to_logging and part == LoggerConfig.Part.LEVEL)
        ]
        message = ' '.join(p for p in parts if p is not None)

        if config.output == LoggerConfig.Output.STDOUT:
            print(message)
        elif to_logging:
            method = MoncatLogger._logging_methods.get(level.value, 'info')
            getattr(getLogger(RUNTIME_LOGGER), method)(message)
        elif callable(config.output):
            config.output(message)
