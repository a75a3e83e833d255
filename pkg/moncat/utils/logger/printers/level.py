from __future__ import annotations

from typing import Optional

from moncat.utils.logger.parts import LoggerParts
from moncat.utils.logger.printers.base import BasePrinter
from moncat.utils.logger.printers.shared import with_level_colors


class LevelPrinter(BasePrinter):
    def flush(
        self,
        colors: bool,
        level: Optional[LoggerParts.Level] = None,
        **kwargs,
    ) -> Optional[str]:
        if level is None:
            return None
        text = f'[{level.value.name}]'
        return with_level_colors(text, level.value) if colors else text
