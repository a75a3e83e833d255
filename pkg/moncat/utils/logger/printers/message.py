from __future__ import annotations

from typing import Optional

from colorama import Fore, Style

from moncat.utils.logger.parts import LoggerParts
from moncat.utils.logger.printers.base import BasePrinter
from moncat.utils.logger.printers.shared import paint, with_level_colors


class MessagePrinter(BasePrinter):
    def flush(
        self,
        colors: bool,
        msg: Optional[str] = None,
        is_event: bool = False,
        level: Optional[LoggerParts.Level] = None,
        **kwargs,
    ) -> Optional[str]:
        if is_event:
            text = f'[{msg}]'
            return paint(text, Fore.GREEN, Style.BRIGHT) if colors else text
        return with_level_colors(msg, level.value if level else None) if colors else msg
