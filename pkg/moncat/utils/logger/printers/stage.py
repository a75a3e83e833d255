from __future__ import annotations

from typing import Optional

from colorama import Fore

from moncat.utils.logger.parts import LoggerParts
from moncat.utils.logger.printers.base import BasePrinter
from moncat.utils.logger.printers.shared import paint


class StagePrinter(BasePrinter):
    def flush(
        self,
        colors: bool,
        stage: Optional[LoggerParts.Stage] = None,
        **kwargs,
    ) -> Optional[str]:
        if stage is None:
            return None
        text = f'{{{stage.text}}}'
        return paint(text, Fore.LIGHTBLACK_EX) if colors else text
