from __future__ import annotations

from typing import Optional

from colorama import Fore, Style

from moncat.utils.logger.parts import LoggerParts
from moncat.utils.logger.printers.base import BasePrinter
from moncat.utils.logger.printers.shared import paint


class WorkerPrinter(BasePrinter):
    def flush(
        self,
        colors: bool,
        worker: Optional[LoggerParts.Worker] = None,
        **kwargs,
    ) -> Optional[str]:
        if worker is None:
            return None
        text = f'<{worker.name}>' if worker.index is None else f'<{worker.name}#{worker.index}>'
        return paint(text, Fore.CYAN, Style.BRIGHT) if colors else text
