from __future__ import annotations

from datetime import datetime

from colorama import Fore

from moncat.utils.logger.printers.base import BasePrinter
from moncat.utils.logger.printers.shared import paint


class TimestampPrinter(BasePrinter):
    def flush(self, colors: bool, **kwargs) -> str:
        text = f"[{datetime.now().strftime('%H:%M:%S.%f')[:-3]}]"
        return paint(text, Fore.YELLOW) if colors else text
