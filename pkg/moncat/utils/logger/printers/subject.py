from __future__ import annotations

from typing import Optional

from colorama import Fore, Style

from moncat.utils.logger.parts import LoggerParts
from moncat.utils.logger.printers.base import BasePrinter


class SubjectPrinter(BasePrinter):
    def flush(
        self,
        colors: bool,
        subject: Optional[LoggerParts.Subject] = None,
        **kwargs,
    ) -> Optional[str]:
        if subject is None:
            return None
        if not colors:
            return f'{subject.kind} ({subject.name})'
        return (
            Fore.BLUE + f'{subject.kind} '
            + Style.BRIGHT + f'({subject.name})'
            + Fore.RESET + Style.NORMAL
        )
