from __future__ import annotations

from typing import Optional

from colorama import Fore, Style

from moncat.utils.logger.parts import LoggerParts
from moncat.utils.logger.printers.base import BasePrinter
from moncat.utils.logger.printers.shared import paint


class WorkspacePrinter(BasePrinter):
    def flush(
        self,
        colors: bool,
        workspace: Optional[LoggerParts.Workspace] = None,
        **kwargs,
    ) -> Optional[str]:
        if workspace is None:
            return None
        text = f'{workspace.name}:'
        return paint(text, Fore.MAGENTA, Style.BRIGHT) if colors else text
