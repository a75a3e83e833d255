from typing import Optional

from colorama import Fore, Style

from moncat.utils.logger.config import LoggerConfig

_DEFAULT = (Fore.WHITE, Style.NORMAL)
_LEVEL_COLORS = {
    LoggerConfig.Level.DEBUG: (Fore.GREEN, Style.NORMAL),
    LoggerConfig.Level.WARNING: (Fore.YELLOW, Style.NORMAL),
    LoggerConfig.Level.ERROR: (Fore.RED, Style.NORMAL),
    LoggerConfig.Level.CRITICAL: (Fore.RED, Style.BRIGHT),
}


def paint(text: str, color: str, style: str = Style.NORMAL) -> str:
    return style + color + text + Fore.RESET + Style.NORMAL


def with_level_colors(text: str, level: Optional[LoggerConfig.Level]) -> str:
    color, style = _LEVEL_COLORS.get(level, _DEFAULT)
    return paint(text, color, style)
