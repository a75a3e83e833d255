import re
import pytest

from colorama import Fore, Style

from moncat.utils.logger.printers import LevelPrinter
from moncat.utils.logger.config import LoggerConfig
from moncat.utils.logger.parts import LoggerParts


class TestLevelPrinter:
    COLOR_REGEXP = r'\x1b'

    @pytest.mark.parametrize(
        "level,expected_color",
        [
            (LoggerConfig.Level.INFO, Fore.WHITE),
            (LoggerConfig.Level.WARNING, Fore.YELLOW),
            (LoggerConfig.Level.ERROR, Fore.RED),
            (LoggerConfig.Level.DEBUG, Fore.GREEN),
            (LoggerConfig.Level.CRITICAL, Fore.RED)
        ]
    )
    def test_should_print_level_correctly(self, level, expected_color):
        printer = LevelPrinter()
        output = printer.flush(colors=True, level=LoggerParts.Level(level))
        assert f'[{level.name}]' in output
        assert expected_color in output

    @pytest.mark.parametrize("level", list(LoggerConfig.Level))
    def test_should_log_level_without_color_if_set(self, level):
        output = LevelPrinter().flush(colors=False, level=LoggerParts.Level(level))
        assert output == f'[{level.name}]'
        assert re.search(self.COLOR_REGEXP, output) is None

    def test_should_print_critical_level_in_color_and_bold(self):
        output = LevelPrinter().flush(
            colors=True, level=LoggerParts.Level(LoggerConfig.Level.CRITICAL))
        assert output.startswith(Style.BRIGHT + Fore.RED + '[CRITICAL]')

    def test_should_ignore_extra_arguments(self):
        printer = LevelPrinter()
        assert printer.flush(colors=False) == printer.flush(colors=False, extra='args')
