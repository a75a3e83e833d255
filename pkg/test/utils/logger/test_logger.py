from __future__ import annotations

import re
import pytest
from unittest.mock import MagicMock, patch

from moncat.utils.logger import MoncatLogger
from moncat.utils.logger.config import LoggerConfig


class PartialOutput(str):
    COLOR_REGEXP = r'\x1b'
    color = False

    def with_color(self) -> PartialOutput:
        self.color = True
        return self

    def __eq__(self, other: str):
        return self in other and (re.search(self.COLOR_REGEXP, other) is not None) == self.color


LEVELS = ['info', 'debug', 'warn', 'critical', 'error']


class TestMoncatLogger:
    @pytest.mark.parametrize("log_level", LEVELS)
    @patch('moncat.utils.logger.logger.print')
    def test_should_log_standard_message(self, mock, log_level):
        logger = MoncatLogger.of(MoncatLogger.Config())
        getattr(logger, log_level)('Hello!')
        mock.assert_called_once_with(PartialOutput('Hello!').with_color())

    @pytest.mark.parametrize("log_level", LEVELS)
    @patch('moncat.utils.logger.logger.print')
    def test_should_log_standard_message_without_colors(self, mock, log_level):
        logger = MoncatLogger.of(MoncatLogger.Config(colors=False))
        getattr(logger, log_level)('Hello!')
        mock.assert_called_once_with(PartialOutput('Hello!'))

    @pytest.mark.parametrize("log_level", LEVELS)
    @patch('moncat.utils.logger.logger.print')
    def test_logger_should_be_disabled(self, mock, log_level):
        logger = MoncatLogger.of(MoncatLogger.Config(enable=False))
        getattr(logger, log_level)('Hello!')
        mock.assert_not_called()

    @patch('moncat.utils.logger.logger.print')
    def test_logger_without_config_should_drop_everything(self, mock):
        logger = MoncatLogger.of(None)
        logger.info('Hello!')
        logger.event('Event')
        assert not logger.enabled
        assert logger.chain(stage=MoncatLogger.Parts.Stage('s')) is logger
        mock.assert_not_called()

    @patch('moncat.utils.logger.logger.print')
    def test_should_log_event(self, mock):
        logger = MoncatLogger.of(MoncatLogger.Config())
        logger.event('TestEvent')
        mock.assert_called_once_with(PartialOutput('[TestEvent]').with_color())

    @patch('moncat.utils.logger.logger.print')
    def test_should_skip_events(self, mock):
        logger = MoncatLogger.of(MoncatLogger.Config(log_events=False))
        logger.info('Hello!')
        logger.event('TestEvent')
        mock.assert_called_once_with(PartialOutput('Hello!').with_color())

    @pytest.mark.parametrize("log_level", LEVELS)
    @patch('moncat.utils.logger.logger.print')
    @patch('moncat.utils.logger.logger.getLogger')
    def test_logger_should_use_native_logging(self, logging_mock, print_mock, log_level):
        runtime_logger_mock = MagicMock()
        logging_mock.return_value = runtime_logger_mock

        config = MoncatLogger.Config(output=MoncatLogger.Config.Output.LOGGING)
        logger = MoncatLogger.of(config)
        getattr(logger, log_level)('Hello!')

        print_mock.assert_not_called()
        logging_mock.assert_called_once_with('moncat.runtime')
        method = {'warn': 'warning'}.get(log_level, log_level)
        getattr(runtime_logger_mock, method).assert_called_once_with(
            PartialOutput('Hello!').with_color())

    @pytest.mark.parametrize(
        "log_method,level_part",
        [
            ('info', LoggerConfig.Level.INFO.name),
            ('debug', LoggerConfig.Level.DEBUG.name),
            ('warn', LoggerConfig.Level.WARNING.name),
            ('critical', LoggerConfig.Level.CRITICAL.name),
            ('error', LoggerConfig.Level.ERROR.name)
        ]
    )
    @patch('moncat.utils.logger.logger.print')
    def test_should_include_level_part_in_standard_logger(self, print_mock, log_method, level_part):
        logger = MoncatLogger.of(MoncatLogger.Config(colors=False))
        getattr(logger, log_method)('Hello!')
        print_mock.assert_called_once_with(PartialOutput(f'[{level_part}]'))

    @pytest.mark.parametrize("log_level", LEVELS)
    @patch('moncat.utils.logger.logger.print')
    @patch('moncat.utils.logger.logger.getLogger')
    def test_logger_should_use_custom_output(self, logging_mock, print_mock, log_level):
        output_mock = MagicMock()
        logger = MoncatLogger.of(MoncatLogger.Config(output=output_mock))
        getattr(logger, log_level)('Hello!')

        print_mock.assert_not_called()
        logging_mock.assert_not_called()
        output_mock.assert_called_once_with(PartialOutput('Hello!').with_color())

    @patch('moncat.utils.logger.logger.print')
    @patch('moncat.utils.logger.logger.getLogger')
    def test_logger_should_not_fail_with_non_callable_output(self, logging_mock, print_mock):
        logger = MoncatLogger.of(MoncatLogger.Config(output='Non-callable'))
        logger.info('Hello!')
        print_mock.assert_not_called()
        logging_mock.assert_not_called()

    def test_loggers_should_be_chained(self):
        mock = MagicMock()
        config = MoncatLogger.Config(output=mock, colors=False)
        logger = MoncatLogger.of(config, workspace=MoncatLogger.Parts.Workspace('corpus'))
        logger = logger.chain(subject=MoncatLogger.Parts.Subject('unbraids', 'grammar'))
        logger = logger.chain(worker=MoncatLogger.Parts.Worker('contour', 1))

        logger.info('Hello!')

        output = mock.call_args[0][0]
        assert 'corpus:' in output
        assert 'grammar (unbraids)' in output
        assert '<contour#1>' in output
        assert output.endswith('Hello!')

    def test_format_should_be_overriden(self):
        mock = MagicMock()
        config = MoncatLogger.Config(output=mock, format=[])
        logger = MoncatLogger.of(config).chain(stage=MoncatLogger.Parts.Stage('derive'))
        logger.info('Hello!')
        mock.assert_called_once_with('')

    def test_format_should_follow_the_configured_order(self):
        mock = MagicMock()
        config = MoncatLogger.Config(
            output=mock,
            colors=False,
            format=[LoggerConfig.Part.MESSAGE, LoggerConfig.Part.STAGE],
        )
        logger = MoncatLogger.of(config).chain(stage=MoncatLogger.Parts.Stage('derive'))
        logger.info('Hello!')
        mock.assert_called_once_with('Hello! {derive}')
