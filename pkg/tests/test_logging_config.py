"""
Channel loggers, JSON records and layered configuration
"""
import io
import json
import logging
import sys

import pytest

from torichms.console import artisan
from torichms.exceptions import CheckFailedException, FanValidationException, InputException, handle_cli_exceptions
from torichms.logging import ContextFormatter, JSONFormatter, LoggerConfig, getLogger
from torichms.support import Config, EnvHelper, Storage


class TestGetLogger:
    def test_module_names_are_rerooted(self):
        assert getLogger('torichms.toricdata.cone').name == 'hms.toricdata.cone'

    def test_default_channel(self):
        assert getLogger().name == 'hms'
        assert getLogger('hms').name == 'hms'
        assert getLogger('stray').name == 'hms'


class TestJSONFormatter:
    def test_extra_fields_are_kept(self):
        record = logging.LogRecord('hms.checks', logging.WARNING, __file__, 10, "check %s failed", ('molien',), None)
        record.cone = [0, 1, 2]
        data = json.loads(JSONFormatter().format(record))
        assert data['message'] == 'check molien failed'
        assert data['level'] == 'WARNING'
        assert data['cone'] == [0, 1, 2]

    def test_text_lines_carry_context(self):
        record = logging.LogRecord('hms.checks', logging.WARNING, __file__, 10, "check failed", (), None)
        record.check = 'molien'
        record.rms = [3, 1, 1]
        line = ContextFormatter().format(record)
        assert line.endswith('check failed | check=molien rms=[3, 1, 1]')
        assert 'hms.checks WARNING' in line


class TestLoggerConfig:
    def test_levels(self):
        assert LoggerConfig.get_level_by_environment('testing') == logging.ERROR
        assert LoggerConfig.get_level_by_environment('Production') == logging.WARNING
        assert LoggerConfig.get_level_by_environment('anything') == logging.INFO

    def test_file_channel(self):
        logger = LoggerConfig.setup_logger('hms.test_channel', format_type='json')
        try:
            logger.error("label mismatch", extra={'order': 3})
            for handler in logger.handlers:
                handler.flush()
            line = Storage.logs('hms.test_channel.log').read_text(encoding='utf-8').splitlines()[-1]
            record = json.loads(line)
            assert record['message'] == 'label mismatch'
            assert record['order'] == 3
        finally:
            for handler in list(logger.handlers):
                handler.close()
                logger.removeHandler(handler)

    def test_channels_from_config(self):
        loggers = LoggerConfig.setup_channels()
        try:
            assert [lg.name for lg in loggers] == ['hms']
            assert loggers[0].propagate is False
        finally:
            for lg in loggers:
                for handler in list(lg.handlers):
                    handler.close()
                    lg.removeHandler(handler)
                lg.propagate = True


class TestConfig:
    def test_module_defaults(self):
        assert Config.get('hms.truncate') == 30
        assert Config.get('hms.placement') == 'auto'
        assert Config.get('hms.nothing', 'fallback') == 'fallback'
        assert Config.get('nomodule.key', 7) == 7

    def test_runtime_override_is_case_insensitive(self):
        Config.set('HMS.Format', 'json')
        assert Config.get('hms.format') == 'json'
        assert Config.has('hms.format')
        Config.clear_runtime_overrides()
        assert Config.get('hms.format') == 'text'

    def test_environment_after_reload(self, monkeypatch):
        monkeypatch.setenv('HMS_TRUNCATE', '12')
        Config.reload('hms')
        try:
            assert Config.get('hms.truncate') == 12
        finally:
            monkeypatch.delenv('HMS_TRUNCATE')
            Config.reload('hms')
        assert Config.get('hms.truncate') == 30

    def test_nested_lookup(self):
        assert Config.get('app.logging_channels.hms.name') == 'hms'
        assert Config.get('app.logging_channels.hms.missing', 0) == 0
        assert Config.get('hms.truncate.deeper', 'x') == 'x'

    def test_choice(self):
        assert Config.choice('hms.placement', ('auto', 'dumbbell')) == 'auto'
        assert Config.choice('hms.placement', ('auto', 'dumbbell'), 'dumbbell') == 'dumbbell'
        with pytest.raises(InputException, match="placement must be one of auto, dumbbell"):
            Config.choice('hms.placement', ('auto', 'dumbbell'), 'spiral')

    def test_malformed_integer_variable(self, monkeypatch):
        monkeypatch.setenv('HMS_TRUNCATE', 'abc')
        with pytest.raises(InputException, match="HMS_TRUNCATE must be an integer, got 'abc'") as excinfo:
            EnvHelper.get_int('HMS_TRUNCATE', 30)
        assert excinfo.value.exit_code == 2
        monkeypatch.setenv('HMS_TRUNCATE', ' 12 ')
        assert EnvHelper.get_int('HMS_TRUNCATE', 30) == 12
        monkeypatch.delenv('HMS_TRUNCATE')
        assert EnvHelper.get_int('HMS_TRUNCATE', 30) == 30

    def test_config_load_surfaces_malformed_integer(self, monkeypatch):
        assert Config.get('hms.concurrency') == 4
        monkeypatch.setenv('HMS_CONCURRENCY', 'many')
        try:
            with pytest.raises(InputException, match='HMS_CONCURRENCY must be an integer'):
                Config.reload('hms')
        finally:
            monkeypatch.delenv('HMS_CONCURRENCY')
            Config.reload('hms')
        assert Config.get('hms.concurrency') == 4

    def test_malformed_variable_exits_with_input_error(self, monkeypatch, tmp_path, capsys):
        monkeypatch.chdir(tmp_path)
        monkeypatch.setattr(sys, 'excepthook', sys.excepthook)
        monkeypatch.setenv('HMS_LOG_MAX_BYTES', 'lots')
        monkeypatch.setattr(
            artisan.LoggerConfig, 'setup_channels', lambda: EnvHelper.get_int('HMS_LOG_MAX_BYTES', 0),
        )
        with pytest.raises(SystemExit) as excinfo:
            artisan.main(['hms', 'affine', '--r=1', '--m=1', '--s=0', '--truncate=3'])
        assert excinfo.value.code == 2
        assert 'HMS_LOG_MAX_BYTES must be an integer' in capsys.readouterr().err


class TestCliErrors:
    def test_input_error(self):
        stream = io.StringIO()
        assert handle_cli_exceptions(InputException("bad fan"), stream) == 2
        assert 'INPUT ERROR' in stream.getvalue()

    def test_validation_errors_are_listed(self):
        stream = io.StringIO()
        error = FanValidationException({'triangles[0]': ['degenerate triangle (zero area)']})
        assert handle_cli_exceptions(error, stream) == 2
        assert 'triangles[0]: degenerate triangle' in stream.getvalue()

    def test_check_failure_shows_counterexample(self):
        stream = io.StringIO()
        error = CheckFailedException("series differ", counterexample={'weight': 4})
        assert handle_cli_exceptions(error, stream) == 1
        assert 'weight = 4' in stream.getvalue()

    def test_internal_error(self):
        stream = io.StringIO()
        assert handle_cli_exceptions(RuntimeError("boom"), stream) == 1
        assert 'INTERNAL ERROR' in stream.getvalue()
