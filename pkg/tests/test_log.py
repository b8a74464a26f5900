import logging
import warnings

import pytest
from loguru import logger

from src.log import InterceptHandler, setup_logger


@pytest.fixture
def records():
    setup_logger()
    captured = []
    sink_id = logger.add(captured.append, level='DEBUG', format='{message}')
    yield captured
    logger.remove(sink_id)
    logging.captureWarnings(False)


class TestSetupLogger:
    def test_root_handler_is_intercepting(self, records):
        assert any(isinstance(handler, InterceptHandler) for handler in logging.root.handlers)

    def test_stdlib_record_reaches_loguru(self, records):
        logging.getLogger('networkx').info('граф построен')
        message = records[-1]
        assert message.strip() == 'граф построен'
        assert message.record['level'].name == 'INFO'
        assert message.record['extra']['source'] == 'networkx'
        assert message.record['name'] == __name__

    def test_custom_level_keeps_number(self, records):
        logging.getLogger('third_party').log(15, 'промежуточный уровень')
        assert records[-1].record['level'].no == 15

    def test_warnings_are_captured(self, records):
        warnings.showwarning(DeprecationWarning('устаревший вызов'), DeprecationWarning, 'lib.py', 7)
        message = records[-1]
        assert 'устаревший вызов' in message
        assert message.record['level'].name == 'WARNING'
        assert message.record['extra']['source'] == 'py.warnings'

    def test_exception_info_is_kept(self, records):
        try:
            raise ValueError('сбой')
        except ValueError:
            logging.getLogger('third_party').exception('ошибка в библиотеке')
        assert records[-1].record['exception'].type is ValueError
