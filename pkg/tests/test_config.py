import logging

from config.logger import setup_logging
from src.exceptions import ParseError, RleDtwError, ValidationError
from src.rle_core import parse_rle

import pytest


def test_parse_error_carries_line():
    error = ParseError("malformed run", line=4)
    assert str(error) == "line 4: malformed run"
    assert error.line == 4
    assert str(ParseError("empty")) == "empty"


def test_errors_are_value_errors():
    for cls in (ParseError, ValidationError):
        assert issubclass(cls, RleDtwError)
        assert issubclass(cls, ValueError)


def test_parse_rle_reports_line():
    with pytest.raises(ParseError, match="line 3"):
        parse_rle("1.0:2 oops", line=3)


def test_setup_logging_returns_package_logger(tmp_path, monkeypatch):
    monkeypatch.setattr('config.logger.LOG_DIR', tmp_path / 'logs')
    logger = setup_logging('debug')
    assert logger.name == 'rledtw'
    assert isinstance(logger, logging.Logger)
    assert (tmp_path / 'logs').is_dir()
