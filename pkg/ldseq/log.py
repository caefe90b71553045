"""
Logging Setup
Single stderr handler, JSON records by default
"""
import logging
import sys

from pythonjsonlogger import jsonlogger

from ldseq.config import Settings

_HANDLER_NAME = "ldseq-stderr"


def setup_logging(settings: Settings) -> logging.Logger:
    """
    Configure the package logger from settings.

    Calling it again replaces the handler, so the CLI can re-apply a
    --log-level override after settings were loaded.
    """
    logger = logging.getLogger("ldseq")
    logger.setLevel(settings.log_level)
    logger.propagate = False

    for handler in list(logger.handlers):
        if handler.get_name() == _HANDLER_NAME:
            logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(_HANDLER_NAME)
    if settings.log_format == "json":
        handler.setFormatter(
            jsonlogger.JsonFormatter("%(asctime)s %(levelname)s %(name)s %(message)s")
        )
    else:
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
    logger.addHandler(handler)
    return logger
