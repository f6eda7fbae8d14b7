"""Diagnostics configuration.

Routes the package loggers to stderr so that stdout carries only command
output.
"""
import logging
import sys

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbose: bool = False) -> None:
    """Attach a stderr handler to the rspin logger.

    This is a side effect on the logging tree; calling it again replaces the
    previous handler.

    Args:
        verbose: INFO level when set, WARNING otherwise
    """
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger = logging.getLogger("rspin")
    logger.handlers[:] = [handler]
    logger.setLevel(logging.INFO if verbose else logging.WARNING)
    logger.propagate = False
