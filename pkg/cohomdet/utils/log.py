import logging
import sys

from cohomdet.core.consts import LOGGER_NAME


def always_log_info(msg):
    """Method to ALWAYS log something as info, regardless of the global log level

    Args:
        msg(str): The message to log

    Returns:
        None
    """
    logger = logging.getLogger(LOGGER_NAME)
    current_level = logger.getEffectiveLevel()
    logger.setLevel(logging.INFO)
    logger.info(msg)
    logger.setLevel(current_level)


def setup_logging(log_level="warning", log_file=None):
    """Method to configure the package logger

    Results go to stdout, so log records default to stderr.

    Args:
        log_level(str): critical, error, warning, info or debug
        log_file(str): Optional path of a file to append log records to

    Returns:
        (logging.Logger): the configured logger
    """
    level = logging.getLevelName(log_level.upper())
    if not isinstance(level, int):
        raise ValueError("Unknown log level: {}".format(log_level))

    if log_file:
        handler = logging.FileHandler(log_file, mode='a')
    else:
        handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)-8s %(message)s', datefmt='%m-%d %H:%M'))

    logger = logging.getLogger(LOGGER_NAME)
    for old in list(logger.handlers):
        logger.removeHandler(old)
        old.close()
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
