"""
Logger setup.

The library logs through ``logging.getLogger(__name__)``; this module
attaches one handler to the ``planturan`` logger, configured by a
verbosity level and a log file name.
"""
import logging
import sys

_handler = None


def level_from_debug(debug_level):
    """
    Maps an integer verbosity (0 is quiet, 9 is most verbose)
    onto a logging level
    """
    if debug_level <= 0:
        return logging.CRITICAL
    if debug_level == 1:
        return logging.ERROR
    if debug_level == 2:
        return logging.WARNING
    if debug_level == 3:
        return logging.INFO
    return logging.DEBUG


def setup(debug_level=3, log_filename='log'):
    """
    Configure the package logger.

    Args:
        debug_level: verbosity, 0..9
        log_filename: ``'stdout'``, ``'stderr'``, or a file name;
            a bare name without extension gets ``.txt`` appended
    """
    global _handler

    logger = logging.getLogger('planturan')
    if _handler is not None:
        logger.removeHandler(_handler)
        _handler.close()

    if log_filename == 'stdout':
        _handler = logging.StreamHandler(sys.stdout)
    elif log_filename == 'stderr':
        _handler = logging.StreamHandler(sys.stderr)
    else:
        if '.' not in log_filename:
            log_filename += '.txt'
        _handler = logging.FileHandler(log_filename)

    _handler.setFormatter(logging.Formatter(
        '%(asctime)s %(levelname)-7s %(name)s: %(message)s'))
    logger.addHandler(_handler)
    logger.setLevel(level_from_debug(debug_level))
    return logger
