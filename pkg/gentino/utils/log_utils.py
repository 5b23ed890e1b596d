import sys
import uuid
import logging

DEFAULT_LOG_FMT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def get_logger(name: str, log_path=None, log_fmt=DEFAULT_LOG_FMT, console=True, level=logging.INFO):
    """
    Get a logger writing to stderr and, optionally, to a file.

    stdout is left alone: the command line prints its JSON results there.

    :param name: (str) logger name
    :param log_path: (str | pathlib.Path | None) log file path
    :param log_fmt: (str) record format
    :param console: (bool) whether to attach a stderr handler
    :param level: (int) logging level
    :return: (logging.Logger)
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    if log_path is not None:
        if not any(isinstance(hdlr, logging.FileHandler) and hdlr.baseFilename == str(log_path) for hdlr in logger.handlers):
            fh = logging.FileHandler(log_path)
            fh.setLevel(level)
            fh.setFormatter(logging.Formatter(log_fmt))
            logger.addHandler(fh)

    if console:
        if not any(type(hdlr) is logging.StreamHandler for hdlr in logger.handlers):
            ch = logging.StreamHandler(sys.stderr)
            ch.setLevel(level)
            ch.setFormatter(logging.Formatter(log_fmt))
            logger.addHandler(ch)

    return logger


def get_console_only_logger(name: str, log_fmt=DEFAULT_LOG_FMT, level=logging.INFO):
    logger = get_logger(name, log_path=None, log_fmt=log_fmt, console=True, level=level)
    return logger


def file_only_logger(name: str, log_path, log_fmt=DEFAULT_LOG_FMT, level=logging.INFO):
    logger = get_logger(name, log_path=log_path, log_fmt=log_fmt, console=False, level=level)
    return logger


class LoggingMixin:
    """
    Per-instance logger, named after the class and a fresh uuid.

    Subclasses call ``self._init_logger(log_path)`` in ``__init__`` and then log with ``self._log``.
    """

    def _init_logger(self, log_path=None, level=logging.INFO):
        """
        :param log_path: (str | pathlib.Path | None) log file path, if None, only log to the console
        :param level: (int) logging level
        :return: None
        """
        self._uuid = str(uuid.uuid4())
        if log_path is None:
            self._logger = get_console_only_logger(self._logger_name, level=level)
        else:
            self._logger = file_only_logger(self._logger_name, log_path=log_path, level=level)

    def _log(self, message: str, level=logging.INFO, **kwargs):
        self._logger.log(level, message, **kwargs)

    def _fail(self, message: str, exc_type=ValueError):
        """Log ``message`` at ERROR level and raise ``exc_type(message)``."""
        self._log(message, level=logging.ERROR)
        raise exc_type(message)

    @property
    def _logger_name(self):
        return f"{self.__class__.__name__}_{self._uuid}_logger"


__all__ = ['DEFAULT_LOG_FMT', 'get_logger', 'get_console_only_logger', 'file_only_logger', 'LoggingMixin']
