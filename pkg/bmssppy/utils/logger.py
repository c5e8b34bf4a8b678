import os
from logging import Logger as BaseLogger, Formatter, StreamHandler, getLevelName

DEFAULT_FORMATTER = Formatter(
    fmt="[%(asctime)s][%(name)s][%(levelname)s][%(funcName)s] %(message)s"
)
DEFAULT_HANDLER = StreamHandler()
DEFAULT_HANDLER.setFormatter(DEFAULT_FORMATTER)

# Environment override for every package logger
LEVEL_ENV_VAR = "BMSSPPY_LOG_LEVEL"
DEFAULT_LEVEL = "WARNING"

# Every Logger created by the package, so the CLI can retune them at once
_REGISTRY: list = []


def _level_from_env() -> int:
    level = getLevelName(os.environ.get(LEVEL_ENV_VAR, DEFAULT_LEVEL).upper())
    return level if isinstance(level, int) else getLevelName(DEFAULT_LEVEL)


class Logger(BaseLogger):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.addHandler(DEFAULT_HANDLER)
        self.setLevel(_level_from_env())
        _REGISTRY.append(self)

    @staticmethod
    def set_global_level(level: int):
        """
        Set the level of every logger created through this class.

        Args:
            level (int): A `logging` level such as `logging.DEBUG`.
        """
        for logger in _REGISTRY:
            logger.setLevel(level)
