import os
import sys
from typing import Any, Callable, Optional

from loguru import logger

from .constants import DEBUG_ENV, LOG_FILE_ENV, SETTINGS_PREFIX
from . import __version__


def _get_debug_description():
    return "(debug=" + DEBUG_ENV + ")"


title_prefix = "checksieve"


def app_title(include_version: bool):
    title = title_prefix

    if include_version:
        title += f" v{__version__}"
    if DEBUG_ENV:
        title += _get_debug_description()

    return title


class EnvSettings:
    '''Settings read from CHECKSIEVE_* environment variables, queried like QSettings'''

    def __init__(self, prefix: str) -> None:
        self.prefix = prefix

    def key_name(self, key: str) -> str:
        return f"{self.prefix}_{key.upper()}"

    def value(self, key: str, default: Any = None,
              type: Optional[Callable[[str], Any]] = None) -> Any:  # pylint: disable=redefined-builtin
        raw = os.environ.get(self.key_name(key))
        if raw is None or raw.strip() == "":
            return default
        if type is None:
            return raw
        try:
            return type(raw.strip())
        except ValueError:
            logger.warning(f"Ignoring {self.key_name(key)}={raw!r}, using default {default!r}")
            return default


settings = EnvSettings(SETTINGS_PREFIX)

logger.remove()
# sys.stderr is resolved per message, not at import
logger.add(lambda message: sys.stderr.write(message),
           level="DEBUG" if DEBUG_ENV else "WARNING",
           format="<level>{level}</level>: {message}",
           colorize=False)
if LOG_FILE_ENV:
    logger.add(LOG_FILE_ENV, level="DEBUG")
