from __future__ import annotations

import logging
import os

TRACE = 5
logging.addLevelName(TRACE, "TRACE")

logger = logging.getLogger("zsramsey")
logger.addHandler(logging.NullHandler())

_LEVELS = {"quiet": logging.WARNING, "info": logging.INFO, "trace": TRACE}


def trace(msg, *args):
    if logger.isEnabledFor(TRACE):
        logger.log(TRACE, msg, *args)


def configure_from_env(env_var: str = "ZSRAMSEY_LOG") -> None:
    """Attach a stderr handler at the level named by ``$ZSRAMSEY_LOG``."""
    name = os.environ.get(env_var, "quiet").strip().lower()
    level = _LEVELS.get(name, logging.WARNING)
    logger.setLevel(level)
    if not any(getattr(h, "_zsramsey", False) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
        handler._zsramsey = True
        logger.addHandler(handler)
