import logging
import os

LOG_FORMAT = "%(name)s:%(levelname)s:%(message)s"


def configure_logging(level=None):
    """Configure root logging once; level falls back to CHARPOLY_LOG_LEVEL, then WARNING."""
    if level is None:
        level = os.environ.get("CHARPOLY_LOG_LEVEL", "WARNING")
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(format=LOG_FORMAT)
    logging.getLogger().setLevel(level)
    return level
