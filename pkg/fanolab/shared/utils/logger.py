import logging
import sys

from pythonjsonlogger import jsonlogger

from fanolab.shared.config.config import settings

logger = logging.getLogger("fanolab")

if not logger.handlers:
    # stdout belongs to the CLI
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(jsonlogger.JsonFormatter("%(asctime)s %(levelname)s %(name)s %(module)s %(message)s"))
    logger.addHandler(handler)
    logger.propagate = False

logger.setLevel(settings.loglevel)
