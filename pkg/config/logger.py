"""
Logging configuration for the run-length DTW toolkit.
Sets up logging with file and console output.
"""

import os
import logging
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / '.env'
load_dotenv(dotenv_path=env_path)

# Logging Configuration
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
LOG_DIR = Path(os.getenv('LOG_DIR', Path(__file__).parent.parent / 'logs'))


def setup_logging(level: str = None):
    """
    Set up logging configuration.

    Console output goes to stderr so that command results on stdout stay
    machine readable.

    Args:
        level: Overrides LOG_LEVEL when given (e.g. "DEBUG")

    Returns:
        The toolkit's root logger
    """
    log_level = getattr(logging, (level or LOG_LEVEL).upper(), logging.INFO)

    handlers = [logging.StreamHandler()]
    try:
        LOG_DIR.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(LOG_DIR / 'rledtw.log'))
    except OSError as e:
        logging.getLogger(__name__).warning(f"File logging disabled, cannot use {LOG_DIR}: {e}")

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )

    return logging.getLogger('rledtw')
