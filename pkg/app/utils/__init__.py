"""
Immaculate Hecke Toolkit - Utility Functions
"""
import time
import logging
from functools import wraps

logger = logging.getLogger(__name__)


def timed(label: str = None):
    """Log the wall time of a call at debug level"""
    def decorator(func):
        name = label or func.__qualname__

        @wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = time.perf_counter() - start
                logger.debug(f"{name} took {elapsed:.3f}s")
        return wrapper
    return decorator
