"""
Immaculate Hecke Toolkit - Configuration
"""
import os
from dotenv import load_dotenv

load_dotenv()


def _optional_int(name: str):
    value = os.getenv(name, '').strip()
    return int(value) if value else None


class Config:
    """Base configuration"""

    # Flask
    JSON_SORT_KEYS = False

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')

    # Enumeration limits
    MAX_N = int(os.getenv('IMMACULATE_MAX_N', 9))

    # Number of variables for identity checks (None means "use n")
    DEFAULT_M = _optional_int('IMMACULATE_DEFAULT_M')


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'DEBUG')


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    LOG_LEVEL = 'WARNING'
    MAX_N = 8
    DEFAULT_M = None


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}
