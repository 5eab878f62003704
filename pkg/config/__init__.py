"""
Immaculate Hecke Toolkit - Configuration Package
"""
from config.settings import config, Config, DevelopmentConfig, ProductionConfig, TestingConfig

__all__ = ['config', 'Config', 'DevelopmentConfig', 'ProductionConfig', 'TestingConfig']
