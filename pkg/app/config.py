"""
Configuration module for the DNA strand codec.
Supports multiple environments: development, testing, production.
"""

import os


class Config:
    """Base configuration class with common settings."""

    DEBUG = False
    TESTING = False

    # Logging settings
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    LOG_FILE = os.environ.get('LOG_FILE', 'logs/dnacodec.log')

    # Code construction settings
    DEFAULT_STRAND_LENGTH = int(os.environ.get('DEFAULT_STRAND_LENGTH', 10))
    MIN_STRAND_LENGTH = 6

    # Codebook analysis settings
    CODEBOOK_CAP = int(os.environ.get('CODEBOOK_CAP', 2 ** 20))
    ANALYSIS_BLOCK_SIZE = int(os.environ.get('ANALYSIS_BLOCK_SIZE', 256))
    ANALYSIS_WORKERS = int(os.environ.get('ANALYSIS_WORKERS', 1))

    # Channel simulation settings
    DEFAULT_SEED = int(os.environ.get('DEFAULT_SEED', 0))
    DEFAULT_ERROR_MIX = os.environ.get('DEFAULT_ERROR_MIX', 'none:1.0')


class DevelopmentConfig(Config):
    """Development environment configuration."""

    DEBUG = True

    # More verbose logging in development
    LOG_LEVEL = 'DEBUG'


class TestingConfig(Config):
    """Testing environment configuration."""

    TESTING = True
    LOG_LEVEL = 'WARNING'

    # Small scans for faster tests
    CODEBOOK_CAP = 2 ** 14
    ANALYSIS_BLOCK_SIZE = 64


class ProductionConfig(Config):
    """Production environment configuration."""

    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')
    ANALYSIS_WORKERS = int(os.environ.get('ANALYSIS_WORKERS', os.cpu_count() or 1))


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig
}


def get_config(config_name=None):
    """
    Get configuration object based on environment name.

    Args:
        config_name: Name of the configuration ('development', 'testing', 'production')
                    If None, uses DNACODEC_ENV environment variable or 'default'

    Returns:
        Configuration class object

    Raises:
        ValueError: If production config is requested without LOG_FILE
    """
    if config_name is None:
        config_name = os.environ.get('DNACODEC_ENV', 'default')

    config_class = config.get(config_name, config['default'])

    # Production always writes a rotating log file
    if config_name == 'production' and not os.environ.get('LOG_FILE'):
        raise ValueError("LOG_FILE environment variable must be set in production")

    return config_class
