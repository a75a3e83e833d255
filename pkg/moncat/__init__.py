from .config_reader import ConfigReader, SessionConfig

__version__ = '0.1.0'
