"""Configuration management module."""

from .limits import DEFAULT_AUT_LIMIT, DEFAULT_ENUMERATION_LIMIT, LIMIT_ENV, enumeration_limit
from .manager import DEFAULTS, ConfigManager, get_config_manager, init_config_manager
from .schema import DEFAULT_SEED, validate_config, validate_patch
