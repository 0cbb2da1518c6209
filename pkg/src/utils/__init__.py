"""
Utility functions for the core-motzkin library.

Contains settings, application initialization and SVG helpers.
"""

from src.utils.config import Settings, get_settings
from src.utils.init import init_application, create_example_env_file

__all__ = [
    'Settings',
    'get_settings',
    'init_application',
    'create_example_env_file'
]
