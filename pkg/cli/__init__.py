"""
CLI Package

Command-line driver: code inspection, one-shot encoding and decoding,
simulation sweeps with recipes and run manifests.
"""

__version__ = "0.1.0"

from .commands import build_parser, main
from .config_file import load_recipe, validate_recipe
from .manifest import RunManifest

__all__ = [
    '__version__',
    'build_parser',
    'main',
    'load_recipe',
    'validate_recipe',
    'RunManifest',
]
