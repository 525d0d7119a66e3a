"""
Recipe files - TOML sweep descriptions checked key by key.

    [code]     m, r, prune, prune_order
    [decoder]  kind, list_size (integer or list of integers), branch, recalc
    [channel]  kind
    [sweep]    snr, snr_range, seed, workers, min_word_errors, max_trials,
               oracle, batch_size, target_wer
    [output]   path, format

Every section is optional. Unknown sections and keys are rejected.
"""

import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Dict

from rm_code.errors import ConfigError

logger = logging.getLogger(__name__)

_NUMBER = (int, float)

SCHEMA: Dict[str, Dict[str, tuple]] = {
    'code': {
        'm': (int,),
        'r': (int,),
        'prune': (int,),
        'prune_order': (list,),
    },
    'decoder': {
        'kind': (str,),
        'list_size': (int, list),
        'branch': (int,),
        'recalc': (str,),
    },
    'channel': {
        'kind': (str,),
    },
    'sweep': {
        'snr': (list,) + _NUMBER,
        'snr_range': (list,),
        'seed': (int,),
        'workers': (int,),
        'min_word_errors': (int,),
        'max_trials': (int,),
        'oracle': (bool,),
        'batch_size': (int,),
        'target_wer': _NUMBER,
    },
    'output': {
        'path': (str,),
        'format': (str,),
    },
}


def validate_recipe(data: Dict[str, Any]) -> Dict[str, Dict[str, Any]]:
    """
    Check a parsed recipe against SCHEMA.

    Returns:
        Dictionary with one (possibly empty) dictionary per known section

    Raises:
        ConfigError: Naming the first unknown or mistyped key
    """
    recipe: Dict[str, Dict[str, Any]] = {section: {} for section in SCHEMA}

    for section, values in data.items():
        if section not in SCHEMA:
            raise ConfigError(f"Unknown section [{section}]")
        if not isinstance(values, dict):
            raise ConfigError(f"[{section}] must be a table")

        for key, value in values.items():
            allowed = SCHEMA[section].get(key)
            if allowed is None:
                raise ConfigError(f"Unknown key '{section}.{key}'")
            # bool is an int subclass; only accept it where bool is declared
            if isinstance(value, bool) and bool not in allowed:
                raise ConfigError(f"Key '{section}.{key}' has invalid value {value!r}")
            if not isinstance(value, allowed):
                raise ConfigError(f"Key '{section}.{key}' has invalid value {value!r}")
            recipe[section][key] = value

    return recipe


def load_recipe(path) -> Dict[str, Dict[str, Any]]:
    """
    Load and validate a recipe file.

    Raises:
        ConfigError: If the file is not valid TOML or holds unknown keys
    """
    path = Path(path)
    try:
        with open(path, 'rb') as f:
            data = tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"{path}: {e}") from e

    logger.info(f"Loaded recipe {path}")
    return validate_recipe(data)
