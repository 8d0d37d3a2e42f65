"""
Shipped defaults for the machine, loaded from config/defaults.json
"""

import json
import logging
import os
from dataclasses import dataclass, field

logger = logging.getLogger(__name__)

# Constants
DEFAULT_CONFIG_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "defaults.json")


@dataclass(frozen=True)
class RunDefaults:
    """Limits and trace mode for `run`"""
    max_steps: int = 1_000_000
    max_tracked_states: int = 65_536
    trace: str = "none"


@dataclass(frozen=True)
class GadgetDefaults:
    """Don't-care fills per truth-table row for `gadget verify`"""
    seeds: int = 50


@dataclass(frozen=True)
class OracleDefaults:
    """Path bound and sampling for `oracle`"""
    max_path: int = 3
    programs: int = 1000
    seed: int = 42


@dataclass(frozen=True)
class Settings:
    run: RunDefaults = field(default_factory=RunDefaults)
    gadget: GadgetDefaults = field(default_factory=GadgetDefaults)
    oracle: OracleDefaults = field(default_factory=OracleDefaults)


def load_settings(config_file: str = DEFAULT_CONFIG_FILE) -> Settings:
    """Load defaults from a JSON file; sections or keys left out keep the built-in values"""
    try:
        with open(config_file, "r") as f:
            config = json.load(f)
    except FileNotFoundError:
        logger.error("config file %s not found", config_file)
        raise
    except json.JSONDecodeError as e:
        logger.error("invalid JSON in %s: %s", config_file, e)
        raise

    settings = Settings(
        run=RunDefaults(**config.get("run", {})),
        gadget=GadgetDefaults(**config.get("gadget", {})),
        oracle=OracleDefaults(**config.get("oracle", {})),
    )
    logger.debug("loaded settings from %s", config_file)
    return settings
