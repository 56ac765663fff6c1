"""YAML/JSON experiment configuration loader and persister."""

import copy
import yaml
from pathlib import Path
from typing import Any, Dict

from .schema import DEFAULT_SEED, validate_config, validate_patch

DEFAULTS: Dict[str, Any] = {
    "ring": {"kind": "integers"},
    "group": {"n": 4, "set_i": [2, 3], "quotient": "none"},
    "automorphism": [],
    "params": {
        "seed": DEFAULT_SEED,
        "samples": 200,
        "bound": 5,
        "exponent_bound": 1,
        "count": 100,
        "limit": None,
        "aut_limit": 200,
        "eps": 0,
        "alpha": "id",
        "d_c": None,
        "map": "psi_d2_plus",
    },
    "output": {"out_dir": "reports", "format": "both", "name": None},
}

# Sections replaced wholesale by a patch instead of merged key by key
_ATOMIC_SECTIONS = ("ring", "automorphism")


class ConfigManager:
    """Manages experiment configuration layered over built-in defaults."""

    def __init__(self, config_path: Path | None = None):
        """Initialize config manager.

        Args:
            config_path: Path to a YAML or JSON config file, or None for defaults only
        """
        self.config_path = Path(config_path) if config_path is not None else None
        self._config: Dict[str, Any] = copy.deepcopy(DEFAULTS)
        self._load()

    def _load(self) -> None:
        """Load configuration from file and merge it onto the defaults."""
        if self.config_path is None:
            validate_config(self._config)
            return
        if not self.config_path.exists():
            raise FileNotFoundError(f"Config file not found: {self.config_path}")

        # JSON is a subset of YAML
        with open(self.config_path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f) or {}
        if not isinstance(loaded, dict):
            raise ValueError(f"Config file {self.config_path} must contain a mapping")

        validate_patch(loaded)
        self._apply_patch(self._config, loaded)
        validate_config(self._config)

    def get_config(self) -> Dict[str, Any]:
        """Get current configuration.

        Returns:
            Copy of current configuration dictionary
        """
        return copy.deepcopy(self._config)

    def apply_overrides(self, patch: Dict[str, Any]) -> None:
        """Apply a patch (typically from command-line flags) on top of the loaded config.

        Args:
            patch: Dictionary with nested keys to update (e.g., {"params": {"seed": 7}})

        Raises:
            ValueError: If validation fails
        """
        validate_patch(patch)
        self._apply_patch(self._config, patch)
        validate_config(self._config)

    def _apply_patch(self, target: Dict[str, Any], patch: Dict[str, Any], top: bool = True) -> None:
        """Recursively apply patch to target dictionary."""
        for key, value in patch.items():
            atomic = top and key in _ATOMIC_SECTIONS
            if not atomic and key in target and isinstance(target[key], dict) and isinstance(value, dict):
                self._apply_patch(target[key], value, top=False)
            else:
                target[key] = copy.deepcopy(value)

    def write(self, path: Path | None = None) -> Path:
        """Write config to disk atomically using temp file + rename."""
        target = Path(path) if path is not None else self.config_path
        if target is None:
            raise ValueError("No config path to write to")
        temp_path = target.with_suffix(target.suffix + ".tmp")

        try:
            with open(temp_path, "w", encoding="utf-8") as f:
                yaml.safe_dump(self._config, f, default_flow_style=False, sort_keys=False, allow_unicode=True)
            temp_path.replace(target)
        except Exception:
            if temp_path.exists():
                temp_path.unlink()
            raise
        return target


# Global instance (initialized by the CLI)
_config_manager: ConfigManager | None = None


def get_config_manager() -> ConfigManager:
    """Get the global config manager instance."""
    if _config_manager is None:
        raise RuntimeError("Config manager not initialized. Call init_config_manager() first.")
    return _config_manager


def init_config_manager(config_path: Path | None = None) -> ConfigManager:
    """Initialize the global config manager.

    Args:
        config_path: Path to a config file, or None for defaults
    """
    global _config_manager
    _config_manager = ConfigManager(config_path)
    return _config_manager
