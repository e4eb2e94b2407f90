"""
Configuration management module for the q-congruence toolkit.
"""

import os
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

ORDER_CAP_ENV = 'QC_ORDER_CAP'


class Config:
    """Configuration manager for the q-congruence toolkit."""

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration manager.

        Args:
            config_path: Path to configuration file
        """
        load_dotenv()
        self.config_path = config_path or self._get_default_config_path()
        self._config_data: Dict[str, Any] = {}
        self.load_config()

    def _get_default_config_path(self) -> str:
        """Get default configuration file path."""
        if 'QC_TOOLKIT_CONFIG' in os.environ:
            return os.environ['QC_TOOLKIT_CONFIG']

        home_config = Path.home() / '.qc_toolkit' / 'config.yaml'
        if home_config.exists():
            return str(home_config)

        return str(Path(__file__).parent.parent.parent.parent / 'config' / 'default.yaml')

    def load_config(self) -> None:
        """Load configuration from file."""
        try:
            with open(self.config_path, 'r', encoding='utf-8') as file:
                self._config_data = yaml.safe_load(file) or {}
            self._process_env_vars()
        except FileNotFoundError:
            print(f"Warning: Config file {self.config_path} not found. Using defaults.")
            self._config_data = {}
        except yaml.YAMLError as e:
            print(f"Warning: Error parsing config file {self.config_path}: {e}")
            self._config_data = {}

    def _process_env_vars(self) -> None:
        """Replace ${VAR_NAME} strings with environment values."""
        def replace_env_vars(obj):
            if isinstance(obj, dict):
                return {key: replace_env_vars(value) for key, value in obj.items()}
            if isinstance(obj, list):
                return [replace_env_vars(item) for item in obj]
            if isinstance(obj, str):
                return re.sub(r'\$\{([^}]+)\}', lambda m: os.getenv(m.group(1), m.group(0)), obj)
            return obj

        self._config_data = replace_env_vars(self._config_data)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value by key (supports dot notation).

        Args:
            key: Configuration key (e.g., 'verification.lemma_order')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        value = self._config_data
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """Set configuration value by key (supports dot notation)."""
        keys = key.split('.')
        node = self._config_data
        for k in keys[:-1]:
            node = node.setdefault(k, {})
        node[keys[-1]] = value

    def get_int(self, key: str, default: int) -> int:
        return int(self.get(key, default))

    def order_cap(self) -> Optional[int]:
        """Order cap from $QC_ORDER_CAP, falling back to engine.order_cap."""
        raw = os.getenv(ORDER_CAP_ENV) or self.get('engine.order_cap')
        if raw in (None, '', 'none'):
            return None
        try:
            return int(raw)
        except (TypeError, ValueError):
            raise ValueError(f"{ORDER_CAP_ENV} must be an integer, got {raw!r}")

    def cap_order(self, order: int) -> int:
        """Apply the order cap to a requested truncation order."""
        cap = self.order_cap()
        return order if cap is None else min(order, cap)


# Global configuration instance
config = Config()
