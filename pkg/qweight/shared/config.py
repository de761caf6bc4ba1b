# Area: Shared
# PRD: docs/prd-qweight.md
"""Configuration loading.

Settings come from js/config.json (path overridable with QWEIGHT_CONFIG),
after .env has been loaded into the environment. QWEIGHT_CATALOG and
QWEIGHT_LOG_LEVEL win over the file.
"""
import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Optional

from dotenv import load_dotenv

from qweight.shared.errors import ConfigError

PROJECT_ROOT = Path(__file__).resolve().parents[2]
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "js" / "config.json"
SHIPPED_CATALOG = Path(__file__).resolve().parents[1] / "feasibility" / "data" / "catalog.jsonl"
FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class OracleLimits:
    """Budgets for the brute-force oracle."""
    max_group_exponent: int = 24
    max_group_elements: int = 1 << 20
    shadow_direct_max_n: int = 16
    dense_max_dimension: int = 81
    dense_tolerance: float = 1e-9


@dataclass(frozen=True)
class Settings:
    catalog_path: Path = SHIPPED_CATALOG
    oracle: OracleLimits = field(default_factory=OracleLimits)
    default_format: str = "table"
    log_level: str = "WARNING"
    color: bool = True

    def with_catalog(self, path: Optional[str]) -> "Settings":
        if not path:
            return self
        return replace(self, catalog_path=Path(path))


def _section(data: dict, name: str) -> dict:
    value = data.get(name, {})
    if not isinstance(value, dict):
        raise ConfigError(f"section '{name}' must be an object")
    return {k: v for k, v in value.items() if not k.startswith("_")}


def _oracle_limits(raw: dict[str, Any]) -> OracleLimits:
    try:
        return OracleLimits(**raw)
    except TypeError as e:
        raise ConfigError(f"oracle: {e}") from e


def settings_from_dict(data: dict) -> Settings:
    """Build Settings from a parsed config document."""
    catalog = _section(data, "catalog")
    output = _section(data, "output")
    logging_cfg = _section(data, "logging")
    fmt = output.get("default_format", "table")
    if fmt not in FORMATS:
        raise ConfigError(f"output.default_format must be one of {FORMATS}, got {fmt!r}")
    catalog_path = catalog.get("path") or ""
    return Settings(
        catalog_path=Path(catalog_path) if catalog_path else SHIPPED_CATALOG,
        oracle=_oracle_limits(_section(data, "oracle")),
        default_format=fmt,
        log_level=str(logging_cfg.get("level", "WARNING")).upper(),
        color=bool(logging_cfg.get("color", True)),
    )


def load_settings(config_path: Optional[Path] = None) -> Settings:
    """Load .env, then the JSON config, then environment overrides."""
    load_dotenv(PROJECT_ROOT / ".env")
    path = config_path or Path(os.environ.get("QWEIGHT_CONFIG", DEFAULT_CONFIG_PATH))
    settings = Settings()
    if path.exists():
        try:
            with open(path) as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read {path}: {e}") from e
        settings = settings_from_dict(data)
    settings = settings.with_catalog(os.environ.get("QWEIGHT_CATALOG"))
    level = os.environ.get("QWEIGHT_LOG_LEVEL")
    if level:
        settings = replace(settings, log_level=level.upper())
    if os.environ.get("NO_COLOR"):
        settings = replace(settings, color=False)
    return settings


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide settings, loaded on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def set_settings(settings: Optional[Settings]) -> None:
    """Install explicit settings (None resets to lazy loading)."""
    global _settings
    _settings = settings
