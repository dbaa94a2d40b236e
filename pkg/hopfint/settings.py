"""Persistent user settings stored in ~/.config/hopfint/settings.json."""
import json
import logging
from pathlib import Path

from hopfint.errors import InvalidInput

log = logging.getLogger(__name__)

_SETTINGS_FILE = Path.home() / ".config" / "hopfint" / "settings.json"

_DEFAULTS: dict = {
    "seed": 1729,               # isomorphism-certificate search
    "iso_attempts": 32,         # random combinations tried before "inconclusive"
    "order_bound_factor": 4,    # antipode order searched up to factor·dim²
    "jobs": 1,                  # suite worker threads
    "battery_dim_limit": 1,     # internal-hom triples kept while dim M·N·P ≤ limit·dim²
}


def _valid(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def load() -> dict:
    """Defaults overlaid with every well-typed stored value; anything else is dropped."""
    stored = {}
    if _SETTINGS_FILE.exists():
        try:
            stored = json.loads(_SETTINGS_FILE.read_text())
        except Exception:
            pass
    if not isinstance(stored, dict):
        stored = {}
    settings = dict(_DEFAULTS)
    for key, value in stored.items():
        if key in _DEFAULTS and _valid(value):
            settings[key] = value
        else:
            log.warning("ignoring setting %s=%r in %s", key, value, _SETTINGS_FILE)
    return settings


def save(settings: dict) -> None:
    _SETTINGS_FILE.parent.mkdir(parents=True, exist_ok=True)
    _SETTINGS_FILE.write_text(json.dumps(settings, indent=2))


def get(key: str):
    return load().get(key, _DEFAULTS.get(key))


def put(key: str, value) -> None:
    if key not in _DEFAULTS:
        raise InvalidInput(f"unknown setting {key!r}; known: {', '.join(_DEFAULTS)}")
    if not _valid(value):
        raise InvalidInput(f"{key} must be a non-negative integer, got {value!r}")
    s = load()
    s[key] = value
    save(s)


def known_keys() -> list[str]:
    return list(_DEFAULTS)
