import json

import pytest

from hopfint import settings
from hopfint.errors import InvalidInput


def test_defaults_without_a_file(settings_file):
    assert not settings_file.exists()
    s = settings.load()
    assert s["seed"] == 1729
    assert s["iso_attempts"] == 32
    assert set(settings.known_keys()) == set(s)


def test_put_persists(settings_file):
    settings.put("seed", 7)
    assert settings.get("seed") == 7
    assert json.loads(settings_file.read_text())["seed"] == 7
    assert settings.get("jobs") == 1


@pytest.mark.parametrize("key, value", [
    ("colour", 1),
    ("seed", -1),
    ("seed", "seven"),
    ("jobs", True),
])
def test_put_rejects_bad_values(settings_file, key, value):
    with pytest.raises(InvalidInput):
        settings.put(key, value)
    assert not settings_file.exists()


def test_corrupt_file_falls_back_to_defaults(settings_file):
    settings_file.parent.mkdir(parents=True)
    settings_file.write_text("{oops")
    assert settings.load()["order_bound_factor"] == 4


def test_badly_typed_values_fall_back_to_defaults(settings_file):
    settings_file.parent.mkdir(parents=True)
    settings_file.write_text(json.dumps({
        "jobs": "four", "order_bound_factor": "4", "seed": True, "iso_attempts": -3,
        "battery_dim_limit": 2, "colour": "red",
    }))
    assert settings.load() == {"seed": 1729, "iso_attempts": 32, "order_bound_factor": 4,
                               "jobs": 1, "battery_dim_limit": 2}


def test_non_object_file_falls_back_to_defaults(settings_file):
    settings_file.parent.mkdir(parents=True)
    settings_file.write_text("[1, 2]")
    assert settings.load()["seed"] == 1729
