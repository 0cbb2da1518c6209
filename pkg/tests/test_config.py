import logging

import pytest

from src.models.errors import ConfigurationError
from src.utils.config import Settings, get_settings, load_settings
from src.utils.init import create_example_env_file, init_application

VARIABLES = ["LOG_LEVEL", "LOG_FILE", "WORKERS", "MAX_PATH_LENGTH", "MAX_CORE_MODULUS"]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in VARIABLES:
        monkeypatch.delenv(f"CORE_MOTZKIN_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_defaults():
    settings = load_settings()
    assert settings == Settings()
    assert settings.log_level == "WARNING"
    assert settings.workers == 1
    assert settings.log_file is None


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("CORE_MOTZKIN_LOG_LEVEL", "debug")
    monkeypatch.setenv("CORE_MOTZKIN_WORKERS", "4")
    monkeypatch.setenv("CORE_MOTZKIN_MAX_PATH_LENGTH", " 30 ")
    settings = load_settings()
    assert settings.log_level == "DEBUG"
    assert settings.workers == 4
    assert settings.max_path_length == 30


def test_blank_values_are_ignored(monkeypatch):
    monkeypatch.setenv("CORE_MOTZKIN_WORKERS", "")
    assert load_settings().workers == 1


@pytest.mark.parametrize("name,value", [
    ("WORKERS", "0"),
    ("WORKERS", "many"),
    ("LOG_LEVEL", "chatty"),
    ("MAX_CORE_MODULUS", "-3"),
])
def test_invalid_values_raise(monkeypatch, name, value):
    monkeypatch.setenv(f"CORE_MOTZKIN_{name}", value)
    with pytest.raises(ConfigurationError):
        load_settings()


def test_get_settings_is_cached(monkeypatch):
    first = get_settings()
    monkeypatch.setenv("CORE_MOTZKIN_WORKERS", "3")
    assert get_settings() is first
    get_settings.cache_clear()
    assert get_settings().workers == 3


def test_init_application_with_log_file(monkeypatch, tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("CORE_MOTZKIN_LOG_LEVEL", "INFO")
    monkeypatch.setenv("CORE_MOTZKIN_LOG_FILE", str(log_file))
    assert init_application()
    logging.getLogger("Test").info("hello")
    assert log_file.exists()
    monkeypatch.setenv("CORE_MOTZKIN_LOG_FILE", "")
    monkeypatch.setenv("CORE_MOTZKIN_LOG_LEVEL", "WARNING")
    assert init_application()


def test_init_application_reports_bad_settings(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("CORE_MOTZKIN_WORKERS", "zero")
    assert init_application() is False


def test_create_example_env_file(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    create_example_env_file()
    content = (tmp_path / ".env.example").read_text()
    for name in VARIABLES:
        assert f"CORE_MOTZKIN_{name}" in content


def test_example_env_file_skipped_when_env_exists(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    (tmp_path / ".env").write_text("")
    create_example_env_file()
    assert not (tmp_path / ".env.example").exists()
