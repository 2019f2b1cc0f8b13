import json

import pytest
from pydantic import ValidationError

from bianchi.config import RunConfig, bianchi_config, run_config
from bianchi.config.config import WORKERS_ENV
from bianchi.config.utils import CONFIG_ENV, load_config
from bianchi.exception import ConfigError, FileNotExistError, FileTypeError, ReadFileError
from bianchi.utils import load_data


def test_defaults():
    assert run_config.field_d == -1
    assert run_config.p == 13
    assert run_config["prime_bound"] == 200
    assert bianchi_config.limits.max_precision == 512


def test_config_is_read_only():
    with pytest.raises(RuntimeError):
        run_config.p = 5
    with pytest.raises(RuntimeError):
        run_config["p"] = 5
    with pytest.raises(RuntimeError):
        run_config["no_such_option"]


def test_with_run_keeps_defaults():
    run = bianchi_config.with_run({"p": 5})
    assert run.p == 5
    assert run.field_d == run_config.field_d
    assert run_config.p == 13


@pytest.mark.parametrize(
    "overrides",
    [{"field_d": 1}, {"field_d": -4}, {"p": 15}, {"workers": 0}, {"output": "xml"}, {"precision": 0}],
)
def test_invalid_run_options(overrides):
    with pytest.raises(ValidationError):
        bianchi_config.with_run(overrides)


def test_workers_from_env(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "3")
    assert RunConfig().workers == 3
    assert bianchi_config.with_run({"workers": 1}).workers == 3


def test_config_env(monkeypatch, tmp_path):
    path = tmp_path / "bianchi.yaml"
    path.write_text("run:\n  p: 7\ncore:\n  log_level: DEBUG\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_ENV, str(path))
    assert load_config() == {"run": {"p": 7}, "core": {"log_level": "DEBUG"}}

    monkeypatch.setenv(CONFIG_ENV, str(tmp_path / "missing.yaml"))
    with pytest.raises(ConfigError):
        load_config()


def test_load_data(tmp_path):
    (tmp_path / "a.json").write_text(json.dumps({"x": 1}), encoding="utf-8")
    (tmp_path / "b.toml").write_text("[tool]\nx = 1\n", encoding="utf-8")
    (tmp_path / "c.yaml").write_text("", encoding="utf-8")
    (tmp_path / "d.ini").write_text("x=1", encoding="utf-8")
    (tmp_path / "e.json").write_text("{", encoding="utf-8")

    assert load_data(tmp_path / "a.json") == {"x": 1}
    assert load_data(tmp_path / "b.toml") == {"tool": {"x": 1}}
    with pytest.raises(ReadFileError):
        load_data(tmp_path / "c.yaml")
    with pytest.raises(FileTypeError):
        load_data(tmp_path / "d.ini")
    with pytest.raises(ReadFileError):
        load_data(tmp_path / "e.json")
    with pytest.raises(FileNotExistError):
        load_data(tmp_path / "f.json")
