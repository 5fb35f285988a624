import argparse
import math
from pathlib import Path

import pytest

from ampamp.cli.run_config import RunConfig
from ampamp.errors import InputError
from ampamp.platform.workers import JOBS_ENV_VAR


def namespace(**overrides) -> argparse.Namespace:
    values = {"command": "spectrum", "out": "out", "log_level": "info", "jobs": None, "seed": 3, "pi_units": False, "weights": None}
    values.update(overrides)
    return argparse.Namespace(**values)


def test_from_namespace(monkeypatch):
    monkeypatch.setenv(JOBS_ENV_VAR, "3")
    config = RunConfig.from_namespace(namespace(weights="w.json"))
    assert config.jobs == 3
    assert config.log_level == "INFO"
    assert config.inputs == (Path("w.json"),)
    assert config.output("spectrum.csv") == Path("out") / "spectrum.csv"


def test_explicit_jobs_win_over_environment(monkeypatch):
    monkeypatch.setenv(JOBS_ENV_VAR, "3")
    assert RunConfig.from_namespace(namespace(jobs=2)).jobs == 2


def test_angle_units():
    assert RunConfig("compile").angle(0.5) == 0.5
    assert RunConfig("compile", pi_units=True).angle(0.5) == pytest.approx(math.pi / 2)


def test_validate(tmp_path):
    existing = tmp_path / "w.json"
    existing.write_text("{}")
    assert RunConfig("spectrum", out_dir=tmp_path / "new", inputs=(existing,)).validate().out_dir == tmp_path / "new"

    with pytest.raises(InputError):
        RunConfig("spectrum", inputs=(tmp_path / "absent.json",)).validate()
    with pytest.raises(InputError):
        RunConfig("spectrum", out_dir=existing).validate()
    with pytest.raises(InputError):
        RunConfig("spectrum", jobs=0).validate()
    with pytest.raises(InputError):
        RunConfig("spectrum", log_level="LOUD").validate()
