import pytest

from ampamp.errors import InputError
from ampamp.platform.workers import JOBS_ENV_VAR, default_jobs, map_ordered


def test_default_jobs(monkeypatch):
    monkeypatch.delenv(JOBS_ENV_VAR, raising=False)
    assert default_jobs() == 1
    monkeypatch.setenv(JOBS_ENV_VAR, "4")
    assert default_jobs() == 4


@pytest.mark.parametrize("raw", ["many", "0", "-2"])
def test_default_jobs_rejects_bad_values(monkeypatch, raw):
    monkeypatch.setenv(JOBS_ENV_VAR, raw)
    with pytest.raises(InputError):
        default_jobs()


def test_map_ordered_keeps_order():
    items = [-5, 3, -1, 8, -2, 0]
    assert map_ordered(abs, items) == [5, 3, 1, 8, 2, 0]
    assert map_ordered(abs, items, jobs=2) == [5, 3, 1, 8, 2, 0]


def test_map_ordered_rejects_zero_workers():
    with pytest.raises(InputError):
        map_ordered(abs, [1], jobs=0)
