import pytest


@pytest.fixture(autouse=True)
def _isolated_cache_env(tmp_path, monkeypatch):
    # commands fall back to GRIFCALC_CACHE when --cache is absent; point it
    # at a per-test directory so suite runs never touch the working tree
    monkeypatch.setenv("GRIFCALC_CACHE", str(tmp_path / "cache-env"))
