"""Result cache behavior and full-report structure, determinism, and
skip handling."""

import json
import logging
import os

from grifcalc.cache import Cache, cache_key, payload_digest
from grifcalc.cli import run_command
from grifcalc.report import (CHECK_ORDER, ReportOptions, full_report)


def test_cache_round_trip(tmp_path):
    cache = Cache(str(tmp_path / "c"))
    assert cache.get("op", {"x": 1}) is None
    cache.put("op", {"x": 1}, {"value": [1, 2, 3]})
    assert cache.get("op", {"x": 1}) == {"value": [1, 2, 3]}
    assert cache.get("op", {"x": 2}) is None
    assert cache.get("other", {"x": 1}) is None


def test_cache_key_is_param_order_independent():
    assert cache_key("op", {"a": 1, "b": 2}) == cache_key("op", {"b": 2, "a": 1})
    assert cache_key("op", {"a": 1}) != cache_key("op", {"a": 2})


def test_cache_tamper_detection(tmp_path, caplog):
    cache = Cache(str(tmp_path))
    cache.put("op", {"x": 1}, {"value": 7})
    path = cache._path(cache_key("op", {"x": 1}))
    entry = json.load(open(path))
    entry["payload"]["value"] = 8  # digest now stale
    json.dump(entry, open(path, "w"))
    with caplog.at_level(logging.WARNING, logger="grifcalc.cache"):
        assert cache.get("op", {"x": 1}) is None
    assert any("digest" in r.message for r in caplog.records)


def test_cache_corrupt_file_is_a_miss(tmp_path, caplog):
    cache = Cache(str(tmp_path))
    cache.put("op", {}, 1)
    path = cache._path(cache_key("op", {}))
    open(path, "w").write("{ not json")
    with caplog.at_level(logging.WARNING, logger="grifcalc.cache"):
        assert cache.get("op", {}) is None


def test_cache_write_failure_is_soft(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("occupied")
    cache = Cache(str(blocker))  # a file, not a directory
    with caplog.at_level(logging.WARNING, logger="grifcalc.cache"):
        cache.put("op", {}, {"v": 1})  # must not raise
    assert cache.get("op", {}) is None


def test_cache_env_var_and_default(tmp_path, monkeypatch):
    monkeypatch.setenv("GRIFCALC_CACHE", str(tmp_path / "envcache"))
    cache = Cache()
    assert cache.directory == str(tmp_path / "envcache")
    monkeypatch.delenv("GRIFCALC_CACHE")
    assert Cache().directory == ".grifcalc-cache"


def test_payload_digest_canonicalization():
    assert payload_digest({"a": 1, "b": [2]}) == payload_digest({"b": [2], "a": 1})


def test_report_check_order_is_stable():
    doc = full_report(ReportOptions(skip=("kermu", "nl", "hodge", "fermat",
                                          "independence")))
    assert tuple(c.check_id for c in doc.checks) == CHECK_ORDER


def test_report_skip_groups():
    doc = full_report(ReportOptions(skip=("kermu",),
                                    pairs=((1, 1), (2, 1))))
    by_id = {c.check_id: c for c in doc.checks}
    assert by_id["kermu.span"].status == "skip"
    assert by_id["kermu.standardize"].status == "skip"
    assert by_id["fermat.census"].status == "pass"
    assert not doc.failed


def test_report_flag_check_never_fails_the_run():
    doc = full_report(ReportOptions(skip=("kermu", "nl", "independence")))
    by_id = {c.check_id: c for c in doc.checks}
    flag = by_id["hodge.h33-reference-value"]
    assert flag.status == "flag"
    assert flag.details["reference_value"] == 36
    assert flag.details["computed_total"] == 71
    assert flag.details["difference"] == 35
    assert flag.details["type33_orbit_count"] == 35
    assert not doc.failed


def test_report_determinism_two_cold_runs(tmp_path):
    argv = ["report", "--json", "--stable", "--kermu-vars", "5"]
    code1, out1 = run_command(argv + ["--cache", str(tmp_path / "one")])
    code2, out2 = run_command(argv + ["--cache", str(tmp_path / "two")])
    assert code1 == code2 == 0
    assert out1 == out2


def test_report_warm_cache_reproduces_cold_output(tmp_path):
    argv = ["report", "--json", "--stable", "--kermu-vars", "5",
            "--cache", str(tmp_path)]
    code1, out1 = run_command(argv)
    code2, out2 = run_command(argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert os.listdir(tmp_path)  # something was actually cached


def test_report_stable_zeroes_timings():
    doc = full_report(ReportOptions(stable=True,
                                    skip=("kermu", "nl", "hodge", "fermat",
                                          "independence")))
    assert all(v == 0.0 for v in doc.timings.values())
    assert set(doc.timings) == set(CHECK_ORDER)


def test_report_document_json_shape():
    doc = full_report(ReportOptions(skip=("kermu", "nl", "hodge", "fermat",
                                          "independence")))
    data = doc.to_json()
    assert set(data) == {"tool_version", "checks", "timings"}
    for check in data["checks"]:
        assert set(check) == {"check_id", "status", "details"}
        assert check["status"] in ("pass", "fail", "skip", "flag")


def test_report_cli_exit_zero_on_default_flags():
    code, out = run_command(["report", "--kermu-vars", "5"])
    assert code == 0
    assert "overall: OK" in out


def test_report_detects_dependent_pairs_as_failure():
    doc = full_report(ReportOptions(pairs=((1, 1), (1, 1)),
                                    skip=("kermu", "nl", "hodge", "fermat")))
    by_id = {c.check_id: c for c in doc.checks}
    assert by_id["independence.rank"].status == "fail"
    assert doc.failed
    code, _ = run_command(["report", "--pairs", "1,1;1,1", "--skip", "kermu"])
    assert code == 1
