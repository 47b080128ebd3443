"""Command-line interface: commands, exit codes, reports, caching."""

import json
import re

from slfusion.cache import ModuleCache
from slfusion.cli import (
    EXIT_FAIL,
    EXIT_OK,
    RunConfig,
    claim_seed,
    main,
    run_suite,
)
from slfusion.modules import FusionModule


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse errors
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_output(capsys):
    code, out, _ = run(capsys, "build", "--a", "2,2")
    assert code == EXIT_OK
    assert "dim = 4" in out
    assert "character = 1 + u + u q + u^2" in out


def test_build_rejects_unsorted(capsys):
    code, _, err = run(capsys, "build", "--a", "2,1")
    assert code == 2
    assert "nondecreasing" in err


def test_character_command(capsys):
    code, out, _ = run(capsys, "character", "--a", "1")
    assert code == EXIT_OK and "dim = 1" in out


def test_submodule_command(capsys):
    code, out, _ = run(capsys, "submodule", "--a", "2,3", "--i", "1")
    assert code == EXIT_OK
    assert "dim = 2" in out


def test_filtration_command(capsys):
    code, out, _ = run(capsys, "filtration", "--a", "2,2,3", "--i", "1")
    assert code == EXIT_OK
    assert "M^(1,3)" in out
    code, _, err = run(capsys, "filtration", "--a", "2,2,3", "--i", "5")
    assert code == 2


def test_cohomology_command(capsys):
    code, out, _ = run(capsys, "cohomology", "--a", "2,3,4")
    assert code == EXIT_OK
    assert "dim = 60" in out


def test_splitting_command(capsys):
    code, out, _ = run(capsys, "splitting", "--n", "3")
    assert code == EXIT_OK
    assert "[2, 1, 1, 0, -1, -1, -2]" in out
    code, out, _ = run(capsys, "splitting", "--n", "4")
    assert code == EXIT_FAIL  # honest divergence from the closed-form claim
    assert "differs" in out


def test_invert_command(capsys):
    code, out, _ = run(capsys, "invert", "--a", "1,1,0")
    assert code == EXIT_OK
    assert out.strip() == "1,-1,1"
    code, _, err = run(capsys, "invert", "--a", "0,1")
    assert code == 2


def test_unknown_suite_usage_error(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2


def test_verify_dims_small(capsys):
    code, out, _ = run(capsys, "verify", "dims", "--max-n", "2", "--max-entry", "3")
    assert code == EXIT_OK
    assert "failed" not in out.split("\n")[-2] or "0 failed" in out


def test_verify_json_deterministic(capsys):
    args = ["verify", "dual-oracle", "--max-n", "2", "--max-entry", "2",
            "--seed", "7", "--format", "json"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == EXIT_OK
    strip = lambda s: re.sub(r'"ms": \d+', '"ms": 0', s)
    assert strip(out1) == strip(out2)
    for line in out1.strip().splitlines():
        rec = json.loads(line)
        assert set(rec) >= {"claim", "anchor", "inputs", "expected", "got", "shift", "status", "ms"}


def test_verify_csv_format(capsys):
    code, out, _ = run(capsys, "verify", "vectorfields", "--format", "csv")
    assert code == EXIT_OK
    header = out.splitlines()[0]
    assert header == "claim,anchor,status,expected,got,shift,ms"


def test_claim_seed_stability():
    assert claim_seed(7, "chart[3]") == claim_seed(7, "chart[3]")
    assert claim_seed(7, "chart[3]") != claim_seed(8, "chart[3]")


def test_run_suite_reports_sorted():
    cfg = RunConfig(max_n=2, max_entry=2)
    reports = run_suite("dims", cfg)
    claims = [r["claim"] for r in reports]
    assert claims == sorted(claims)
    assert all(r["status"] == "pass" for r in reports)


def test_cache_roundtrip(tmp_path):
    cache = ModuleCache(tmp_path)
    mod = cache.get((2, 3))
    assert cache.path_for((2, 3)).exists()
    loaded = cache.load((2, 3))
    assert loaded is not None
    assert loaded.character() == mod.character()
    fresh = FusionModule((2, 3))
    assert loaded.character() == fresh.character()


def test_cache_version_mismatch_rebuilds(tmp_path):
    cache = ModuleCache(tmp_path)
    cache.get((2, 2))
    path = cache.path_for((2, 2))
    data = json.loads(path.read_text())
    data["version"] = 999
    path.write_text(json.dumps(data))
    assert cache.load((2, 2)) is None  # triggers rebuild, never partial read


def test_cache_spot_check(tmp_path):
    from random import Random

    cache = ModuleCache(tmp_path)
    cache.get((2, 2))
    cache.get((1, 3))
    result = cache.spot_check(Random(3))
    assert result is not None and result["ok"]


def test_build_with_cache_dir(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--a", "3,3", "--cache-dir", str(tmp_path))
    assert code == EXIT_OK
    assert any(tmp_path.glob("module-*.json"))
    code2, out2, _ = run(capsys, "build", "--a", "3,3", "--cache-dir", str(tmp_path))
    assert "dim = 9" in out2


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SLFUSION_CACHE_DIR", str(tmp_path))
    code, _, _ = run(capsys, "build", "--a", "2,4")
    assert code == EXIT_OK
    assert any(tmp_path.glob("module-*.json"))
