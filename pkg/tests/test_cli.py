import json
import subprocess
import sys
from pathlib import Path

import pytest

from kmcat.cli import main
from kmcat.rng import SplitMix64

REPO = Path(__file__).resolve().parent.parent


def run_cli(args):
    return main(args)


def test_splitmix_reference_stream():
    # reference values for seed 0 (standard SplitMix64 constants)
    rng = SplitMix64(0)
    stream = [rng.next_u64() for _ in range(3)]
    assert stream == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_verify_nilhecke_exit_zero(capsys):
    assert run_cli(["verify", "nilhecke", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert "fail" in out and "0 fail" in out


def test_verify_klr_with_config(capsys, tmp_path):
    code = run_cli(["verify", "klr", "--cartan", str(REPO / "fixtures/a2.json"),
                    "--n", "2", "--seed", "7"])
    assert code == 0


def test_verify_crystal_counts(tmp_path):
    out = tmp_path / "r.json"
    code = run_cli(["verify", "crystal",
                    "--cartan", str(REPO / "fixtures/a2.json"),
                    "--kappa", "1,1", "--json", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    sizes = [c["detail"]["size"] for c in payload["checks"]
             if c["name"] == "crystal-size-weyl"]
    assert sizes == [8]


def test_report_determinism(tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    for out in (out1, out2):
        assert run_cli(["verify", "crystal",
                        "--cartan", str(REPO / "fixtures/a2.json"),
                        "--kappa", "1,0", "--seed", "5",
                        "--json", str(out)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_cyclo_records(tmp_path):
    out = tmp_path / "cyclo.json"
    code = run_cli(["cyclo", "--cartan", str(REPO / "fixtures/a2.json"),
                    "--kappa", "1,0", "--n", "1", "--json", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["tool"].startswith("kmcat")
    assert "timing" not in payload
    records = payload["records"]
    assert any(r.get("content") == [1, 0] and r["dim"] == 1 for r in records)
    statuses = {c["status"] for c in payload["checks"]}
    assert statuses == {"pass"}


def test_golden_files_regenerate(tmp_path):
    cases = [
        ("a1.json", "2", None, "a1_k2"),
        ("a2.json", "1,1", None, "a2_l1l2"),
        ("a1hat.json", "1,0", "3", "a1hat_l0_d3"),
    ]
    for config, kappa, depth, stem in cases:
        dot = tmp_path / f"{stem}.dot"
        js = tmp_path / f"{stem}.json"
        args = ["crystal-export", "--cartan", str(REPO / "fixtures" / config),
                "--kappa", kappa, "--dot", str(dot), "--json", str(js)]
        if depth:
            args += ["--depth", depth]
        assert run_cli(args) == 0
        golden = REPO / "fixtures" / "golden"
        assert dot.read_bytes() == (golden / f"{stem}.dot").read_bytes()
        assert js.read_bytes() == (golden / f"{stem}.json").read_bytes()


def test_golden_characters_cross_checked(a1, a2, a1hat):
    """The committed golden characters agree with the independent oracles
    (Weyl dimensions and the contravariant-form construction)."""
    from kmcat.cartan import weyl_dim
    from kmcat.liealg import build_highest_weight

    golden = json.loads((REPO / "fixtures/golden/a2_l1l2.json").read_text())
    chars = golden["characters"]["character"]
    assert sum(chars.values()) == weyl_dim(a2, (1, 1)) == 8
    mod = build_highest_weight(a2, (1, 1), 4)
    for key, mult in chars.items():
        beta = tuple(int(x) for x in key.split(","))
        assert mod.dims.get(beta, 0) == mult

    golden1 = json.loads((REPO / "fixtures/golden/a1_k2.json").read_text())
    assert sum(golden1["characters"]["character"].values()) == weyl_dim(a1, (2,))

    goldenh = json.loads((REPO / "fixtures/golden/a1hat_l0_d3.json").read_text())
    modh = build_highest_weight(a1hat, (1, 0), 3)
    for key, mult in goldenh["characters"]["character"].items():
        beta = tuple(int(x) for x in key.split(","))
        assert modh.dims.get(beta, 0) == mult


def test_exit_code_two_on_inconclusive(tmp_path, monkeypatch):
    # a schedule too small to stabilize reports inconclusive, not failure
    import kmcat.cyclo as cyc

    original = cyc.default_schedule
    monkeypatch.setattr(cyc, "default_schedule", lambda *a: (1,))
    try:
        code = run_cli(["cyclo", "--cartan", str(REPO / "fixtures/a1.json"),
                        "--kappa", "2", "--n", "1"])
    finally:
        monkeypatch.setattr(cyc, "default_schedule", original)
    assert code == 2


def test_console_entrypoint():
    result = subprocess.run(
        [sys.executable, "-m", "kmcat.cli", "verify", "cartan"],
        capture_output=True, text=True, cwd=REPO)
    assert result.returncode == 0
    assert "0 fail" in result.stdout
