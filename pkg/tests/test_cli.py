import io
import json

import pytest

from circpair import catalog
from circpair.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_pair():
    code, out = run("pair", "61", "11")
    assert code == 0
    assert "order k = 4" in out
    assert "Phi = {1, 11, 50, 60}" in out
    assert "circular: true" in out
    assert "ferrero pair: true" in out


def test_pair_not_circular():
    code, out = run("pair", "61", "3")
    assert code == 0 and "circular: false" in out and "witness" in out


def test_pair_not_prime(capsys):
    code, _ = run("pair", "60", "7")
    assert code == 1
    assert "60 is not prime" in capsys.readouterr().err


def test_generator_outside_field(capsys):
    with pytest.raises(SystemExit) as exc:
        run("pair", "61", "75")
    assert exc.value.code == 2
    assert "does not belong" in capsys.readouterr().err


@pytest.mark.parametrize("method", ["auto", "fast", "brute", "both"])
def test_disk(method):
    code, out = run("disk", "61", "11", "1", "0", "--method", method)
    assert code == 0
    assert "points (9): {0, 1, 5, 6, 11, 50, 55, 56, 60}" in out
    assert "interior: {0, 5, 6, 55, 56}" in out
    assert "decomposition 0, a, (g^i+1)a/2: {0, 1, 6}" in out
    if method == "both":
        assert "match: true" in out


def test_disk_zero_radius(capsys):
    code, _ = run("disk", "61", "11", "0", "0")
    assert code == 1
    assert "radius must be nonzero" in capsys.readouterr().err


def test_disk_fast_odd(capsys):
    code, _ = run("disk", "61", "9", "1", "0", "--method", "fast")
    assert code == 1
    assert "odd" in capsys.readouterr().err


def test_disk_odd_auto():
    code, out = run("disk", "61", "9", "1", "0")
    assert code == 0 and "method brute" in out


def test_disk_non_circular(capsys):
    code, _ = run("disk", "61", "3", "1", "0")
    assert code == 1 and "not circular" in capsys.readouterr().err


def test_design_disks(tmp_path):
    path = tmp_path / "disks.json"
    code, out = run("design", "61", "11", "--blocks=disks", "--export", str(path))
    assert code == 0
    assert "BIBD (v, b, k, r, lambda) = (61, 915, 9, 135, 18)" in out
    assert "closed-form disk parameters: (61, 915, 9, 135, 18)" in out
    assert "vr = bk: true" in out
    obj = json.loads(path.read_text())
    assert obj["params"]["lambda"] == 18 and len(obj["blocks"]) == 915


def test_design_circles_csv(tmp_path):
    path = tmp_path / "c.csv"
    code, out = run("design", "61", "11", "--export", str(path), "--format", "csv")
    assert code == 0
    assert "(61, 915, 4, 60, 3)" in out
    assert len(path.read_text().splitlines()) == 62


def test_design_unwritable(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _ = run("design", "13", "5", "--export", str(blocker / "out.json"))
    assert code == 1 and "cannot write" in capsys.readouterr().err


def test_clay():
    code, out = run("clay", "61", "11", "9", "1", "0")
    assert code == 0
    assert "clay Phi-orbit reps: {0, 4, 5, 7, 9, 10, 13, 19, 20}" in out
    code, out = run("clay", "61", "11", "13", "1", "0")
    assert "clay Phi-orbit reps: {0, 3, 4, 5, 7, 8, 13, 14, 15, 19, 20, 25}" in out


def test_clay_not_double_planar(capsys):
    code, _ = run("clay", "61", "11", "60", "1", "0")
    assert code == 1 and "distributivity" in capsys.readouterr().err


def test_scan_cache(tmp_path):
    cache = tmp_path / "scan.jsonl"
    code, out = run("scan", "5", "40", "--cache", str(cache), "--circular-only")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["p", "g", "k", "circular", "even", "disk_size", "non_group", "bibd"]
    assert "13\t5\t4\ttrue\ttrue\t9\ttrue\t(13, 39, 9, 27, 18)" in lines
    assert all(line.split("\t")[3] == "true" for line in lines[1:-1])
    code, out = run("scan", "5", "40", "--cache", str(cache))
    assert out.splitlines()[-1] == "computed 0 new record(s)"


def test_scan_env_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(catalog.CACHE_ENV, str(tmp_path))
    run("scan", "5", "20", "--no-designs")
    assert (tmp_path / "scan.jsonl").exists()


def test_scan_no_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(catalog.CACHE_ENV, str(tmp_path))
    code, out = run("scan", "5", "20", "--no-cache", "--no-designs", "--order", "4")
    assert code == 0 and not (tmp_path / "scan.jsonl").exists()
    assert all(line.split("\t")[2] == "4" for line in out.splitlines()[1:-1])


def test_scan_unwritable_cache(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _ = run("scan", "5", "20", "--cache", str(blocker / "scan.jsonl"))
    assert code == 1 and "cannot use cache" in capsys.readouterr().err


def test_scan_empty_range(capsys):
    with pytest.raises(SystemExit) as exc:
        run("scan", "50", "10")
    assert exc.value.code == 2 and "empty range" in capsys.readouterr().err


def test_conjecture():
    code, out = run("conjecture", "5", "70", "--odd-only", "--stats")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p\tg\tk\tn\tM_size\tmatches"
    assert "61\t9\t5\t2\t4\ttrue" in lines
    assert any(line.startswith("# {") for line in lines)
    assert lines[-1].startswith("# flagged rows")


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "circpair", "pair", "13", "5"], capture_output=True, text=True)
    assert res.returncode == 0 and "circular: true" in res.stdout
