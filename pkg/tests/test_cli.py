import json
import subprocess
import sys

import pytest

from stratglue.cli import main

M2_B = "[[0,1,0],[-1,0,1],[0,-1,0]]"
M2_ZERO = "[[0,1,1,0],[-1,0,0,0],[-1,0,0,0],[0,0,0,0]]"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("expr,want", [("{2}", "∅"), ("{2; -3}", "∅"), ("whole", "{K}"), ("empty", "∅")])
def test_phi_k2(capsys, expr, want):
    code, out, _ = run(capsys, "phi", "--catalog", "oq_k2", "J", "K", expr)
    assert code == 0 and out.strip() == want


def test_phi_gl2_point(capsys):
    code, out, _ = run(capsys, "phi", "--catalog", "oq_gl2", "0", "b", "V(D - 5)")
    assert code == 0 and out.strip() == "point s=5"


def test_phi_named_point(capsys):
    code, out, _ = run(capsys, "phi", "--catalog", "oq_gl2", "0", "bc", "{t=1, D=3}")
    assert code == 0 and out.strip() == "V<a*d - 3>"


def test_phi_json(capsys):
    code, out, _ = run(capsys, "phi", "--catalog", "oq_gl2", "0", "bc", "V(D - 2)", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ideal"] == ["a*d - 2"]


def test_phi_incomparable_pair(capsys):
    code, _, err = run(capsys, "phi", "--catalog", "oq_gl2", "b", "c", "whole")
    assert code == 2 and "does not hold" in err


def test_phi_parse_error(capsys):
    code, _, err = run(capsys, "phi", "--catalog", "oq_gl2", "0", "b", "V(D - )")
    assert code == 2 and "cannot parse" in err


@pytest.mark.parametrize("matrix,names,want", [
    (M2_B, "a,c,d", "a*d"),
    ("[[0,0],[0,0]]", None, "x1, x2"),
    (M2_ZERO, "a,b,c,D", "b*c^-1, D"),
])
def test_center(capsys, matrix, names, want):
    argv = ["center", matrix] + (["--names", names] if names else [])
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == want


def test_center_from_catalog(capsys):
    code, out, _ = run(capsys, "center", "--catalog", "oq_m2", "--stratum", "Delta")
    assert code == 0 and out.strip() == "b*c^-1"


def test_center_rejects_non_skew(capsys):
    code, _, err = run(capsys, "center", "[[0,1],[1,0]]")
    assert code == 2 and "skew" in err


def test_check_catalog(capsys):
    for name in ("oq_k2", "oq_gl2"):
        code, out, _ = run(capsys, "check", "--catalog", name, "--samples", "3")
        assert code == 0 and out.rstrip().endswith("PASS overall")


def test_check_corrupted_poset(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "bad", "poset": {"elements": ["a", "b"],
                               "leq": [["a", "a"], ["b", "b"], ["a", "b"], ["b", "a"]]},
                               "strata": {}, "phis": []}))
    code, out, _ = run(capsys, "check", "--input", str(bad))
    assert code == 1 and "antisymmetry" in out


def test_check_bad_json_is_usage_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check", "--input", str(bad))
    assert code == 2 and "cannot read" in err


def test_export_dot_counts(capsys):
    code, out, _ = run(capsys, "export", "--catalog", "oq_m2", "--format", "dot")
    assert code == 0
    nodes = [l for l in out.splitlines() if l.strip().endswith(";") and "->" not in l and "=" not in l]
    assert len(nodes) == 14 and out.count("->") == 27
    code, out, _ = run(capsys, "export", "--catalog", "oq_sl3_poset", "--format", "dot")
    nodes = [l for l in out.splitlines() if l.strip().endswith(";") and "->" not in l and "=" not in l]
    assert len(nodes) == 36


def test_export_json_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--catalog", "oq_gl2")
    path = tmp_path / "gl2.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "phi", "--input", str(path), "0", "b", "V(D - 5)")
    assert code == 0 and out2.strip() == "point s=5"


def test_output_written_only_on_success(capsys, tmp_path):
    target = tmp_path / "out.txt"
    code, _, _ = run(capsys, "phi", "--catalog", "oq_gl2", "b", "c", "whole", "--output", str(target))
    assert code == 2 and not target.exists()
    code, _, _ = run(capsys, "poset", "--catalog", "oq_gl2", "--output", str(target))
    assert code == 0 and target.read_text().startswith("4 elements, 4 covers")


def test_glue_closures(capsys):
    code, out, _ = run(capsys, "glue", "--catalog", "oq_gl2", "--stratum", "b")
    assert code == 0
    assert "  bc: whole bc" in out and "  c: ∅" in out


def test_seeded_output_is_byte_identical(capsys):
    a = run(capsys, "check", "--catalog", "oq_gl2", "--samples", "3", "--seed", "5", "--format", "json")
    b = run(capsys, "check", "--catalog", "oq_gl2", "--samples", "3", "--seed", "5", "--format", "json")
    assert a == b


def test_needs_a_source(capsys):
    code, _, _ = run(capsys, "check")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stratglue", "center", "[[0,1],[-1,0]]"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
