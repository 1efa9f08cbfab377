import json

import pytest

import ntk
from ntk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_z6(capsys):
    code, out, _ = run(capsys, "analyze", "Z6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["class"] == "cyclic-nontrivial"
    assert (data["k"], data["l"], data["m"]) == (2, 3, 3)


def test_analyze_s3_z3(capsys):
    code, out, _ = run(capsys, "analyze", "S3 x Z3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert (data["k"], data["l"], data["m"]) == (2, 9, 3)


def test_analyze_q8_not_applicable_note(capsys):
    code, out, _ = run(capsys, "analyze", "Dic2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["class"] == "non-cyclic"
    assert "note" in data


def test_construct_z6(capsys):
    code, out, _ = run(capsys, "construct", "Z6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["cells"]) == 5
    assert data["branch"] == "construction"


def test_construct_round_trip_revalidates(capsys):
    code, out, _ = run(capsys, "construct", "S3 x Z3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    group, _ = ntk.parse_group_spec(data["group"])
    square = ntk.cayley_square(group)
    cells = ntk.cells_from_json(data["cells"], square)
    ok, violation = ntk.is_partial_transversal(square, cells)
    assert ok, violation
    assert len(cells) == data["n"] - 1


def test_construct_with_ordering_override(capsys):
    code, out, _ = run(capsys, "construct", "S3 x Z3",
                       "--ordering", "1,c,c2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ordering"] == ["1", "c", "c2"]
    assert len(data["cells"]) == 17


def test_construct_bad_ordering(capsys):
    code, _, err = run(capsys, "construct", "S3 x Z3", "--ordering", "1,c")
    assert code == 1
    assert "harmonious" in err or "ordering" in err


def test_construct_z5_complete_mapping_branch(capsys):
    code, out, _ = run(capsys, "construct", "Z5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["branch"] == "complete-mapping"
    assert len(data["cells"]) == 4


def test_verify_pass_and_not_applicable(capsys):
    code, out, _ = run(capsys, "verify", "Z6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True

    code, out, _ = run(capsys, "verify", "Z2", "--format", "json")
    assert code == 0  # smallest case: one ladder on 4 cells

    code, _, err = run(capsys, "verify", "D4")
    assert code == 1
    assert "non-cyclic" in err


def test_oracle_count(capsys):
    code, out, _ = run(capsys, "oracle", "count", "Z3", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 3


def test_oracle_transversal_absent(capsys):
    code, out, _ = run(capsys, "oracle", "transversal", "Z4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["present"] is False and data["cells"] is None


def test_oracle_complete_mapping_present(capsys):
    code, out, _ = run(capsys, "oracle", "completemapping", "Z2 x Z2", "--format", "json")
    assert code == 0
    assert json.loads(out)["present"] is True


def test_oracle_maxpartial(capsys):
    code, out, _ = run(capsys, "oracle", "maxpartial", "Z4", "--format", "json")
    assert code == 0
    assert json.loads(out)["size"] == 3


def test_guard_exit_code(capsys):
    code, _, err = run(capsys, "oracle", "count", "Z12")
    assert code == 3
    assert "guard" in err


def test_guard_override_flag(capsys):
    code, out, _ = run(capsys, "oracle", "count", "Z11", "--guard-override", "11",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] > 0


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "analyze", "Q8")
    assert code == 1
    assert "unrecognized" in err


def test_render_ascii_z6(capsys):
    code, out, _ = run(capsys, "render", "Z6")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.strip()]
    assert len(lines) == 7  # header + 6 rows
    assert out.count("[") == 12  # all ladder cells marked


def test_render_ascii_z2(capsys):
    code, out, _ = run(capsys, "render", "Z2")
    assert code == 0
    assert out.count("[") == 4  # the whole 2x2 square is the ladder


def test_render_latex_order18(capsys):
    code, out, _ = run(capsys, "render", "S3 x Z3", "--format", "latex")
    assert code == 0
    assert r"\begin{tabular}" in out
    body = out.split(r"\begin{tabular}", 1)[1]
    assert body.count(r"\lad{") == 12
    assert body.count(r"\pri{") == 24


def test_catalog_small(capsys):
    code, out, _ = run(capsys, "catalog", "--max-order", "10")
    assert code == 0
    assert "failed=0" in out


def test_catalog_odd_filter_uses_mapping_branch(capsys):
    code, out, _ = run(capsys, "catalog", "--max-order", "9", "--filter", "odd")
    assert code == 0
    for line in out.splitlines():
        if "branch=" in line:
            assert "complete-mapping" in line


def test_catalog_json(capsys):
    code, out, _ = run(capsys, "catalog", "--max-order", "6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["failed"] == 0
