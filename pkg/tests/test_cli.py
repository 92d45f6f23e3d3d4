import json

from twobridge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_surfaces_human(capsys):
    code, out, err = run(capsys, "surfaces", "S(49,19)")
    assert code == 0
    assert "-4/1" in out
    assert "non-orientable spanning: 9 (8 slope classes)" in out


def test_surfaces_alias_matches(capsys):
    code1, out1, _ = run(capsys, "surfaces", "9_27", "--json")
    code2, out2, _ = run(capsys, "surfaces", "S(49,19)", "--json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_surfaces_json_schema_and_determinism(capsys):
    code, out, _ = run(capsys, "surfaces", "S(5,2)", "--json")
    assert code == 0
    payload = json.loads(out)
    slopes = sorted(d["slope"] for d in payload["spanning"])
    assert slopes == ["-4/1", "0/1", "4/1"]
    for d in payload["spanning"]:
        assert set(d) == {"expansion", "slope", "chi", "orientable",
                          "boundary_components", "genus"}
    code, out2, _ = run(capsys, "surfaces", "S(5,2)", "--json")
    assert out == out2


def test_surfaces_tsv(capsys):
    code, out, _ = run(capsys, "surfaces", "S(3,1)", "--tsv")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert len(rows) == 2 and all(r[0] == "S(3,1)" for r in rows)


def test_surfaces_parse_error(capsys):
    code, out, err = run(capsys, "surfaces", "S(4,1)")
    assert code == 2
    assert "error" in err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "9_27", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["det"] == 49
    assert payload["delta2"] == 0
    assert payload["signature"] == 0
    assert payload["tau"] == 0
    assert payload["alexander"]["3"] == -1 and payload["alexander"]["0"] == 15


def test_obstruct_flagship(capsys):
    code, out, _ = run(capsys, "obstruct", "S(49,19)", "10/3", "-10/3")
    assert code == 0
    assert "DISTINGUISHED" in out
    assert '"verdict": "distinguished"' in out


def test_obstruct_json_verified(capsys):
    code, out, _ = run(capsys, "obstruct", "S(49,19)", "10/3", "-10/3",
                       "--json", "--verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"]["verdict"] == "distinguished"
    assert payload["verdict"]["upper_bound"]["resulting_genus"] == 5
    assert payload["verification"] == {"checked": True, "problems": []}
    assert payload["filters"]["niwu"]["survives"] is True
    assert payload["filters"]["boyer_lines_obstructs"] is False


def test_obstruct_equal_slopes_usage_error(capsys):
    code, out, err = run(capsys, "obstruct", "S(49,19)", "10/3", "10/3")
    assert code == 2


def test_obstruct_meridian_usage_error(capsys):
    code, out, err = run(capsys, "obstruct", "S(49,19)", "1/0", "10/3")
    assert code == 2


def test_unknown_command_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_scan_small(capsys):
    code, out, _ = run(capsys, "scan", "--max-p", "49", "--json", "--verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["knots"] == len([r for r in payload["records"]])
    rec = next(r for r in payload["records"] if r["knot"] == "S(49,19)")
    assert rec["filters_passed"]
    verdicts = {(p["r1"], p["r2"]): p["verdict"]["verdict"] for p in rec["pairs"]}
    assert verdicts[("10/3", "-10/3")] == "distinguished"
    for p in rec["pairs"]:
        assert p["niwu"]["survives"]
        assert p["verification"]["problems"] == []


def test_scan_tsv_and_human(capsys):
    code, out, _ = run(capsys, "scan", "--max-p", "15", "--tsv")
    assert code == 0
    assert out.strip()
    code, out, _ = run(capsys, "scan", "--max-p", "15")
    assert code == 0
    assert "scanned" in out
