import json

import pytest

from intervalsat.cli import dispatch


@pytest.fixture
def crossing(tmp_path):
    # two crossing unit clauses: minimum merge k is 1
    f = tmp_path / "f.cnf"
    f.write_text("p cnf 2 2\n2 0\n1 0\n")
    o = tmp_path / "o.txt"
    o.write_text("v 1 2\nc 1 2\n")
    return f, o


def run(capsys, argv):
    rc = dispatch([str(a) for a in argv])
    return rc, capsys.readouterr().out


def test_merge_reports_k_and_ordering(capsys, crossing):
    f, o = crossing
    rc, out = run(capsys, ["merge", f, "--orders", o])
    assert rc == 0
    assert out == "k: 1\nordering: x1 x2 c1 c2\n"


def test_merge_identity_orders_default(capsys, crossing):
    f, o = crossing
    rc, out = run(capsys, ["merge", f])
    assert rc == 0 and "k: 1" in out


def test_solve_count(capsys, tmp_path):
    f = tmp_path / "g.cnf"
    f.write_text("p cnf 2 1\n1 2 0\n")
    pi = tmp_path / "pi.txt"
    pi.write_text("x1 x2 c1\n")
    rc, out = run(capsys, ["solve", f, "--ordering", pi, "--mode", "count"])
    assert rc == 0
    assert out.splitlines()[0] == "models: 3"


def test_solve_requires_an_ordering_source(capsys, tmp_path):
    f = tmp_path / "g.cnf"
    f.write_text("p cnf 1 1\n1 0\n")
    rc = dispatch(["solve", str(f)])
    assert rc == 2


def test_solve_maxsat_witness(capsys, tmp_path):
    f = tmp_path / "w.cnf"
    f.write_text("p wcnf 1 2\n2 1 0\n3 -1 0\n")
    pi = tmp_path / "pi.txt"
    pi.write_text("x1 c1 c2\n")
    rc, out = run(capsys, ["solve", f, "--ordering", pi, "--mode", "maxsat"])
    assert rc == 0
    lines = dict(l.split(": ", 1) for l in out.splitlines())
    assert lines["weight"] == "3"
    assert lines["witness"] == "-1"


def test_pipeline_equals_merge_plus_solve(capsys, crossing):
    f, o = crossing
    rc, merged = run(capsys, ["merge", f, "--orders", o])
    pi = f.parent / "pi.txt"
    pi.write_text(merged.splitlines()[1].split(": ", 1)[1] + "\n")
    rc, solved = run(capsys, ["solve", f, "--ordering", pi, "--mode", "count"])
    rc, piped = run(capsys, ["pipeline", f, "--orders", o, "--mode", "count"])
    assert rc == 0
    assert piped == merged + solved


def test_check_violation_exit_code(capsys, tmp_path):
    f = tmp_path / "f.cnf"
    f.write_text("p cnf 2 1\n1 0\n")
    pi = tmp_path / "pi.txt"
    pi.write_text("x1 x2 c1\n")
    rc, out = run(capsys, ["check", f, "--ordering", pi])
    assert rc == 1
    assert "ok: false" in out
    assert "violation: c1 x2 Cond1" in out
    assert "needed c1: x2" in out
    pi.write_text("x1 c1 x2\n")
    rc, out = run(capsys, ["check", f, "--ordering", pi])
    assert rc == 0 and "ok: true" in out


def test_obstruct_exit_codes(capsys, crossing, tmp_path):
    f, o = crossing
    rc, out = run(capsys, ["obstruct", f, "--orders", o])
    assert rc == 1
    assert "LeftPattern" in out
    f2 = tmp_path / "clean.cnf"
    f2.write_text("p cnf 2 2\n1 0\n2 0\n")
    rc, out = run(capsys, ["obstruct", f2])
    assert rc == 0 and out == "obstruction: none\n"


def test_json_output_fields(capsys, crossing):
    f, o = crossing
    rc, out = run(capsys, ["pipeline", f, "--orders", o, "--json"])
    obj = json.loads(out)
    assert obj["command"] == "pipeline"
    assert obj["k"] == 1
    assert obj["ordering"] == "x1 x2 c1 c2"
    assert obj["answer"] == 1
    assert "stateMax" in obj
    assert "timings" not in obj


def test_expand_files_and_map(capsys, tmp_path):
    f = tmp_path / "f.cnf"
    f.write_text("p cnf 2 1\n1 0\n")
    pi = tmp_path / "pi.txt"
    pi.write_text("x1 x2 c1\n")
    out_cnf = tmp_path / "out.cnf"
    out_map = tmp_path / "out.map"
    out_ord = tmp_path / "out.ord"
    rc, out = run(capsys, ["expand", f, "--ordering", pi, "--out", out_cnf,
                           "--map", out_map, "--out-ordering", out_ord])
    assert rc == 0
    assert out_cnf.read_text() == "p cnf 2 2\n1 -2 0\n1 2 0\n"
    assert out_map.read_text() == "parent: 1 -> 1 2\n"
    assert out_ord.read_text() == "x1 x2 c1 c2\n"


def test_expand_stdout_default(capsys, tmp_path):
    f = tmp_path / "f.cnf"
    f.write_text("p cnf 1 1\n1 0\n")
    pi = tmp_path / "pi.txt"
    pi.write_text("x1 c1\n")
    rc, out = run(capsys, ["expand", f, "--ordering", pi])
    assert rc == 0 and out == "p cnf 1 1\n1 0\n"


def test_pswidth(capsys, tmp_path):
    f = tmp_path / "f.cnf"
    f.write_text("p cnf 2 1\n1 2 0\n")
    pi = tmp_path / "pi.txt"
    pi.write_text("x1 c1 x2\n")
    rc, out = run(capsys, ["pswidth", f, "--ordering", pi])
    assert rc == 0 and out.startswith("psWidth: ")


def test_oracle_subcommands(capsys, crossing):
    f, o = crossing
    rc, out = run(capsys, ["oracle", "count", f])
    assert rc == 0 and out == "models: 1\n"
    rc, out = run(capsys, ["oracle", "maxsat", f])
    assert rc == 0 and out.splitlines()[0] == "weight: 2"
    rc, out = run(capsys, ["oracle", "mergek", f, "--orders", o])
    assert rc == 0 and out == "k: 1\n"


def test_gen_random_requires_seed(tmp_path, capsys):
    rc = dispatch(["gen", "random", "--n", "4", "--m", "3", "--k", "0",
                   "--width", "2", "--out", str(tmp_path / "a.cnf"),
                   "--out-ordering", str(tmp_path / "a.ord")])
    assert rc == 2


def test_gen_random_deterministic(tmp_path, capsys):
    paths = [(tmp_path / f"r{i}.cnf", tmp_path / f"r{i}.ord") for i in (1, 2)]
    for cnf, ordf in paths:
        rc = dispatch(["gen", "random", "--n", "6", "--m", "4", "--k", "1",
                       "--width", "3", "--seed", "12", "--out", str(cnf),
                       "--out-ordering", str(ordf)])
        assert rc == 0
    capsys.readouterr()
    assert paths[0][0].read_bytes() == paths[1][0].read_bytes()
    assert paths[0][1].read_bytes() == paths[1][1].read_bytes()


def test_gen_3part_stdout_and_files(capsys, tmp_path):
    rc, out = run(capsys, ["gen", "3part", "--b", "9", "--sizes", "3,3,3"])
    assert rc == 0
    assert out.startswith("p labeled-bigraph 45 61\n")
    rep = tmp_path / "rep.txt"
    rc, out = run(capsys, ["gen", "3part", "--b", "9", "--sizes", "3,3,3",
                           "--out", tmp_path / "g.txt", "--partition", "1,2,3",
                           "--rep", rep])
    assert rc == 0
    assert "representation-ok: true" in out
    first = rep.read_text().splitlines()[0].split()
    assert len(first) == 3


def test_gen_3part_rejects_rep_without_partition(capsys, tmp_path):
    rc = dispatch(["gen", "3part", "--b", "9", "--sizes", "3,3,3",
                   "--rep", str(tmp_path / "rep.txt")])
    assert rc == 2


def test_report_writes_csv_and_figure(capsys, tmp_path):
    f = tmp_path / "f.cnf"
    f.write_text("p cnf 2 2\n1 0\n1 2 0\n")
    pi = tmp_path / "pi.txt"
    pi.write_text("x1 c1 x2 c2\n")
    rc, out = run(capsys, ["report", f, "--ordering", pi,
                           "--outdir", tmp_path / "rep", "--pswidth"])
    assert rc == 0
    csv_text = (tmp_path / "rep" / "cut_profile.csv").read_text()
    assert csv_text.splitlines()[0] == \
        "cut,element,live_states,distinct_sat_sets,ps_prefix,ps_suffix"
    assert len(csv_text.splitlines()) == 5
    assert (tmp_path / "rep" / "cut_profile.png").stat().st_size > 0


def test_missing_file_is_usage_error(capsys, tmp_path):
    rc = dispatch(["merge", str(tmp_path / "absent.cnf")])
    assert rc == 2


def test_bad_dimacs_is_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.cnf"
    f.write_text("p cnf 1 1\n2 0\n")
    rc = dispatch(["merge", str(f)])
    assert rc == 2


def test_merge_strips_and_reports_empty_clauses(capsys, tmp_path):
    f = tmp_path / "e.cnf"
    f.write_text("p cnf 2 3\n2 0\n0\n1 0\n")
    rc, out = run(capsys, ["merge", f])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "empty clauses removed: c2"
    assert lines[1] == "k: 1"
    # ordering keeps the surviving clauses' original ids
    assert lines[2] == "ordering: x1 x2 c1 c3"
    rc, out = run(capsys, ["pipeline", f, "--mode", "count"])
    assert rc == 0
    assert "models: 0" in out  # an empty clause admits no models
    rc, out = run(capsys, ["pipeline", f, "--mode", "maxsat"])
    assert "weight: 2" in out  # both unit clauses satisfiable, empty forfeited


def test_cap_exceeded_is_operational_error(capsys, tmp_path):
    f = tmp_path / "wide.cnf"
    lits = " ".join(str(i) for i in range(1, 22))
    f.write_text(f"p cnf 21 1\n{lits} 0\n")
    rc = dispatch(["oracle", "count", str(f)])
    assert rc == 1
