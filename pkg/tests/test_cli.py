import io

import pytest

from strongcolor import emit_graph, erdos_nesetril_5, parse_coloring, parse_graph, verify
from strongcolor.cli import main


def run_cli(capsys, monkeypatch, argv, stdin: str = ""):
    if stdin:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_is_deterministic(capsys, monkeypatch):
    argv = ["gen", "random_max4", "--n", "30", "--seed", "5"]
    code1, out1, _ = run_cli(capsys, monkeypatch, argv)
    code2, out2, _ = run_cli(capsys, monkeypatch, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    g = parse_graph(out1)
    assert g.vertex_count == 30
    assert g.max_degree() <= 4


def test_gen_fixed_kind_ignores_n(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch, ["gen", "erdos_nesetril_5"])
    assert code == 0
    assert out == emit_graph(erdos_nesetril_5())


def test_gen_flags(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, monkeypatch,
        ["gen", "random_max4", "--n", "12", "--seed", "9", "--loops", "--parallel"],
    )
    assert code == 0
    assert parse_graph(out).max_degree() <= 4


def test_gen_rejects_unknown_kind(capsys, monkeypatch):
    with pytest.raises(SystemExit):
        main(["gen", "mystery"])


def test_stats_fields(capsys, monkeypatch):
    _, graph_text, _ = run_cli(capsys, monkeypatch, ["gen", "erdos_nesetril_5"])
    code, out, _ = run_cli(capsys, monkeypatch, ["stats", "-"], stdin=graph_text)
    assert code == 0
    lines = out.splitlines()
    assert "n=10" in lines
    assert "m=20" in lines
    assert "max_degree=4" in lines
    assert "min_degree=4" in lines
    assert "has_loop=no" in lines
    assert "has_parallel=no" in lines
    assert "girth=4" in lines
    assert "max_conflict_set=19" in lines


def test_stats_forest_girth_none(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, monkeypatch, ["stats", "-"], stdin="p sec 3 2\ne 1 2\ne 2 3\n"
    )
    assert code == 0
    assert "girth=none" in out.splitlines()


def test_color_pipeline_from_stdin(capsys, monkeypatch):
    _, graph_text, _ = run_cli(capsys, monkeypatch, ["gen", "erdos_nesetril_5"])
    code, out, _ = run_cli(capsys, monkeypatch, ["color", "-"], stdin=graph_text)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "component 1: strategy=girth4 edges=20 colors=20"
    assert "colors_used=20" in lines
    assert "FALLBACK=0" in lines


def test_color_writes_coloring_and_verify_accepts(capsys, monkeypatch, tmp_path):
    graph_file = tmp_path / "g.sec"
    coloring_file = tmp_path / "c.txt"
    _, graph_text, _ = run_cli(
        capsys, monkeypatch, ["gen", "random_max4", "--n", "40", "--seed", "11"]
    )
    graph_file.write_text(graph_text)

    code, out, _ = run_cli(
        capsys, monkeypatch, ["color", str(graph_file), "--out", str(coloring_file)]
    )
    assert code == 0
    col = parse_coloring(coloring_file.read_text(), parse_graph(graph_text))
    assert col.is_total()
    assert verify(col) == []

    code, out, _ = run_cli(
        capsys, monkeypatch, ["verify", str(graph_file), str(coloring_file)]
    )
    assert code == 0
    assert out.strip() == "OK"


def test_verify_flags_conflicts_and_gaps(capsys, monkeypatch, tmp_path):
    graph_file = tmp_path / "g.sec"
    coloring_file = tmp_path / "c.txt"
    graph_file.write_text("p sec 3 2\ne 1 2\ne 2 3\n")
    coloring_file.write_text("0 1\n1 1\n")
    code, out, _ = run_cli(
        capsys, monkeypatch, ["verify", str(graph_file), str(coloring_file)]
    )
    assert code == 1
    assert "edges 0 and 1 both have color 1" in out

    coloring_file.write_text("0 1\n")
    code, out, _ = run_cli(
        capsys, monkeypatch, ["verify", str(graph_file), str(coloring_file)]
    )
    assert code == 1
    assert "uncolored: 1 edges" in out


def test_exact_pentagon(capsys, monkeypatch, tmp_path):
    graph_file = tmp_path / "c5.sec"
    witness_file = tmp_path / "w.txt"
    graph_file.write_text("p sec 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n")
    code, out, _ = run_cli(
        capsys, monkeypatch, ["exact", str(graph_file), "--out", str(witness_file)]
    )
    assert code == 0
    assert out.strip() == "5"
    g = parse_graph(graph_file.read_text())
    col = parse_coloring(witness_file.read_text(), g)
    assert col.is_total()
    assert verify(col) == []


def test_exact_bound_too_low(capsys, monkeypatch, tmp_path):
    graph_file = tmp_path / "c5.sec"
    graph_file.write_text("p sec 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n")
    code, _, err = run_cli(capsys, monkeypatch, ["exact", str(graph_file), "--ub", "4"])
    assert code == 1
    assert "error:" in err


def test_bench_csv_shape(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch, ["bench", "--sizes", "100,300"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,m,millis,colors"
    assert len(lines) == 3
    for line, n in zip(lines[1:], (100, 300)):
        fields = line.split(",")
        assert int(fields[0]) == n
        assert int(fields[3]) <= 22


def test_bench_deterministic_except_timing(capsys, monkeypatch):
    argv = ["bench", "--sizes", "200", "--seed", "3"]
    _, out1, _ = run_cli(capsys, monkeypatch, argv)
    _, out2, _ = run_cli(capsys, monkeypatch, argv)
    strip = lambda out: [
        (f[0], f[1], f[3])
        for f in (line.split(",") for line in out.strip().splitlines()[1:])
    ]
    assert strip(out1) == strip(out2)


def test_malformed_graph_file_errors(capsys, monkeypatch):
    code, out, err = run_cli(capsys, monkeypatch, ["stats", "-"], stdin="junk\n")
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_missing_file_errors(capsys, monkeypatch):
    code, _, err = run_cli(capsys, monkeypatch, ["color", "/does/not/exist.sec"])
    assert code == 1
    assert "error:" in err


def test_degree_overflow_errors(capsys, monkeypatch):
    k6 = ["p sec 6 15"] + [
        f"e {u + 1} {v + 1}" for u in range(6) for v in range(u + 1, 6)
    ]
    code, _, err = run_cli(capsys, monkeypatch, ["color", "-"], stdin="\n".join(k6) + "\n")
    assert code == 1
    assert "degree" in err
