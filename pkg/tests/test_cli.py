import json

import pytest

from crosscut.builders import expansion, lower_bound_coloring, s_construction
from crosscut.cli import main
from crosscut.fileio import dumps_coloring, save_structure
from crosscut.trees import path_graph


@pytest.fixture()
def files(tmp_path):
    paths = {}
    save_structure(path_graph(3), tmp_path / "p3.edges")
    save_structure(path_graph(5), tmp_path / "p5.edges")
    save_structure(path_graph(2), tmp_path / "p2.edges")
    save_structure(s_construction(10, 2), tmp_path / "s_10_2.edges")
    save_structure(expansion(path_graph(3)), tmp_path / "p3_expansion.edges")
    (tmp_path / "chi.txt").write_text(
        dumps_coloring(lower_bound_coloring(s_construction(8, 1)))
    )
    paths["dir"] = tmp_path
    return tmp_path


def test_tree_stats(files, capsys):
    assert main(["tree", "stats", str(files / "p3.edges")]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["sigma"] == 2
    assert data["strongly_edge_critical"] is True


def test_tree_enum(files, capsys):
    assert main(["tree", "enum", "--n", "5", "--out", str(files / "trees")]) == 0
    written = sorted((files / "trees").glob("*.edges"))
    assert len(written) == 3


def test_construct_and_contains_negative(files):
    # a long path does not expand into the two-apex system
    code = main(
        [
            "contains",
            "--pattern-kind",
            "expansion",
            "--pattern",
            str(files / "p5.edges"),
            "--host",
            str(files / "s_10_2.edges"),
        ]
    )
    assert code == 3


def test_contains_positive_with_certificate(files, capsys):
    cert = files / "cert.json"
    code = main(
        [
            "contains",
            "--pattern-kind",
            "expansion",
            "--pattern",
            str(files / "p3.edges"),
            "--host",
            str(files / "p3_expansion.edges"),
            "--certificate",
            str(cert),
        ]
    )
    assert code == 0
    check = main(
        ["check", "--certificate", str(cert), "--host", str(files / "p3_expansion.edges")]
    )
    assert check == 0


def test_certificate_check_catches_wrong_host(files):
    cert = files / "cert.json"
    main(
        [
            "contains",
            "--pattern-kind",
            "expansion",
            "--pattern",
            str(files / "p3.edges"),
            "--host",
            str(files / "p3_expansion.edges"),
            "--certificate",
            str(cert),
        ]
    )
    assert (
        main(
            ["check", "--certificate", str(cert), "--host", str(files / "s_10_2.edges")]
        )
        == 3
    )


def test_construct_writes_files(files):
    out = files / "s61.edges"
    assert main(["construct", "s", "--n", "6", "--t", "1", "--out", str(out)]) == 0
    assert out.read_text().startswith("kind=3graph n=6")


def test_rainbow_negative(files):
    code = main(
        [
            "rainbow",
            "--coloring",
            str(files / "chi.txt"),
            "--pattern",
            str(files / "p2.edges"),
        ]
    )
    assert code == 0  # a cherry fits rainbow in this coloring
    c4 = files / "c4.edges"
    c4.write_text("kind=graph n=4\n0 1\n1 2\n2 3\n0 3\n")
    assert (
        main(
            [
                "rainbow",
                "--coloring",
                str(files / "chi.txt"),
                "--pattern",
                str(c4),
            ]
        )
        == 3
    )


def test_rainbow_certificate_check(files):
    import itertools

    # an all-distinct coloring on 6 vertices admits a rainbow cherry
    lines = ["n=6"] + [
        f"{a} {b} {c} {i}"
        for i, (a, b, c) in enumerate(itertools.combinations(range(6), 3))
    ]
    chi_path = files / "alldistinct.txt"
    chi_path.write_text("\n".join(lines) + "\n")
    cert = files / "rainbow.json"
    assert (
        main(
            [
                "rainbow",
                "--coloring",
                str(chi_path),
                "--pattern",
                str(files / "p2.edges"),
                "--certificate",
                str(cert),
            ]
        )
        == 0
    )
    assert main(["check", "--certificate", str(cert), "--host", str(chi_path)]) == 0
    # under a constant coloring the recorded colors cannot stay distinct
    constant = files / "constant.txt"
    constant.write_text(
        "\n".join(
            ["n=6"]
            + [f"{a} {b} {c} 0" for a, b, c in itertools.combinations(range(6), 3)]
        )
        + "\n"
    )
    assert main(["check", "--certificate", str(cert), "--host", str(constant)]) == 3


def test_clean_trace_and_check(files, capsys):
    host = files / "s121.edges"
    save_structure(s_construction(12, 1), host)
    trace = files / "trace.json"
    assert main(["clean", "--k", "3", "--t", "1", "--in", str(host), "--trace", str(trace)]) == 0
    data = json.loads(trace.read_text())
    assert data["q"] == 0 and data["superfull"] is True
    assert main(["check", "--certificate", str(trace), "--host", str(host)]) == 0


def test_turan_cli_and_cache(files, capsys, tmp_path):
    cache = tmp_path / "cache"
    args = [
        "--cache-dir",
        str(cache),
        "turan",
        "--mode",
        "hypergraph",
        "--n",
        "5",
        "--pattern",
        str(files / "p2.edges"),
    ]
    assert main(args) == 0
    first = json.loads(capsys.readouterr().out)
    assert first["value"] == 4
    assert main(args) == 0
    second = json.loads(capsys.readouterr().out)
    first.pop("generated_at")
    second.pop("generated_at")
    assert first == second
    assert list(cache.glob("turan-*.json"))


def test_verify_cli(files, capsys):
    assert main(["verify", "--suite", "facts", "--max-n", "6"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["all_pass"] is True


def test_closeness_cli(files):
    host = files / "s202.edges"
    save_structure(s_construction(20, 2), host)
    assert (
        main(
            [
                "closeness",
                "--kind",
                "3graph",
                "--t",
                "2",
                "--delta",
                "0.1",
                "--in",
                str(host),
            ]
        )
        == 0
    )


def test_anti_ramsey_cli(files, capsys):
    c4 = files / "c4.edges"
    c4.write_text("kind=graph n=4\n0 1\n1 2\n2 3\n0 3\n")
    code = main(
        [
            "anti-ramsey",
            "--tree",
            str(files / "p3.edges"),
            "--aug",
            str(c4),
            "--n",
            "8",
        ]
    )
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["lower"] == 23 and data["upper_formula"] == 23


def test_usage_and_input_errors(files, tmp_path):
    assert main(["contains", "--pattern-kind", "bogus"]) == 2
    bad = tmp_path / "bad.edges"
    bad.write_text("kind=graph n=2\n0 5\n")
    assert main(["tree", "stats", str(bad)]) == 5


def test_budget_exit_code(files):
    assert (
        main(
            [
                "turan",
                "--mode",
                "hypergraph",
                "--n",
                "9",
                "--pattern",
                str(files / "p2.edges"),
            ]
        )
        == 4
    )


def test_deterministic_outputs_byte_identical(files, capsys):
    argv = ["tree", "stats", str(files / "p3.edges")]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    strip = lambda s: "\n".join(
        l for l in s.splitlines() if '"generated_at"' not in l
    )
    assert strip(first) == strip(second)


def test_config_file(files, tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("max_nodes = 1000000\nworkers = 2\n# comment\n")
    assert main(["--config", str(cfg), "tree", "stats", str(files / "p3.edges")]) == 0


def test_csv_output(files, capsys):
    assert (
        main(
            [
                "--output-format",
                "csv",
                "verify",
                "--suite",
                "cycles",
                "--max-n",
                "6",
            ]
        )
        == 0
    )
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0].split(",") == ["details", "name", "status"]
    assert len(lines) == 5
    assert (
        main(
            [
                "--output-format",
                "csv",
                "turan",
                "--mode",
                "hypergraph",
                "--n",
                "5",
                "--pattern",
                str(files / "p2.edges"),
            ]
        )
        == 0
    )
    table = capsys.readouterr().out.strip().splitlines()
    assert "value" in table[0].split(",")
    assert len(table) == 2
