import json
import subprocess
import sys

from irrcolor.cli import main
from irrcolor.graphs import parse_graph6, to_graph6

from conftest import cycle, complete


C4_EDGELIST = "4 4\n0 1\n1 2\n2 3\n3 0\n"


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def strip_timings(report):
    for rec in report.get("graphs", []):
        rec.pop("timings", None)
    return report


def test_invariants_edgelist_c4(tmp_path, capsys):
    src = tmp_path / "c4.txt"
    src.write_text(C4_EDGELIST)
    code, out, _ = run_cli(
        capsys,
        [
            "invariants",
            str(src),
            "--format",
            "edgelist",
            "--invariants",
            "chi,ir,gamma,chi_i,irc_colorable,chi_irc",
            "--json",
        ],
    )
    assert code == 0
    report = json.loads(out)
    values = {k: v["value"] for k, v in report["graphs"][0]["invariants"].items()}
    assert values == {
        "chi": 2,
        "ir": 2,
        "gamma": 2,
        "chi_i": 2,
        "irc_colorable": True,
        "chi_irc": 2,
    }


def test_invariants_k5_graph6(tmp_path, capsys):
    src = tmp_path / "k5.g6"
    src.write_text(to_graph6(complete(5)).decode() + "\n")
    code, out, _ = run_cli(
        capsys, ["invariants", str(src), "--invariants", "chi_i,irc_colorable", "--json"]
    )
    assert code == 0
    report = json.loads(out)
    inv = report["graphs"][0]["invariants"]
    assert inv["chi_i"]["value"] == 5
    assert inv["irc_colorable"]["value"] is False


def test_invariants_malformed_graph6_exits_64(tmp_path, capsys):
    src = tmp_path / "bad.g6"
    src.write_text("Dxx!!\n")
    code, _, err = run_cli(capsys, ["invariants", str(src)])
    assert code == 64
    assert "line 1" in err


def test_invariants_unknown_invariant_exits_65(tmp_path, capsys):
    src = tmp_path / "k3.g6"
    src.write_text(to_graph6(complete(3)).decode() + "\n")
    code, _, _ = run_cli(capsys, ["invariants", str(src), "--invariants", "chi,zeta"])
    assert code == 65


def test_invariants_deterministic_modulo_timings(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text(
        "\n".join(to_graph6(cycle(n)).decode() for n in range(3, 8)) + "\n"
    )
    args = ["invariants", str(src), "--json"]
    code1, out1, _ = run_cli(capsys, args)
    code2, out2, _ = run_cli(capsys, args)
    assert code1 == code2 == 0
    r1 = strip_timings(json.loads(out1))
    r2 = strip_timings(json.loads(out2))
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)


def test_invariants_size_cap_marker(tmp_path, capsys):
    # a 24-vertex cycle is over the chi_i cap but chi still computes
    src = tmp_path / "c24.g6"
    src.write_text(to_graph6(cycle(24)).decode() + "\n")
    code, out, _ = run_cli(
        capsys, ["invariants", str(src), "--invariants", "chi,chi_i", "--json"]
    )
    assert code == 0
    inv = json.loads(out)["graphs"][0]["invariants"]
    assert inv["chi"]["value"] == 2
    assert inv["chi_i"]["status"] == "skipped(cap)"


def test_invariants_parallel_matches_serial(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text(
        "\n".join(to_graph6(cycle(n)).decode() for n in range(3, 9)) + "\n"
    )
    _, serial, _ = run_cli(capsys, ["invariants", str(src), "--json"])
    _, parallel, _ = run_cli(capsys, ["invariants", str(src), "--jobs", "2", "--json"])
    a = strip_timings(json.loads(serial))
    b = strip_timings(json.loads(parallel))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_gen_writes_graph_and_sidecar(tmp_path, capsys):
    out = tmp_path / "a63.g6"
    code, _, _ = run_cli(capsys, ["gen", "A", "6", "3", "--out", str(out)])
    assert code == 0
    g = parse_graph6(out.read_text().strip())
    assert g.n == 6
    sidecar = json.loads((tmp_path / "a63.g6.json").read_text())
    assert sidecar["claims"]["chi_i"] == {"value": 3, "exact": True}
    assert sidecar["labels"][0] == "v1"


def test_gen_edgelist_format(tmp_path, capsys):
    out = tmp_path / "tilde3.txt"
    code, _, _ = run_cli(
        capsys, ["gen", "tilde", "3", "--format", "edgelist", "--out", str(out)]
    )
    assert code == 0
    first = out.read_text().splitlines()[0]
    assert first.startswith("27 ")


def test_gen_sidecar_coloring_replays(tmp_path, capsys):
    from irrcolor.coloring import Coloring
    from irrcolor.irc import is_irc_coloring

    out = tmp_path / "t3.g6"
    code, _, _ = run_cli(capsys, ["gen", "tilde", "3", "--out", str(out)])
    assert code == 0
    g = parse_graph6(out.read_text().strip())
    sidecar = json.loads((tmp_path / "t3.g6.json").read_text())
    colors = sidecar["coloring"]
    col = Coloring(tuple(colors), max(colors) + 1)
    assert is_irc_coloring(g, col).is_irc


def test_gen_bad_params_exit_65(capsys):
    code, _, err = run_cli(capsys, ["gen", "Z", "2", "5"])
    assert code == 65
    assert "at least 3" in err
    code, _, _ = run_cli(capsys, ["gen", "A", "6"])
    assert code == 65
    code, _, _ = run_cli(capsys, ["gen", "nosuch", "1"])
    assert code == 65


def test_gen_fixture(tmp_path, capsys):
    code, out, _ = run_cli(capsys, ["gen", "fixture", "tree7"])
    assert code == 0
    line = out.splitlines()[0]
    assert parse_graph6(line).n == 7


def test_scan_chain_exit_codes(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text(
        "\n".join(to_graph6(cycle(n)).decode() for n in (3, 4, 5, 6)) + "\n"
    )
    code, out, _ = run_cli(capsys, ["scan", "chain", str(src), "--json"])
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["violations"] == 0
    code, _, _ = run_cli(capsys, ["scan", "chain", str(tmp_path / "missing.g6")])
    assert code == 64


def test_scan_conjecture_smoke(tmp_path, capsys):
    from irrcolor.families import gen_cut_vertex, gen_tilde

    src = tmp_path / "graphs.g6"
    lines = [
        to_graph6(cycle(4)).decode(),
        to_graph6(gen_cut_vertex(3).graph).decode(),
        to_graph6(gen_tilde(3).graph).decode(),
    ]
    src.write_text("\n".join(lines) + "\n")
    code, out, _ = run_cli(capsys, ["scan", "conjecture", str(src), "--json"])
    assert code == 0
    report = json.loads(out)
    verdicts = [rec["invariants"]["conjecture"]["value"] for rec in report["graphs"]]
    assert verdicts == ["holds", "holds", "holds"]


def test_scan_characterization_smoke(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text(
        "\n".join(to_graph6(g).decode() for g in (cycle(6), cycle(8), complete(3))) + "\n"
    )
    code, out, _ = run_cli(capsys, ["scan", "characterization", str(src), "--json"])
    assert code == 0
    report = json.loads(out)
    states = [rec["invariants"]["characterization"] for rec in report["graphs"]]
    assert states[0]["value"] == "agree"
    assert states[1]["value"] == "agree"
    assert states[2]["status"] == "skipped"


def test_verify_scope(capsys):
    code, out, _ = run_cli(capsys, ["verify", "family-a", "--json"])
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["failed"] == 0
    assert all(c["status"] == "pass" for c in report["claims"])
    code, _, _ = run_cli(capsys, ["verify", "nosuch"])
    assert code == 65


def test_invariants_witnesses_flag(tmp_path, capsys):
    src = tmp_path / "c4.g6"
    src.write_text(to_graph6(cycle(4)).decode() + "\n")
    code, out, _ = run_cli(
        capsys,
        ["invariants", str(src), "--invariants", "chi,ir", "--witnesses", "--json"],
    )
    assert code == 0
    rec = json.loads(out)["graphs"][0]
    assert rec["witnesses"]["chi"]["coloring"] == [0, 1, 0, 1]
    assert len(rec["witnesses"]["ir"]["set"]) == 2


def test_budget_marks_skipped():
    from irrcolor.budget import Deadline
    from irrcolor.cli import _graph_record

    rec = _graph_record(0, cycle(6), ("chi_i",), Deadline(0.0))
    assert rec["invariants"]["chi_i"]["status"] == "skipped(budget)"


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "irrcolor", "gen", "B", "6", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert parse_graph6(proc.stdout.splitlines()[0]).n == 6
