import pytest

from deltamatroids import formats
from deltamatroids.cli import main
from deltamatroids.core import lookup, make_set_system


@pytest.fixture()
def ss_file(tmp_path):
    def write(name, system):
        path = tmp_path / name
        path.write_text(formats.emit_set_system(system))
        return str(path)

    return write


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ss_check_s12(ss_file, capsys):
    path = ss_file("s12.txt", lookup("s12"))
    code, out, _ = run(capsys, ["ss", "check", path])
    assert code == 0
    assert out.splitlines() == [
        "proper true",
        "delta-matroid true",
        "even false",
        "binary true",
        "empty-feasible true",
    ]


def test_ss_check_slid_family(ss_file, capsys):
    path = ss_file("bad.txt", make_set_system(3, [0b000, 0b011, 0b110, 0b111]))
    code, out, _ = run(capsys, ["ss", "check", path])
    assert code == 0
    assert "delta-matroid false" in out.splitlines()


def test_ss_transforms_round_trip(ss_file, capsys):
    path = ss_file("s23.txt", lookup("s23"))
    code, out, _ = run(capsys, ["ss", "slide", path, "-a", "0", "-b", "1"])
    assert code == 0
    assert formats.parse_set_system(out) == make_set_system(2, [0b00, 0b10])
    code, out, _ = run(capsys, ["ss", "twist", path, "--mask", "3"])
    assert code == 0
    assert formats.parse_set_system(out) == make_set_system(2, [0b01, 0b10, 0b11])


def test_ss_fourterm_blocks(ss_file, capsys):
    path = ss_file("s23.txt", lookup("s23"))
    code, out, _ = run(capsys, ["ss", "fourterm", path, "-a", "0", "-b", "1"])
    assert code == 0
    assert out.startswith("+1\n") and out.count("-1\n") == 2


def test_ss_canon_idempotent(ss_file, capsys):
    path = ss_file("swapped.txt", make_set_system(2, [0b10]))
    code, out, _ = run(capsys, ["ss", "canon", path])
    assert code == 0
    canon_once = formats.parse_set_system(out)
    assert canon_once == make_set_system(2, [0b01])


def test_exit_code_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("setsystem n=2\nphi 0x9\n")
    code, _, err = run(capsys, ["ss", "check", str(bad)])
    assert code == 2
    assert "parse error" in err


def test_exit_code_domain_error(ss_file, capsys):
    path = ss_file("s23.txt", lookup("s23"))
    code, _, err = run(capsys, ["ss", "slide", path, "-a", "1", "-b", "1"])
    assert code == 3
    assert "error" in err


def test_exit_code_usage_error(capsys):
    code, _, err = run(capsys, ["ss", "slide", "--nope"])
    assert code == 2


def test_graph_pipeline(tmp_path, capsys):
    mat = tmp_path / "path.txt"
    mat.write_text("f2matrix n=3\n010\n101\n010\n")
    code, out, _ = run(capsys, ["graph", "dm", str(mat)])
    assert code == 0
    assert formats.parse_set_system(out) == make_set_system(3, [0b000, 0b011, 0b110])
    code, out, _ = run(capsys, ["graph", "slide", str(mat), "-a", "0", "-b", "1"])
    assert code == 0
    assert out == "f2matrix n=3\n011\n101\n110\n"


def test_graph_recognize(ss_file, capsys):
    path = ss_file("s25.txt", lookup("s25"))
    code, out, _ = run(capsys, ["graph", "recognize", path])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "binary true"
    assert lines[1] == "twist 0x1"
    path = ss_file("bad.txt", make_set_system(3, [0b000, 0b011, 0b110, 0b111]))
    code, out, _ = run(capsys, ["graph", "recognize", path])
    assert code == 0 and out.strip() == "binary false"


def test_chord_pipeline(tmp_path, capsys):
    f = tmp_path / "c.txt"
    f.write_text("chords: a b a b\n")
    code, out, _ = run(capsys, ["chord", "igraph", str(f)])
    assert code == 0
    assert out == "f2matrix n=2\n01\n10\n"
    code, out, _ = run(capsys, ["chord", "dm", str(f)])
    assert code == 0
    assert formats.parse_set_system(out) == lookup("s21")
    code, out, _ = run(capsys, ["chord", "slide", str(f), "-a", "a", "-b", "b"])
    assert code == 0
    slid = formats.parse_chords(out)
    assert sorted(slid.labels) == ["a", "b"]


def test_ribbon_pipeline(tmp_path, capsys):
    f = tmp_path / "loop.txt"
    f.write_text("ribbon v=1 e=1\nv 0: 0 1\ne 0: (0,1) +\n")
    code, out, _ = run(capsys, ["ribbon", "dm", str(f)])
    assert code == 0
    assert formats.parse_set_system(out) == lookup("s11")
    f.write_text("ribbon v=1 e=1\nv 0: 0 1\ne 0: (0,1) -\n")
    code, out, _ = run(capsys, ["ribbon", "boundary", str(f), "--edges", "1"])
    assert code == 0 and out.strip() == "1"
    two = tmp_path / "two.txt"
    two.write_text("ribbon v=2 e=1\nv 0: 0 1\nv 1:\ne 0: (0,1) +\n")
    code, _, err = run(capsys, ["ribbon", "dm", str(two)])
    assert code == 3


def test_hopf_dims(capsys):
    code, out, _ = run(
        capsys, ["hopf", "dims", "--flavor", "B", "--degree", "2", "--what", "basis"]
    )
    assert code == 0 and out.strip() == "11"
    code, out, _ = run(
        capsys,
        ["hopf", "dims", "--flavor", "FB", "--degree", "2", "--what", "quotient"],
    )
    assert code == 0 and out.strip() == "10"
    code, out, _ = run(
        capsys,
        [
            "hopf",
            "dims",
            "--flavor",
            "FB",
            "--degree",
            "2",
            "--what",
            "quotient-primitive",
        ],
    )
    assert code == 0 and out.strip() == "4"


def test_hopf_table1_reports_reference_mismatch(capsys):
    # the FK row cannot match the reference values; see the notes in the
    # acceptance suite
    code, out, err = run(capsys, ["hopf", "table1"])
    assert code == 4
    assert "FK" in out and "FAIL" in out


def test_inv_commands(tmp_path, capsys):
    f = tmp_path / "s22.txt"
    f.write_text(formats.emit_set_system(lookup("s22")))
    code, out, _ = run(
        capsys,
        ["inv", "tutte", str(f), "-x", "1", "-y", "1", "-z", "1", "-w", "1", "--audit"],
    )
    assert code == 0
    assert out.splitlines() == ["3", "order-independent"]
    code, out, _ = run(
        capsys,
        [
            "inv", "tutte", str(f),
            "-x", "1", "-y", "2", "-z", "3", "-w", "4", "--audit",
        ],
    )
    assert code == 0
    assert out.splitlines()[1] == "order-dependent"
    code, out, _ = run(
        capsys,
        ["inv", "solve", "--n", "2", "-x", "1", "-y", "1", "-z", "1", "-w", "1"],
    )
    assert code == 0
    assert out.splitlines()[0] == "dimension 0"
    code, out, _ = run(
        capsys,
        ["inv", "solve", "--n", "2", "-x", "1", "-y", "2", "-z", "3", "-w", "4"],
    )
    assert code == 0 and out.strip() == "infeasible"
    code, out, _ = run(capsys, ["inv", "conway", str(f)])
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, ["inv", "logwc", "--degree", "2"])
    assert code == 0
    assert any(line.endswith("value=1") for line in out.splitlines())


def test_outputs_reparse(ss_file, capsys):
    # every emitted set system re-parses to an equal value
    path = ss_file("s24.txt", lookup("s24"))
    for argv in (
        ["ss", "twist", path, "--mask", "1"],
        ["ss", "exchange", path, "-a", "0", "-b", "1"],
        ["ss", "delete", path, "-e", "0"],
        ["ss", "contract", path, "-e", "1"],
        ["ss", "restrict", path, "--mask", "1"],
        ["ss", "canon", path],
    ):
        code, out, _ = run(capsys, argv)
        assert code == 0
        reparsed = formats.parse_set_system(out)
        assert formats.emit_set_system(reparsed) == out
