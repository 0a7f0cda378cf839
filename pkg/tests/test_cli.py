from __future__ import annotations

import os

import pytest

from musicbox.cli import main
from musicbox.patterns import MultiPattern
from test_textio import SYSTEM


@pytest.fixture
def files(tmp_path):
    def put(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return put


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_pattern_and_system(files, capsys):
    code, out, _ = run(capsys, "check", files("p.txt", "0 . 1\n1 0 .\n"))
    assert code == 0 and out == "pattern: multiplicity 2, arity 2, length 3\n"
    code, out, _ = run(capsys, "check", files("s.sys", SYSTEM))
    assert code == 0 and out == "ok\n"
    code, out, _ = run(capsys, "check", files("bad.sys", "colors a\ninitial a\nrule a : a c { 0 0 }\n"))
    assert code == 1 and "unknown color c" in out and out.endswith("invalid\n")


def test_exit_codes(files, capsys, tmp_path):
    assert run(capsys, "check", str(tmp_path / "missing"))[0] == 2
    code, _, err = run(capsys, "check", files("broken.txt", "0 x\n"))
    assert code == 1 and "FormatError" in err
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--mode", "sideways"])
    assert exc.value.code == 2
    capsys.readouterr()
    p = files("p.txt", "0 1\n")
    assert run(capsys, "transform", p, "--op", "rep")[0] == 2
    assert run(capsys, "transform", p, "--op", "wat")[0] == 2
    assert run(capsys, "transform", p, "--op", "rep:0")[0] == 1


def test_compose(files, capsys, tmp_path):
    left = files("x.txt", "-2 . . 1 .\n. 2 . 3 .\n")
    right = files("y.txt", "0 1 .\n2 . 1\n")
    out_path = tmp_path / "xy.txt"
    code, out, _ = run(capsys, "compose", "--left", left, "--pos", "2", "--right", right, "--out", str(out_path))
    assert code == 0 and out == ""
    expected = MultiPattern.parse("-2 . . 1 2 . . ; . 2 . 5 . 4 .")
    assert MultiPattern.parse(out_path.read_text()) == expected


def test_failed_command_leaves_no_file(files, capsys, tmp_path):
    left = files("x.txt", "0 .\n")
    target = tmp_path / "out.txt"
    code, _, _ = run(capsys, "compose", "--left", left, "--pos", "3", "--right", left, "--out", str(target))
    assert code == 1
    assert not target.exists()
    assert not [f for f in os.listdir(tmp_path) if f.startswith(".musicbox-")]


def test_transform_ops(files, capsys):
    p = files("p.txt", "2 0 . 1 -1 . .\n")
    assert run(capsys, "transform", p, "--op", "mir")[1] == ". . -1 1 . 0 2\n"
    assert run(capsys, "transform", p, "--op", "red:3")[1] == "2 0 . 1 2 . .\n"
    assert run(capsys, "transform", p, "--op", "temp:1")[1] == "2 . 0 . . 1 . -1 . . .\n"
    chord = files("chord.txt", "0\n2\n4\n")
    code, out, _ = run(capsys, "transform", files("q.txt", "0 . 1\n"), "--op", "har:" + chord)
    assert code == 0 and out == "0 . 1\n2 . 3\n4 . 5\n"


def test_generate_is_deterministic_and_replays(files, capsys, tmp_path):
    system = files("s.sys", SYSTEM)
    log = tmp_path / "run.log"
    args = ("generate", "--system", system, "--mode", "partial", "-k", "9", "--seed", "0x2a")
    code, first, _ = run(capsys, *args, "--log", str(log))
    assert code == 0
    assert run(capsys, *args)[1] == first
    assert log.read_text().startswith("mode partial\n")
    code, replayed, _ = run(capsys, "replay", "--system", system, "--log", str(log))
    assert code == 0 and replayed == first
    with pytest.raises(SystemExit):
        main([*args[:-1], str(1 << 64)])
    capsys.readouterr()


def test_preset_then_check(files, capsys, tmp_path):
    p = files("p.txt", "0 2 . 1 . 0 4\n")
    out = tmp_path / "temp.sys"
    code, _, _ = run(capsys, "preset", "--kind", "temporizer", "--pattern", p, "--t", "2", "--out", str(out))
    assert code == 0
    code, report, _ = run(capsys, "check", str(out))
    assert code == 0 and report.endswith("ok\n")
    assert run(capsys, "preset", "--kind", "rhythmic", "--pattern", p)[0] == 2


def test_render_abc_and_midi(files, capsys, tmp_path):
    p = files("p.txt", "0 . 1 2 -1 . 0 1 -2 . -1 0 0 . . .\n")
    code, abc, _ = run(
        capsys, "render", "--pattern", p, "--scale", "minor_harmonic", "--root", "9:3", "--title", "phrase"
    )
    assert code == 0
    assert abc.splitlines()[:7] == ["X:1", "T:phrase", "M:8/8", "L:1/8", "Q:1/8=128", "K:Am", "V:voice1"]
    assert abc.splitlines()[7] == "A,2 B,1 C1 ^G,2 A,1 B,1 F,2 ^G,1 A,1 A,4"
    midi = tmp_path / "p.mid"
    code, _, _ = run(capsys, "render", "--pattern", p, "--system", files("s.sys", SYSTEM), "--format", "midi", "--out", str(midi))
    assert code == 0 and midi.read_bytes().startswith(b"MThd")
    assert run(capsys, "render", "--pattern", p)[0] == 2
    assert run(capsys, "render", "--pattern", p, "--scale", "major")[0] == 2
