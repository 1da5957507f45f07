import io
import json

import pytest

from cheegerkit import format_graph
from cheegerkit import generators as gen
from cheegerkit.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    paths = {
        "b5": write("b5.txt", format_graph(gen.barbell(5))),
        "c4": write("c4.txt", format_graph(gen.cycle(4))),
        "c8": write("c8.txt", format_graph(gen.cycle(8))),
        "k5": write("k5.txt", format_graph(gen.complete(5))),
        "lolli": write("l93.txt", format_graph(gen.lollipop(9, 3))),
        "double": write("double.txt", "0 0\n1 2\n2 4\n3 6\n"),
        "big": write("big.txt", format_graph(gen.cycle(30))),
        "bad": write("bad.txt", "3 1\n0 0\n"),
    }
    paths["write"] = write
    return paths


def commands(f):
    return [
        ["cheeger", "--input", f["b5"]],
        ["cheeger", "--input", f["big"], "--heuristic", "--seed", "5", "--iterations", "100"],
        ["folner", "--input", f["c8"], "--epsilon", "1/2"],
        ["folner", "--input", f["lolli"], "--epsilon", "1/2", "--alpha", "1/3"],
        ["decompose", "--input", f["b5"], "--epsilon", "1/4", "--alpha", "3/10"],
        ["maximal-folner", "--input", f["lolli"], "--epsilon", "1/2"],
        ["structure", "--input", f["lolli"], "--epsilon", "1/2", "--alpha", "1/3"],
        ["dichotomy", "--input", f["b5"], "--input", f["k5"], "--epsilon", "1/4", "--alpha", "1/4"],
        ["rho", "--input", f["c8"], "--m", "3"],
        ["qi", "--input", f["c4"], "--codomain", f["c8"], "--map", f["double"], "--L", "2", "--A", "1", "--alpha", "1/2"],
        ["gen", "random_regular", "10", "3", "--seed", "42"],
        ["gen", "barbell", "5", "--output", "text"],
        ["cheeger", "--input", f["b5"], "--output", "text"],
    ]


def test_every_command_is_byte_identical_twice(files):
    for argv in commands(files):
        first, second = call(*argv), call(*argv)
        assert first[0] == 0, (argv, first[2])
        assert first == second


def test_cheeger_document(files):
    code, out, _ = call("cheeger", "--input", files["b5"])
    doc = json.loads(out)
    assert list(doc) == ["command", "input_digest", "status", "payload"]
    assert doc["input_digest"].startswith("sha256:")
    assert doc["payload"] == {"value": "1/5", "realizer": [0, 1, 2, 3, 4], "exact": True}


def test_no_floats_in_output(files):
    for argv in commands(files):
        _, out, _ = call(*argv)
        if out.startswith("{"):
            json.loads(out, parse_float=lambda s: pytest.fail(f"float {s} in {argv}"))


def test_decompose_then_verify(files):
    _, out, _ = call("decompose", "--input", files["b5"], "--epsilon", "1/4", "--alpha", "3/10")
    result = files["write"]("result.json", out)
    code, out, _ = call("verify", "--input", files["b5"], "--result", result)
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "verified" and doc["payload"]["failures"] == []


def test_verify_catches_tampering(files):
    _, out, _ = call("decompose", "--input", files["b5"], "--epsilon", "1/4", "--alpha", "3/10")
    doc = json.loads(out)
    doc["payload"]["parts"][0]["vertices"].remove(0)
    doc["payload"]["parts"][1]["vertices"].append(0)
    result = files["write"]("tampered.json", json.dumps(doc))
    code, out, _ = call("verify", "--input", files["b5"], "--result", result)
    assert code == 0 and json.loads(out)["status"] == "failed"


def test_verify_rejects_other_graph(files):
    _, out, _ = call("decompose", "--input", files["b5"], "--epsilon", "1/4", "--alpha", "3/10")
    result = files["write"]("result.json", out)
    assert call("verify", "--input", files["k5"], "--result", result)[0] == 1


def test_witness_status(files):
    code, out, _ = call("decompose", "--input", files["lolli"], "--epsilon", "1/2", "--alpha", "1/3")
    assert code == 0 and json.loads(out)["status"] == "witness"


def test_gen_text_is_parseable_edge_list(files):
    _, out, _ = call("gen", "barbell", "5", "--output", "text")
    assert out == format_graph(gen.barbell(5))


@pytest.mark.parametrize(
    "argv, code",
    [
        (["cheeger", "--input", "big", "--exact-cap", "10"], 2),
        (["cheeger", "--input", "bad"], 2),
        (["cheeger", "--input", "/nonexistent/graph.txt"], 2),
        (["rho", "--input", "c8", "--m", "3", "--budget", "10"], 2),
        (["folner", "--input", "c8", "--epsilon", "0.5"], 1),
        (["decompose", "--input", "c8", "--epsilon", "1/2"], 1),
        (["decompose", "--input", "c8", "--epsilon", "1/2", "--alpha", "3/4"], 1),
        (["frobnicate"], 1),
        (["decompose", "--input", "k5", "--epsilon", "3", "--alpha", "3/10"], 3),
    ],
)
def test_exit_codes(files, argv, code):
    argv = [files.get(a, a) if isinstance(files.get(a), str) else a for a in argv]
    got, out, err = call(*argv)
    assert got == code, err
    assert out == "" and err


def test_cap_message_points_to_heuristic(files):
    _, _, err = call("cheeger", "--input", files["big"], "--exact-cap", "10")
    assert "heuristic" in err


def test_parse_error_names_line(files):
    _, _, err = call("cheeger", "--input", files["bad"])
    assert "line 2" in err
