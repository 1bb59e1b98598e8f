import io
import json
from pathlib import Path

import pytest

from controllers.cli_controller import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, run
from logic.focused import Focused
from logic.labels import FocusedRule as FR
from store.codec import load_file

GOLDENS = Path(__file__).parent / "goldens"


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_prove_prints_a_derivation_file():
    code, out, _ = call("prove", "X /\\ Y | . |- (X /\\ Y) \\/ Z")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["sequent"] == "X /\\ Y | . |- (X /\\ Y) \\/ Z"
    assert doc["derivation"]["phase"] == "RI"


def test_prove_not_derivable():
    code, out, _ = call("prove", "X * (Y * Z) | . |- (X * Y) * Z")
    assert code == EXIT_NEGATIVE
    assert out.strip() == "NOT DERIVABLE"


def test_count():
    assert call("count", "I | . |- I")[:2] == (EXIT_OK, "1\n")
    code, out, _ = call("count", "X /\\ Y | . |- X \\/ Y", "--json")
    assert json.loads(out) == {"profile": "base", "sequent": "X /\\ Y | . |- X \\/ Y", "count": 2, "oracle": False}


def test_count_with_oracle():
    assert call("count", "X /\\ Y | . |- X \\/ Y", "--oracle")[1] == "2\n"


def test_check_reads_prove_output_from_stdin():
    _, proof, _ = call("prove", "- | X, Y |- X * Y")
    assert call("check", "-", stdin=proof)[:2] == (EXIT_OK, "OK\n")


def test_check_reports_invalid_derivation():
    bad = json.dumps({"profile": "base", "sequent": "X | . |- Y", "derivation": {"rule": "ax"}})
    code, out, _ = call("check", "-", stdin=bad)
    assert code == EXIT_NEGATIVE
    assert out.startswith("INVALID: ")


def test_check_malformed_file():
    code, _, err = call("check", "-", stdin="{}")
    assert code == EXIT_ERROR
    assert err.startswith("error: ")


def test_normalize_is_idempotent():
    _, proof, _ = call("prove", "(X * Y) * Z | . |- X * (Y * Z)")
    code, once, _ = call("normalize", "-", stdin=proof)
    assert code == EXIT_OK
    assert call("normalize", "-", stdin=once)[1] == once


def test_normalize_unfocused_file():
    plain = json.dumps({
        "profile": "base",
        "sequent": "I | . |- I",
        "derivation": {"rule": "ax"},
    })
    _, out, _ = call("normalize", "-", stdin=plain)
    assert json.loads(out)["derivation"]["rule"] == "LI2RI"


def test_equiv(tmp_path):
    eta = tmp_path / "eta.json"
    eta.write_text(json.dumps({"profile": "base", "sequent": "I | . |- I", "derivation": {"rule": "ax"}}))
    expanded = tmp_path / "expanded.json"
    expanded.write_text(json.dumps({
        "profile": "base",
        "sequent": "I | . |- I",
        "derivation": {"rule": "IL", "premises": [{"rule": "IR"}]},
    }))
    assert call("equiv", str(eta), str(expanded))[:2] == (EXIT_OK, "EQUIVALENT\n")


def test_equiv_distinct(tmp_path):
    paths = []
    for i in (1, 2):
        path = tmp_path / f"proj{i}.json"
        path.write_text(json.dumps({
            "profile": "base",
            "sequent": "X /\\ X | . |- X",
            "derivation": {"rule": f"andL{i}", "premises": [{"rule": "ax"}]},
        }))
        paths.append(str(path))
    assert call("equiv", *paths)[:2] == (EXIT_NEGATIVE, "DISTINCT\n")


def test_enumerate_writes_one_file_per_line():
    code, out, _ = call("enumerate", "X /\\ X | . |- X")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 2
    assert all(json.loads(line)["profile"] == "base" for line in lines)
    _, out, _ = call("enumerate", "I | . |- I", "--unfocused")
    assert len(out.splitlines()) == 2


@pytest.mark.parametrize("argv", [
    ("prove", "X * )"),
    ("prove", "X -o Y | . |- Y"),
    ("prove", "X | . |- X", "--profile", "exchange+implication"),
    ("check", "/nonexistent/derivation.json"),
    ("prove", "(X * Y) * Z | . |- X * (Y * Z)", "--max-connectives", "2"),
])
def test_errors_exit_two(argv):
    code, out, err = call(*argv)
    assert code == EXIT_ERROR
    assert out == ""


def test_profile_flag_enables_units():
    assert call("count", "X | . |- Top", "--profile", "units")[:2] == (EXIT_OK, "1\n")


@pytest.mark.parametrize("name, argv", [
    ("conjunction", ("prove", "X /\\ Y | . |- (X /\\ Y) \\/ Z")),
    ("implication", ("prove", "I -o I | I, Y |- (I /\\ I) * Y", "--profile", "implication")),
])
def test_prove_matches_golden_bytes(name, argv):
    golden = (GOLDENS / f"{name}.json").read_text(encoding="utf-8")
    code, out, _ = call(*argv, "--json")
    assert code == EXIT_OK
    assert out == golden
    _, pretty, _ = call(*argv)
    assert pretty == json.dumps(json.loads(golden), indent=2) + "\n"


def test_normalize_distributes_implication_over_conjunction():
    # limpL(pass ax, andR(ax, ax)) is the left side of limpL_andR
    stacked = json.dumps({
        "profile": "implication",
        "sequent": "X -o Y | X |- Y /\\ Y",
        "derivation": {
            "rule": "limpL",
            "args": {"split": 1},
            "premises": [
                {"rule": "pass", "premises": [{"rule": "ax"}]},
                {"rule": "andR", "premises": [{"rule": "ax"}, {"rule": "ax"}]},
            ],
        },
    })
    code, out, _ = call("normalize", "-", stdin=stacked)
    assert code == EXIT_OK
    _, _, d = load_file(out)
    ax = Focused(FR.F2LI, (Focused(FR.AX),))
    left = Focused(FR.LI2RI, (Focused(FR.F2LI, (Focused(FR.PASS, (ax,)),)),))
    branch = Focused(FR.LI2RI, (Focused(FR.F2LI, (Focused(FR.LIMP_L, (left, ax), split=1),)),))
    assert d == Focused(FR.AND_R, (branch, branch))
