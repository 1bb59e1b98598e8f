import json

import pytest

from logic import calculus as c
from logic.focused import Focused, check_focused
from logic.labels import FocusedRule as FR
from logic.search import derive
from store.codec import CodecError, dump_derivation, dump_file, from_json_object, load_file
from tests.conftest import BASE, EXCHANGE, IMPLICATION
from tests.test_focused import conjunction_golden, implication_golden


@pytest.mark.parametrize("text, golden", [
    ("X /\\ Y | . |- (X /\\ Y) \\/ Z", conjunction_golden),
    ("I -o I | I, Y |- (I /\\ I) * Y", implication_golden),
])
def test_golden_file_loads_back(seq, text, golden):
    profile = IMPLICATION if "-o" in text else BASE
    s = seq(text, profile)
    d = golden()
    profile_back, s_back, d_back = load_file(dump_file(s, profile, d), None)
    assert (profile_back, s_back, d_back) == (profile, s, d)
    check_focused(d_back, s_back, profile_back)


def test_file_layout(seq):
    s = seq("- | X, Y |- X * Y")
    doc = json.loads(dump_file(s, BASE, derive(s), pretty=False))
    assert set(doc) == {"profile", "sequent", "derivation"}
    assert doc["profile"] == "base"
    assert doc["sequent"] == "- | X, Y |- X * Y"
    root = doc["derivation"]
    assert root["rule"] == "LI2RI" and root["phase"] == "RI"
    assert "tags" not in root
    assert list(root) == ["rule", "phase", "args", "premises"]
    assert root["args"] == {}
    tensor = root["premises"][0]["premises"][0]["premises"][0]["premises"][0]
    assert tensor["rule"] == "otimesR" and tensor["args"] == {"split": 0}
    assert "split" not in tensor


def test_rule_parameters_live_under_args():
    d = c.ex(0, c.pass_(c.otimes_r(0, c.ax(), c.pass_(c.ax()))))
    raw = json.loads(dump_derivation(d))
    assert list(raw) == ["rule", "args", "premises"]
    assert raw["args"] == {"pos": 0}
    assert raw["premises"][0]["premises"][0]["args"] == {"split": 0}
    assert from_json_object(raw, EXCHANGE) == d


def test_reads_nodes_with_args(seq):
    text = json.dumps({
        "profile": "base",
        "sequent": "- | X, Y |- X * Y",
        "derivation": {
            "rule": "pass",
            "args": {},
            "premises": [{
                "rule": "otimesR",
                "args": {"split": 0},
                "premises": [
                    {"rule": "ax", "args": {}, "premises": []},
                    {"rule": "pass", "args": {}, "premises": [{"rule": "ax", "args": {}, "premises": []}]},
                ],
            }],
        },
    })
    _, s, d = load_file(text)
    assert s == seq("- | X, Y |- X * Y")
    assert d == c.pass_(c.otimes_r(0, c.ax(), c.pass_(c.ax())))


def test_parameters_outside_args_are_rejected():
    with pytest.raises(CodecError, match="malformed derivation"):
        from_json_object({"rule": "otimesR", "split": 0}, BASE)


def test_context_tags_are_formula_lists():
    tagged = implication_golden().premises[0].premises[0].premises[0]
    raw = json.loads(dump_derivation(tagged))
    assert raw["tags"] == [[], ["I"]]
    assert from_json_object(raw, IMPLICATION) == tagged


def test_phase_selects_the_calculus():
    plain = from_json_object({"rule": "pass", "premises": [{"rule": "ax"}]}, BASE)
    assert plain == c.pass_(c.ax())
    focused = from_json_object({"rule": "ax", "phase": "F", "tags": ["R"]}, BASE)
    assert isinstance(focused, Focused) and focused.rule is FR.AX


def test_unknown_tag():
    with pytest.raises(CodecError, match="unknown tag"):
        from_json_object({"rule": "ax", "phase": "F", "tags": ["Q"]}, BASE)


def test_phase_must_match_rule():
    with pytest.raises(CodecError, match="phase"):
        from_json_object({"rule": "ax", "phase": "RI"}, BASE)


def test_unknown_field_is_rejected():
    with pytest.raises(CodecError, match="malformed derivation"):
        from_json_object({"rule": "ax", "colour": "red"}, BASE)


def test_malformed_file():
    with pytest.raises(CodecError, match="malformed derivation file"):
        load_file('{"profile": "base"}')
    with pytest.raises(CodecError):
        load_file("not json")


def test_profile_override(seq):
    s = seq("X | . |- X")
    text = dump_file(s, BASE, c.ax())
    profile, _, _ = load_file(text, IMPLICATION)
    assert profile == IMPLICATION
