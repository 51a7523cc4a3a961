"""Evaluator: per-character averages, weighting, TSV readers, reports."""

import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

import evalfix
from devaime.errors import MalformedFile, MissingData
from devaime.evaluate import (
    EvalReport,
    SchemeEncoding,
    avg_edit_dist,
    compare_schemes,
    read_frequencies,
    read_responses,
    read_scheme,
    report_table,
    report_tsv,
    validate_frequencies,
    weighted_average,
)

TOL = 1e-9


def test_avg_edit_dist_examples():
    scheme = SchemeEncoding("x", {"u": "u", "ch": "ch"})
    assert avg_edit_dist("u", {"u": {"s1": "u"}}, scheme) == 0.0
    assert avg_edit_dist("u", {"u": {"s1": "u", "s2": "oo"}}, scheme) == 1.0
    resp = {"ch": {"s1": "ch", "s2": "chh", "s3": "c"}}
    assert abs(avg_edit_dist("ch", resp, scheme) - 2 / 3) < TOL


def test_avg_edit_dist_missing_data():
    scheme = SchemeEncoding("x", {"u": "u"})
    with pytest.raises(MissingData):
        avg_edit_dist("k", {"k": {"s1": "k"}}, scheme)  # no proposal
    with pytest.raises(MissingData):
        avg_edit_dist("u", {}, scheme)  # no responses
    with pytest.raises(MissingData):
        avg_edit_dist("u", {"u": {}}, scheme)  # empty subject map


def test_subject_order_irrelevant():
    scheme = SchemeEncoding("x", {"c": "ch"})
    fwd = {"c": dict([("s1", "c"), ("s2", "chha")])}
    rev = {"c": dict([("s2", "chha"), ("s1", "c")])}
    assert avg_edit_dist("c", fwd, scheme) == avg_edit_dist("c", rev, scheme)


def test_weighted_average_example():
    assert abs(weighted_average({"a": 0.0, "b": 2.0}, {"a": 0.75, "b": 0.25}) - 0.5) < TOL


def test_weighted_average_missing_weight():
    with pytest.raises(MissingData):
        weighted_average({"a": 1.0}, {"b": 1.0})


def test_validate_frequencies():
    validate_frequencies({"a": 0.5, "b": 0.5})
    validate_frequencies({"a": 1.0 + 5e-10})
    with pytest.raises(ValueError):
        validate_frequencies({"a": 0.7, "b": 0.2})
    with pytest.raises(ValueError):
        validate_frequencies({"a": 1.5, "b": -0.5})


@given(
    st.dictionaries(
        st.text("abcdef", min_size=1, max_size=3),
        st.floats(0, 5, allow_nan=False),
        min_size=1,
        max_size=8,
    )
)
def test_uniform_weights_reduce_to_mean(per_char):
    n = len(per_char)
    freqs = {c: 1.0 / n for c in per_char}
    mean = sum(per_char.values()) / n
    assert abs(weighted_average(per_char, freqs) - mean) < 1e-9


def test_fixture_scheme_a():
    scheme = SchemeEncoding("A", evalfix.SCHEME_A)
    for char_id, expect in evalfix.PER_CHAR_A.items():
        assert abs(avg_edit_dist(char_id, evalfix.RESPONSES, scheme) - expect) < TOL
    got = weighted_average(evalfix.PER_CHAR_A, evalfix.WEIGHTS)
    assert abs(got - evalfix.WEIGHTED_A) < TOL


def test_fixture_scheme_b():
    scheme = SchemeEncoding("B", evalfix.SCHEME_B)
    for char_id, expect in evalfix.PER_CHAR_B.items():
        assert abs(avg_edit_dist(char_id, evalfix.RESPONSES, scheme) - expect) < TOL
    got = weighted_average(evalfix.PER_CHAR_B, evalfix.WEIGHTS)
    assert abs(got - evalfix.WEIGHTED_B) < TOL


def test_fixture_uniform_means():
    uniform = {c: 1 / 5 for c in evalfix.WEIGHTS}
    assert abs(weighted_average(evalfix.PER_CHAR_A, uniform) - evalfix.UNIFORM_A) < TOL
    assert abs(weighted_average(evalfix.PER_CHAR_B, uniform) - evalfix.UNIFORM_B) < TOL


def test_compare_schemes_sorted_by_name():
    schemes = [
        SchemeEncoding("B", evalfix.SCHEME_B),
        SchemeEncoding("A", evalfix.SCHEME_A),
    ]
    reports = compare_schemes(evalfix.RESPONSES, schemes, evalfix.WEIGHTS)
    assert [r.scheme_name for r in reports] == ["A", "B"]
    assert abs(reports[0].weighted_average - evalfix.WEIGHTED_A) < TOL
    assert abs(reports[1].weighted_average - evalfix.WEIGHTED_B) < TOL
    assert compare_schemes(evalfix.RESPONSES, [], evalfix.WEIGHTS) == []


def test_compare_schemes_missing_proposal():
    incomplete = SchemeEncoding("bad", {"क": "k"})
    with pytest.raises(MissingData):
        compare_schemes(evalfix.RESPONSES, [incomplete], evalfix.WEIGHTS)


def test_read_responses():
    got = read_responses(io.StringIO(evalfix.responses_tsv()))
    assert got == evalfix.RESPONSES


def test_read_responses_rejects_duplicates_and_bad_arity():
    with pytest.raises(MalformedFile):
        read_responses(io.StringIO("क\ts1\tk\nक\ts1\tq\n"))
    with pytest.raises(MalformedFile) as err:
        read_responses(io.StringIO("क\ts1\n"))
    assert ":1:" in str(err.value)


def test_read_scheme():
    got = read_scheme(io.StringIO(evalfix.scheme_tsv(evalfix.SCHEME_A)), "A")
    assert got == SchemeEncoding("A", evalfix.SCHEME_A)
    with pytest.raises(MalformedFile):
        read_scheme(io.StringIO("क\tk\nक\tq\n"), "dup")


def test_read_frequencies():
    got = read_frequencies(io.StringIO(evalfix.weights_tsv()))
    assert got == evalfix.WEIGHTS
    for body in ["क\tx\n", "क\t0.5\nक\t0.5\n", "क\t0.9\n", "क\t-1\nख\t2\n"]:
        with pytest.raises(MalformedFile):
            read_frequencies(io.StringIO(body))


def test_readers_skip_comments_and_blanks():
    body = "# comment\n\nक\t0.4\nख\t0.6\n"
    assert read_frequencies(io.StringIO(body)) == {"क": 0.4, "ख": 0.6}


def test_report_tsv_format():
    reports = [EvalReport("x", {"a": 1.0}, 0.5)]
    assert report_tsv(reports) == "x\t0.500000000\n"


def test_report_table_smoke():
    schemes = [
        SchemeEncoding("A", evalfix.SCHEME_A),
        SchemeEncoding("B", evalfix.SCHEME_B),
    ]
    reports = compare_schemes(evalfix.RESPONSES, schemes, evalfix.WEIGHTS)
    text = report_table(reports)
    lines = text.splitlines()
    assert lines[0].startswith("scheme")
    assert lines[1].startswith("A") and lines[2].startswith("B")
    assert "0.5667" in lines[1] and "1.1000" in lines[2]
    assert report_table([]) == "(no schemes)\n"
