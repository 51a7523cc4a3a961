"""Segmenter: lattice completeness, greedy determinism, path ordering."""

import random
from functools import lru_cache

import pytest

from devaime.errors import NoSegmentation
from devaime.segment import (
    build_lattice,
    count_paths,
    enumerate_paths,
    greedy_tokenize,
)


def codes_of(tokenization):
    return [e.devanagari for e in tokenization.entries()]


def test_greedy_maximal_munch(table):
    assert codes_of(greedy_tokenize(table, "khana")) == ["ख", "अ", "न", "अ"]
    assert codes_of(greedy_tokenize(table, "kai")) == ["क", "ऐ"]
    assert codes_of(greedy_tokenize(table, "rajdhani")) == list("रअजधअनइ")


def test_greedy_prefers_canonical_on_tie(table):
    # "sh" is canonical for श and an alternate for ष
    assert codes_of(greedy_tokenize(table, "sh")) == ["श"]
    assert codes_of(greedy_tokenize(table, "ssh")) == ["ष"]


def test_greedy_respects_escapes(table):
    assert codes_of(greedy_tokenize(table, "Ta")) == ["ट", "अ"]
    assert codes_of(greedy_tokenize(table, "ta")) == ["त", "अ"]
    assert codes_of(greedy_tokenize(table, "Thali")) == ["ठ", "अ", "ल", "इ"]
    # escapes are case-sensitive: folding keeps reserved uppercase intact
    assert codes_of(greedy_tokenize(table, "TH")) == ["ट", "ः"]


def test_greedy_dead_end_raises(table):
    with pytest.raises(NoSegmentation) as exc:
        greedy_tokenize(table, "kxa")
    assert exc.value.position == 1


def test_lattice_contains_lexicon_only_arcs(table):
    lattice = build_lattice(table, "tha")
    chars = {(a.start, a.end, a.entry.devanagari) for a in lattice.arcs}
    assert (0, 2, "थ") in chars
    assert (0, 3, "ठ") in chars  # lexicon-only spelling, absent from greedy
    assert (2, 3, "अ") in chars


def test_empty_input(table):
    lattice = build_lattice(table, "")
    assert count_paths(lattice) == 1
    paths = enumerate_paths(lattice, 5)
    assert len(paths) == 1 and paths[0].path == ()
    assert greedy_tokenize(table, "").entries() == ()


def test_path_order_fewest_arcs_first(table):
    lattice = build_lattice(table, "chai")
    paths = enumerate_paths(lattice, 64)
    lengths = [len(p.path) for p in paths]
    assert lengths == sorted(lengths)
    assert codes_of(paths[0]) == ["छ", "ऐ"]


def test_enumerate_respects_limit(table):
    lattice = build_lattice(table, "chai")
    total = count_paths(lattice)
    assert total > 3
    assert len(enumerate_paths(lattice, 3)) == 3
    assert enumerate_paths(lattice, 3) == enumerate_paths(lattice, total)[:3]
    with pytest.raises(ValueError):
        enumerate_paths(lattice, 0)


def test_greedy_path_among_enumerated(table):
    for text in ["ki", "chai", "khana", "rajasthan"]:
        greedy = codes_of(greedy_tokenize(table, text))
        all_paths = [codes_of(p) for p in enumerate_paths(build_lattice(table, text), 256)]
        assert greedy in all_paths


def _brute_count(table, text):
    # independent recursive segmenter over every spelling in the table
    all_codes = {c for e in table.entries for c in e.codes()}
    arities = {}
    for e in table.entries:
        for c in e.codes():
            arities[c] = arities.get(c, 0) + 1

    @lru_cache(maxsize=None)
    def walk(pos: int) -> int:
        if pos == len(text):
            return 1
        total = 0
        for end in range(pos + 1, len(text) + 1):
            piece = text[pos:end]
            if piece in all_codes:
                total += arities[piece] * walk(end)
        return total

    return walk(0)


def test_path_count_matches_brute_force(table):
    rng = random.Random(20240811)
    alphabet = "aeioukhgcjtdnprs"
    for _ in range(150):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 8)))
        lattice = build_lattice(table, text)
        expected = _brute_count(table, text)
        assert count_paths(lattice) == expected
        if expected <= 512:
            assert len(enumerate_paths(lattice, 512)) == expected


def test_arcs_match_their_substrings(table):
    lattice = build_lattice(table, "jaipur")
    for arc in lattice.arcs:
        piece = "jaipur"[arc.start : arc.end]
        assert piece in arc.entry.codes()
