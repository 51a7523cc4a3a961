"""Grapheme composition: matras, conjunct joining, penult lengthening."""

import random
import unicodedata

import pytest

from devaime.compose import compose, joins_as_conjunct
from devaime.errors import IllegalSequence
from devaime.segment import greedy_tokenize

from wordgen import random_word


def toks(table, chars):
    return [table.char_index[c] for c in chars]


def test_matra_attachment(table):
    assert compose(toks(table, "कइ")) == "कि"
    assert compose(toks(table, "हऐ")) == "है"
    assert compose(toks(table, "कई")) == "की"


def test_inherent_vowel_leaves_consonant_bare(table):
    assert compose(toks(table, "कअ")) == "क"
    assert compose(toks(table, "कअल")) == "कल"


def test_ra_clusters_join(table):
    assert compose(toks(table, "कर")) == "क्र"
    assert compose(toks(table, "रक")) == "र्क"
    assert compose(toks(table, "पर")) == "प्र"


def test_sibilant_clusters_join(table):
    assert compose(toks(table, "सथ")) == "स्थ"
    assert compose(toks(table, "शर")) == "श्र"


def test_plain_stop_pairs_do_not_join(table):
    # adjacent stops render side by side with their inherent vowels
    assert compose(toks(table, "जध")) == "जध"
    assert "्" not in compose(toks(table, "कत"))


def test_join_predicate(table):
    k, r, s, j, dh = (table.char_index[c] for c in "करसजध")
    assert joins_as_conjunct(k, r)
    assert joins_as_conjunct(r, k)
    assert joins_as_conjunct(s, dh)
    assert not joins_as_conjunct(j, dh)


def test_single_consonant_is_independent_form(table):
    for e in table.entries:
        if e.is_consonant:
            assert compose([e]) == e.devanagari


def test_empty_and_vowel_start(table):
    assert compose([]) == ""
    assert compose(toks(table, "अ")) == "अ"
    assert compose(toks(table, "आ")) == "आ"


def test_diacritic_first_rejected(table):
    with pytest.raises(IllegalSequence):
        compose(toks(table, "ंक"))


def test_diacritics_append(table):
    assert compose(toks(table, "कं")) == "कं"
    assert compose(toks(table, "कःप")) == "कःप"


def test_penult_lengthening_fires_only_after_cluster(table):
    # cluster + अ + consonant + final अ reads the penult vowel long ...
    assert compose(toks(table, "सथअनअ")) == "स्थान"
    # ... but without the trailing schwa the vowel stays inherent
    assert compose(toks(table, "सथअन")) == "स्थन"
    # ... and without a cluster nothing lengthens
    assert compose(toks(table, "कअलअमअ")) == "कलम"


def test_compose_never_emits_adjacent_matras(table):
    rng = random.Random(4242)
    matras = {e.matra for e in table.entries if e.matra}
    for _ in range(300):
        word = compose(random_word(table, rng))
        assert unicodedata.normalize("NFC", word) == word
        for a, b in zip(word, word[1:]):
            assert not (a in matras and b in matras)
        assert word == "" or word[0] not in matras


def test_canonical_code_round_trip(table):
    # re-tokenizing the romanization of a composed word reproduces the
    # emitted code stream (domain restrictions per wordgen)
    rng = random.Random(99)
    for _ in range(200):
        seq = random_word(table, rng)
        word = compose(seq)
        roman = table.reverse_transliterate(word)
        again = greedy_tokenize(table, roman).entries()
        assert compose(again) == word
