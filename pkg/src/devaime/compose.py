"""Rendering phoneme sequences as Devanagari grapheme clusters."""

from __future__ import annotations

from typing import Iterable, Sequence

from .chartable import VIRAMA, PhonemeEntry
from .errors import IllegalSequence

_RA = "र"
_SIBILANTS = frozenset("शषस")  # श ष स
_A = "अ"
_AA_MATRA = "ा"  # ा


def joins_as_conjunct(first: PhonemeEntry, second: PhonemeEntry) -> bool:
    """Whether two adjacent consonants fuse with a virama.

    Joining is limited to the cluster classes the direct mapping is
    expected to produce: anything touching र (क्र, र्क, प्र, ...) and
    sibilant-initial clusters (स्थ, श्र, ...).  Other consonant pairs
    render side by side with their inherent vowels, so "rajdhani" yields
    रजधनि rather than the unnatural conjunct रज्धनि.
    """
    return (
        second.devanagari == _RA
        or first.devanagari == _RA
        or first.devanagari in _SIBILANTS
    )


def _lengthens(tokens: Sequence[PhonemeEntry], i: int) -> str | bool:
    """Penult lengthening: conjunct + अ + consonant + final dead schwa.

    Cluster-bearing words romanized with a trailing dead schwa read their
    penultimate inherent vowel long: "raajasthana" is राजस्थान, not
    राजस्थन.  The rule fires only for an अ directly after a conjunct-final
    consonant when exactly one consonant and a final अ remain.
    """
    if i != len(tokens) - 3 or i < 2:
        return False
    if tokens[i].devanagari != _A:
        return False
    prev, pre2 = tokens[i - 1], tokens[i - 2]
    if not (pre2.is_consonant and prev.is_consonant):
        return False
    if not joins_as_conjunct(pre2, prev):
        return False
    nxt, last = tokens[i + 1], tokens[i + 2]
    return nxt.is_consonant and last.is_vowel and last.devanagari == _A


def compose(tokens: Sequence[PhonemeEntry] | Iterable[PhonemeEntry]) -> str:
    """Render a phoneme sequence as an NFC Devanagari string.

    A vowel after a consonant becomes that vowel's matra (the inherent
    vowel becomes nothing, except for penult lengthening — see
    ``_lengthens``); consonant pairs satisfying ``joins_as_conjunct`` are
    linked with a virama; a vowel at word start or after a
    vowel/diacritic keeps its independent form; diacritics append
    directly.  Conjunct shaping (reph, ra-kaar) is left to the text
    renderer: only correct codepoint sequences are guaranteed here.
    """
    tokens = list(tokens)
    if tokens and tokens[0].is_diacritic:
        raise IllegalSequence("diacritic cannot start a word")
    out: list[str] = []
    n = len(tokens)
    for i, tok in enumerate(tokens):
        if tok.is_vowel:
            prev = tokens[i - 1] if i else None
            if prev is not None and prev.is_consonant:
                if tok.matra:
                    out.append(tok.matra)
                elif _lengthens(tokens, i):
                    out.append(_AA_MATRA)
                # otherwise the inherent vowel leaves the consonant bare
            else:
                out.append(tok.devanagari)
        elif tok.is_consonant:
            out.append(tok.devanagari)
            nxt = tokens[i + 1] if i + 1 < len(tokens) else None
            if nxt is not None and nxt.is_consonant and joins_as_conjunct(tok, nxt):
                out.append(VIRAMA)
        else:
            out.append(tok.devanagari)
    return "".join(out)
