"""Suggestion engine: roman input → ranked Devanagari candidates.

The lookup pipeline mirrors the lexicon's indexing: compute phonetic
keys for the input (greedy key, its schwa-dropped form, and the class
strings of every lattice path), take exact key hits first, fall back to
prefix hits, rank by frequency, and finally fall back to direct
character mapping when the lexicon offers nothing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .chartable import CharacterTable
from .compose import compose
from .errors import NoSegmentation
from .lexicon import Lexicon, LexiconEntry, key_of_entries, normalize_key, schwa_dropped_key
from .segment import build_lattice, count_paths, enumerate_paths, greedy_tokenize

LEXICON = "Lexicon"
FALLBACK = "Fallback"

_WORD_RE = re.compile(r"([A-Za-z]+)")


@dataclass(frozen=True)
class Suggestion:
    word: str
    frequency: int
    source: str  # LEXICON or FALLBACK

    def __post_init__(self) -> None:
        if self.source == FALLBACK and self.frequency != 0:
            raise ValueError("fallback suggestions carry frequency 0")


@dataclass(frozen=True)
class EngineConfig:
    max_suggestions: int = 5
    path_limit: int = 64

    def __post_init__(self) -> None:
        if self.max_suggestions < 1:
            raise ValueError("max_suggestions must be >= 1")
        if self.path_limit < 1:
            raise ValueError("path_limit must be >= 1")


def direct_map(table: CharacterTable, roman: str) -> str:
    """Character-table-only transliteration of one token."""
    return compose(greedy_tokenize(table, roman).entries())


def query_keys(table: CharacterTable, cfg: EngineConfig, roman: str) -> list[str]:
    """Deduplicated phonetic keys for a roman token, greedy key first.

    Lattice-path keys are included only while the path count stays
    within cfg.path_limit; pathological inputs fall back to the greedy
    key alone.
    """
    keys: list[str] = []
    seen: set[str] = set()

    def add(key: str) -> None:
        if key and key not in seen:
            seen.add(key)
            keys.append(key)

    try:
        full = normalize_key(table, roman)
    except NoSegmentation:
        full = None
    if full is not None:
        add(full)
        add(schwa_dropped_key(table, full))
    lattice = build_lattice(table, roman)
    if 0 < count_paths(lattice) <= cfg.path_limit:
        for path in enumerate_paths(lattice, cfg.path_limit):
            add(key_of_entries(path.entries()))
    return keys


def suggest(
    lex: Lexicon, table: CharacterTable, cfg: EngineConfig, roman: str
) -> list[Suggestion]:
    """Ranked suggestions for one token; never empty.

    Raises NoSegmentation only when the token yields no phonetic key and
    no direct mapping — a genuinely untypeable input.
    """
    keys = query_keys(table, cfg, roman)
    candidates: dict[str, LexiconEntry] = {}
    for key in keys:
        for entry in lex.lookup_exact(key):
            candidates.setdefault(entry.word, entry)
    if not candidates:
        for key in keys:
            for entry in lex.lookup_prefix(key, cfg.max_suggestions):
                candidates.setdefault(entry.word, entry)
    if candidates:
        ranked = sorted(
            candidates.values(),
            key=lambda e: (-e.frequency, len(e.word), e.word),
        )
        return [
            Suggestion(word=e.word, frequency=e.frequency, source=LEXICON)
            for e in ranked[: cfg.max_suggestions]
        ]
    return [Suggestion(word=direct_map(table, roman), frequency=0, source=FALLBACK)]


def transliterate_sentence(
    lex: Lexicon, table: CharacterTable, cfg: EngineConfig, text: str
) -> str:
    """Replace each roman word with its top suggestion.

    Whitespace, punctuation, and digits pass through verbatim (so run
    lengths are preserved); untypeable tokens stay as typed.
    """
    parts = _WORD_RE.split(text)
    for i in range(1, len(parts), 2):
        try:
            parts[i] = suggest(lex, table, cfg, parts[i])[0].word
        except NoSegmentation:
            pass
    return "".join(parts)
