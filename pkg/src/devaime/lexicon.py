"""Frequency lexicon: corpus ingestion, phonetic keys, prefix lookup.

Every word is indexed under two phonetic keys — the full normalized key
of its romanization and a schwa-dropped variant — so that both careful
spellings ("raajadhaanee") and clipped ones ("rajdhani") reach the same
entry.
"""

from __future__ import annotations

import unicodedata
import weakref
from dataclasses import dataclass
from typing import IO, Iterable, Mapping

from .chartable import CharacterTable, PhonemeEntry
from .errors import InvalidEncoding, MalformedFile, UnmappedCharacter
from .segment import greedy_tokenize

LEXICON_HEADER = "#deva-lexicon v1"

# Independent-vowel classes: long/short pairs fold to one letter so that
# "raam" and "ram" normalize identically.
_VOWEL_CLASS = {
    "अ": "a", "आ": "a",
    "इ": "i", "ई": "i",
    "उ": "u", "ऊ": "u",
    "ए": "e", "ऐ": "e",
    "ओ": "o", "औ": "o",
}

_DEVANAGARI_LO = "ऀ"
_DEVANAGARI_HI = "ॣ"


def class_letter(entry: PhonemeEntry) -> str:
    """The key segment a phoneme contributes to a normalized key."""
    folded = _VOWEL_CLASS.get(entry.devanagari)
    if folded is not None:
        return folded
    return entry.canonical.lower()


def key_of_entries(entries: Iterable[PhonemeEntry]) -> str:
    """Concatenated class letters of a phoneme sequence."""
    return "".join(class_letter(e) for e in entries)


def normalize_key(table: CharacterTable, roman: str) -> str:
    """Fold a roman spelling to its phonetic key.

    Greedy-tokenizes the input, then maps each phoneme to its class
    letter: paired vowels collapse (aa→a, ee/ii→i, ...), consonants keep
    their canonical codes (which folds w→v, f→ph, z→j, q→k), escapes
    lowercase (T→t).  Raises NoSegmentation for untypeable input.
    """
    return key_of_entries(greedy_tokenize(table, roman).entries())


def key_segments(table: CharacterTable, key: str) -> list[str]:
    """Split a normalized key back into class-letter segments.

    Maximal munch over the class alphabet (vowel classes plus lowercased
    canonical codes).  Collisions like "nga" (ङ+अ vs न+ग+अ) resolve to
    the longest match; an unmatchable character becomes its own segment.
    """
    alphabet = _class_alphabet(table)
    longest = max(map(len, alphabet), default=1)
    segs: list[str] = []
    i = 0
    while i < len(key):
        for ln in range(min(longest, len(key) - i), 0, -1):
            if key[i : i + ln] in alphabet:
                segs.append(key[i : i + ln])
                i += ln
                break
        else:
            segs.append(key[i])
            i += 1
    return segs


_ALPHABET_CACHE: "weakref.WeakKeyDictionary[CharacterTable, frozenset[str]]"
_ALPHABET_CACHE = weakref.WeakKeyDictionary()


def _class_alphabet(table: CharacterTable) -> frozenset[str]:
    cached = _ALPHABET_CACHE.get(table)
    if cached is None:
        cached = frozenset(class_letter(e) for e in table.entries)
        _ALPHABET_CACHE[table] = cached
    return cached


def schwa_dropped_key(table: CharacterTable, key: str) -> str:
    """Delete medial "a" segments: "rajadhani" → "rjdhni".

    The first and last segments always survive, so "kama" → "kma" stays
    distinct from "kam" → "km".
    """
    segs = key_segments(table, key)
    if len(segs) <= 2:
        return key
    kept = [segs[0]]
    kept.extend(s for s in segs[1:-1] if s != "a")
    kept.append(segs[-1])
    return "".join(kept)


def word_keys(table: CharacterTable, word: str) -> frozenset[str]:
    """The index keys of a Devanagari word (full + schwa-dropped)."""
    full = normalize_key(table, table.reverse_transliterate(word))
    return frozenset({full, schwa_dropped_key(table, full)})


def ingest_corpus(text: str | bytes) -> dict[str, int]:
    """Count Devanagari word tokens in a corpus.

    Tokens are maximal runs of scalars in U+0900–U+0963 (letters and
    signs; danda and digits break tokens).  Words are NFC-normalized.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidEncoding(str(exc)) from exc
    counts: dict[str, int] = {}
    start = None
    for i, ch in enumerate(text):
        if _DEVANAGARI_LO <= ch <= _DEVANAGARI_HI:
            if start is None:
                start = i
        elif start is not None:
            word = unicodedata.normalize("NFC", text[start:i])
            counts[word] = counts.get(word, 0) + 1
            start = None
    if start is not None:
        word = unicodedata.normalize("NFC", text[start:])
        counts[word] = counts.get(word, 0) + 1
    return counts


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    frequency: int
    keys: frozenset[str]


class _TrieNode:
    __slots__ = ("children", "terminal")

    def __init__(self) -> None:
        self.children: dict[str, _TrieNode] = {}
        self.terminal: list[int] = []  # entry indices ending here


class Lexicon:
    """Immutable word store with exact and prefix key lookup."""

    def __init__(self, entries: Iterable[LexiconEntry]):
        self.entries: tuple[LexiconEntry, ...] = tuple(
            sorted(entries, key=lambda e: e.word)
        )
        self.total_tokens = sum(e.frequency for e in self.entries)
        self._root = _TrieNode()
        for idx, entry in enumerate(self.entries):
            if entry.frequency < 1:
                raise MalformedFile("frequency of %r must be >= 1" % entry.word)
            if not entry.keys or any(not k for k in entry.keys):
                raise MalformedFile("entry %r has an empty key" % entry.word)
            for key in entry.keys:
                node = self._root
                for ch in key:
                    node = node.children.setdefault(ch, _TrieNode())
                node.terminal.append(idx)

    def __len__(self) -> int:
        return len(self.entries)

    def _node(self, key: str) -> _TrieNode | None:
        node = self._root
        for ch in key:
            node = node.children.get(ch)
            if node is None:
                return None
        return node

    def lookup_exact(self, key: str) -> list[LexiconEntry]:
        """Entries indexed under exactly ``key``, ranked."""
        node = self._node(key)
        if node is None:
            return []
        return _ranked({i: self.entries[i] for i in node.terminal}.values())

    def lookup_prefix(self, prefix: str, limit: int) -> list[LexiconEntry]:
        """Entries with any key extending ``prefix``, best ``limit`` by frequency."""
        if limit < 1:
            raise ValueError("limit must be >= 1")
        node = self._node(prefix)
        if node is None:
            return []
        found: dict[int, LexiconEntry] = {}
        stack = [node]
        while stack:
            cur = stack.pop()
            for i in cur.terminal:
                found[i] = self.entries[i]
            stack.extend(cur.children.values())
        return _ranked(found.values())[:limit]


def _ranked(entries: Iterable[LexiconEntry]) -> list[LexiconEntry]:
    # frequency desc, then shorter word, then code-point order: total and
    # deterministic, mirrored by the engine's suggestion ranking.
    return sorted(entries, key=lambda e: (-e.frequency, len(e.word), e.word))


def build_lexicon(
    freqs: Mapping[str, int], table: CharacterTable
) -> tuple[Lexicon, list[str]]:
    """Index a word-frequency map; returns (lexicon, skipped words).

    Words containing characters outside the table are skipped and
    reported back rather than aborting the whole build.
    """
    merged: dict[str, int] = {}
    for word, freq in freqs.items():
        word = unicodedata.normalize("NFC", word)
        merged[word] = merged.get(word, 0) + int(freq)
    entries = []
    skipped = []
    for word in sorted(merged):
        try:
            keys = word_keys(table, word)
        except UnmappedCharacter:
            skipped.append(word)
            continue
        entries.append(LexiconEntry(word=word, frequency=merged[word], keys=keys))
    return Lexicon(entries), skipped


def save_lexicon(lex: Lexicon, sink: str | IO[str]) -> None:
    """Write the TSV form: word, frequency, comma-joined keys."""
    own = isinstance(sink, str)
    fh = open(sink, "w", encoding="utf-8") if own else sink
    try:
        fh.write(LEXICON_HEADER + "\n")
        for entry in lex.entries:
            fh.write(
                "%s\t%d\t%s\n"
                % (entry.word, entry.frequency, ",".join(sorted(entry.keys)))
            )
    finally:
        if own:
            fh.close()


def load_lexicon(source: str | IO[str], table: CharacterTable) -> Lexicon:
    """Read a lexicon TSV; duplicate words merge by summing frequencies.

    Rows with an empty key field get their keys recomputed from the
    table.  Malformed rows (wrong arity, non-integer frequency, non-NFC
    word) raise MalformedFile.
    """
    own = isinstance(source, str)
    fh = open(source, encoding="utf-8") if own else source
    name = source if own else getattr(source, "name", "<lexicon>")
    freq_acc: dict[str, int] = {}
    keys_acc: dict[str, set[str]] = {}
    try:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 3:
                raise MalformedFile(
                    "%s:%d: expected 3 columns, got %d" % (name, lineno, len(cols))
                )
            word, freq_field, keys_field = cols
            if unicodedata.normalize("NFC", word) != word:
                raise MalformedFile("%s:%d: word not NFC: %r" % (name, lineno, word))
            try:
                freq = int(freq_field)
            except ValueError:
                raise MalformedFile(
                    "%s:%d: bad frequency %r" % (name, lineno, freq_field)
                ) from None
            if freq < 1:
                raise MalformedFile("%s:%d: frequency must be >= 1" % (name, lineno))
            keys = {k for k in keys_field.split(",") if k}
            if not keys:
                keys = set(word_keys(table, word))
            freq_acc[word] = freq_acc.get(word, 0) + freq
            keys_acc.setdefault(word, set()).update(keys)
    finally:
        if own:
            fh.close()
    return Lexicon(
        LexiconEntry(word=w, frequency=freq_acc[w], keys=frozenset(keys_acc[w]))
        for w in freq_acc
    )
