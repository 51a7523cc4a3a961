"""Devanagari phoneme table and canonical romanization.

The table maps each Devanagari phoneme (11 independent vowels, 33
consonants, 2 diacritics) to a canonical lowercase roman code plus any
number of alternate spellings, giving a many-to-many correspondence
between roman strings and Devanagari characters.

Retroflex and otherwise ambiguous phonemes get uppercase escape codes so
that every character stays typeable without colliding with common
dental-consonant sequences: T/Th/D/Dh/N for the retroflex row, NG/NJ for
the nasals, R for the vocalic r, M/H for anusvara/visarga.  Their
traditional lowercase spellings ("ta", "tha", "ri", ...) are kept as
*lexicon-only* alternates: they participate in lattice matching against
the word lexicon but are never used by direct greedy mapping.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field

from .errors import MalformedFile, UnmappedCharacter

VIRAMA = "्"

# Uppercase letters that survive case folding because the escape codes use them.
RESERVED_UPPER = frozenset("TDNGJRMH")

_CODE_LETTERS = frozenset("abcdefghijklmnopqrstuvwxyz") | RESERVED_UPPER


class PhonemeCategory(enum.Enum):
    INDEPENDENT_VOWEL = "IndependentVowel"
    CONSONANT = "Consonant"
    DIACRITIC = "Diacritic"


@dataclass(frozen=True)
class PhonemeEntry:
    """One Devanagari phoneme with its roman spellings.

    ``alt_codes`` holds every alternate spelling; the subset in
    ``lexicon_only`` is excluded from greedy direct mapping and only
    considered when matching lattice paths against lexicon keys.
    ``matra`` is the dependent vowel sign, present for every independent
    vowel except the inherent one.
    """

    devanagari: str
    canonical: str
    alt_codes: frozenset[str]
    category: PhonemeCategory
    matra: str | None = None
    lexicon_only: frozenset[str] = field(default_factory=frozenset)

    def codes(self) -> frozenset[str]:
        """All spellings, canonical and alternate."""
        return self.alt_codes | {self.canonical}

    def direct_codes(self) -> frozenset[str]:
        """Spellings usable by greedy direct mapping."""
        return self.codes() - self.lexicon_only

    @property
    def is_vowel(self) -> bool:
        return self.category is PhonemeCategory.INDEPENDENT_VOWEL

    @property
    def is_consonant(self) -> bool:
        return self.category is PhonemeCategory.CONSONANT

    @property
    def is_diacritic(self) -> bool:
        return self.category is PhonemeCategory.DIACRITIC


# Rows: devanagari, canonical code, alternates (lexicon-only prefixed "!"),
# category, matra.  Alternates beyond the escape spellings reflect common
# romanized-Hindi habits: ee/oo long vowels, w/f/z/q consonant variants, and
# "sh" reaching the retroflex sibilant as well.
_V = PhonemeCategory.INDEPENDENT_VOWEL
_C = PhonemeCategory.CONSONANT
_D = PhonemeCategory.DIACRITIC

_DEFAULT_ROWS = (
    ("अ", "a", (), _V, None),            # अ
    ("आ", "aa", (), _V, "ा"),       # आ ा
    ("इ", "i", (), _V, "ि"),        # इ ि
    ("ई", "ii", ("ee",), _V, "ी"),  # ई ी
    ("उ", "u", (), _V, "ु"),        # उ ु
    ("ऊ", "uu", ("oo",), _V, "ू"),  # ऊ ू
    ("ऋ", "R", ("!ri",), _V, "ृ"),  # ऋ ृ
    ("ए", "e", (), _V, "े"),        # ए े
    ("ऐ", "ai", (), _V, "ै"),       # ऐ ै
    ("ओ", "o", (), _V, "ो"),        # ओ ो
    ("औ", "au", (), _V, "ौ"),       # औ ौ
    ("ं", "M", ("!m",), _D, None),       # ं anusvara
    ("ः", "H", ("!h",), _D, None),       # ः visarga
    ("क", "k", ("q",), _C, None),        # क
    ("ख", "kh", (), _C, None),           # ख
    ("ग", "g", (), _C, None),            # ग
    ("घ", "gh", (), _C, None),           # घ
    ("ङ", "NG", ("!nga",), _C, None),    # ङ
    ("च", "c", (), _C, None),            # च
    ("छ", "ch", (), _C, None),           # छ
    ("ज", "j", ("z",), _C, None),        # ज
    ("झ", "jh", (), _C, None),           # झ
    ("ञ", "NJ", ("!nja",), _C, None),    # ञ
    ("ट", "T", ("!ta",), _C, None),      # ट
    ("ठ", "Th", ("!tha",), _C, None),    # ठ
    ("ड", "D", ("!da",), _C, None),      # ड
    ("ढ", "Dh", ("!dha",), _C, None),    # ढ
    ("ण", "N", ("!na",), _C, None),      # ण
    ("त", "t", (), _C, None),            # त
    ("थ", "th", (), _C, None),           # थ
    ("द", "d", (), _C, None),            # द
    ("ध", "dh", (), _C, None),           # ध
    ("न", "n", (), _C, None),            # न
    ("प", "p", (), _C, None),            # प
    ("फ", "ph", ("f",), _C, None),       # फ
    ("ब", "b", (), _C, None),            # ब
    ("भ", "bh", (), _C, None),           # भ
    ("म", "m", (), _C, None),            # म
    ("य", "y", (), _C, None),            # य
    ("र", "r", (), _C, None),            # र
    ("ल", "l", (), _C, None),            # ल
    ("व", "v", ("w",), _C, None),        # व
    ("श", "sh", (), _C, None),           # श
    ("ष", "ssh", ("sh",), _C, None),     # ष
    ("स", "s", (), _C, None),            # स
    ("ह", "h", (), _C, None),            # ह
)


def fold_case(roman: str) -> str:
    """Lowercase roman input, preserving the reserved escape letters."""
    return "".join(c if c in RESERVED_UPPER else c.lower() for c in roman)


class CharacterTable:
    """Immutable phoneme table with code and character indexes."""

    def __init__(self, entries: list[PhonemeEntry] | tuple[PhonemeEntry, ...]):
        self.entries: tuple[PhonemeEntry, ...] = tuple(entries)
        self.code_index: dict[str, tuple[PhonemeEntry, ...]] = {}
        self.char_index: dict[str, PhonemeEntry] = {}
        self._direct_index: dict[str, tuple[PhonemeEntry, ...]] = {}
        self._matra_index: dict[str, PhonemeEntry] = {}
        self._ordinal: dict[str, int] = {}

        seen_canonical: set[str] = set()
        for pos, entry in enumerate(self.entries):
            self._validate(entry)
            if entry.devanagari in self.char_index:
                raise MalformedFile(
                    "duplicate table entry for %r" % entry.devanagari
                )
            if entry.canonical in seen_canonical:
                raise MalformedFile(
                    "duplicate canonical code %r" % entry.canonical
                )
            seen_canonical.add(entry.canonical)
            self.char_index[entry.devanagari] = entry
            self._ordinal[entry.devanagari] = pos
            if entry.matra:
                self._matra_index[entry.matra] = entry
            for code in entry.codes():
                self.code_index[code] = self.code_index.get(code, ()) + (entry,)
            for code in entry.direct_codes():
                self._direct_index[code] = self._direct_index.get(code, ()) + (entry,)

        self.max_code_len = max((len(c) for c in self.code_index), default=0)

    @staticmethod
    def _validate(entry: PhonemeEntry) -> None:
        ch = entry.devanagari
        if len(ch) != 1 or not "ऀ" <= ch <= "ॿ":
            raise MalformedFile("not a single Devanagari scalar: %r" % ch)
        for code in entry.codes():
            if not code or not set(code) <= _CODE_LETTERS:
                raise MalformedFile("bad roman code %r for %r" % (code, ch))
        if entry.canonical in entry.alt_codes:
            raise MalformedFile("canonical code of %r repeated in alternates" % ch)
        if not entry.lexicon_only <= entry.alt_codes:
            raise MalformedFile("lexicon-only codes of %r not among alternates" % ch)
        if entry.matra is not None and not entry.is_vowel:
            raise MalformedFile("non-vowel %r cannot carry a matra" % ch)
        if entry.is_vowel and entry.matra is None and ch != "अ":
            raise MalformedFile("vowel %r lacks a dependent form" % ch)
        if ch == "अ" and entry.matra is not None:
            raise MalformedFile("the inherent vowel has no dependent sign")

    def ordinal(self, entry: PhonemeEntry) -> int:
        """Position of the entry in table order (used for tie-breaks)."""
        return self._ordinal[entry.devanagari]

    def lookup_by_code(self, code: str) -> set[PhonemeEntry]:
        """Entries whose canonical or alternate codes contain ``code``."""
        return set(self.code_index.get(code, ()))

    def direct_matches(self, code: str) -> tuple[PhonemeEntry, ...]:
        """Entries reachable by greedy direct mapping, in table order."""
        return self._direct_index.get(code, ())

    def lookup_by_char(self, ch: str) -> PhonemeEntry | None:
        """The unique entry for an independent Devanagari form, if any."""
        return self.char_index.get(ch)

    def vowel_for_matra(self, ch: str) -> PhonemeEntry | None:
        return self._matra_index.get(ch)

    def reverse_transliterate(self, word: str) -> str:
        """Canonical romanization of an NFC Devanagari word.

        A bare consonant (no matra, no virama) emits its code plus the
        inherent "a"; a consonant before a matra emits its code plus the
        vowel's code; a virama suppresses the vowel entirely.
        """
        out: list[str] = []
        i = 0
        n = len(word)
        while i < n:
            ch = word[i]
            entry = self.char_index.get(ch)
            if entry is None:
                raise UnmappedCharacter(ch, word)
            out.append(entry.canonical)
            i += 1
            if entry.is_consonant and i < n:
                nxt = word[i]
                vowel = self._matra_index.get(nxt)
                if vowel is not None:
                    out.append(vowel.canonical)
                    i += 1
                    continue
                if nxt == VIRAMA:
                    i += 1
                    continue
                out.append("a")
            elif entry.is_consonant:
                out.append("a")
        return "".join(out)


def load_default_table() -> CharacterTable:
    """The built-in 46-entry table."""
    entries = []
    for ch, canonical, alts, category, matra in _DEFAULT_ROWS:
        lexicon_only = frozenset(a[1:] for a in alts if a.startswith("!"))
        alt_codes = frozenset(a.lstrip("!") for a in alts)
        entries.append(
            PhonemeEntry(
                devanagari=ch,
                canonical=canonical,
                alt_codes=alt_codes,
                category=category,
                matra=matra,
                lexicon_only=lexicon_only,
            )
        )
    return CharacterTable(entries)


_CATEGORY_BY_NAME = {c.value: c for c in PhonemeCategory}


def load_table_file(path) -> CharacterTable:
    """Read a table override from a UTF-8 TSV file.

    Columns: devanagari, canonical code, comma-separated alternates
    ("-" for none, "!" prefix marks lexicon-only), category, matra or "-".
    Blank lines and lines starting with "#" are skipped.
    """
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 5:
                raise MalformedFile(
                    "%s:%d: expected 5 columns, got %d" % (path, lineno, len(cols))
                )
            ch, canonical, alts_field, category_name, matra_field = cols
            ch = unicodedata.normalize("NFC", ch)
            category = _CATEGORY_BY_NAME.get(category_name)
            if category is None:
                raise MalformedFile(
                    "%s:%d: unknown category %r" % (path, lineno, category_name)
                )
            alts = [a for a in alts_field.split(",") if a and a != "-"]
            lexicon_only = frozenset(a[1:] for a in alts if a.startswith("!"))
            alt_codes = frozenset(a.lstrip("!") for a in alts)
            matra = None if matra_field in ("", "-") else matra_field
            try:
                entries.append(
                    PhonemeEntry(
                        devanagari=ch,
                        canonical=canonical,
                        alt_codes=alt_codes,
                        category=category,
                        matra=matra,
                        lexicon_only=lexicon_only,
                    )
                )
            except TypeError as exc:
                raise MalformedFile("%s:%d: %s" % (path, lineno, exc))
    try:
        return CharacterTable(entries)
    except MalformedFile as exc:
        raise MalformedFile("%s: %s" % (path, exc))


def dump_table_file(table: CharacterTable, path) -> None:
    """Write a table in the override TSV format."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("#deva-chartable v1\n")
        for entry in table.entries:
            alts = sorted(entry.alt_codes)
            alts_field = (
                ",".join(
                    ("!" + a) if a in entry.lexicon_only else a for a in alts
                )
                or "-"
            )
            fh.write(
                "%s\t%s\t%s\t%s\t%s\n"
                % (
                    entry.devanagari,
                    entry.canonical,
                    alts_field,
                    entry.category.value,
                    entry.matra or "-",
                )
            )
