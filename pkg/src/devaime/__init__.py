"""Phonetic roman-to-Devanagari input method engine.

Type Hindi with plain roman spellings: the engine segments keystrokes
into phoneme codes, matches phonetic keys against a frequency lexicon
for ranked word suggestions, and falls back to direct character mapping
for unknown words.
"""

from .chartable import (
    VIRAMA,
    CharacterTable,
    PhonemeCategory,
    PhonemeEntry,
    dump_table_file,
    fold_case,
    load_default_table,
    load_table_file,
)
from .compose import compose, joins_as_conjunct
from .editdist import HAS_C_KERNEL, edit_distance
from .engine import (
    FALLBACK,
    LEXICON,
    EngineConfig,
    Suggestion,
    direct_map,
    query_keys,
    suggest,
    transliterate_sentence,
)
from .errors import (
    DevaError,
    IllegalSequence,
    InvalidEncoding,
    MalformedFile,
    MissingData,
    NoSegmentation,
    UnmappedCharacter,
)
from .evaluate import (
    EvalReport,
    SchemeEncoding,
    avg_edit_dist,
    compare_schemes,
    read_frequencies,
    read_responses,
    read_scheme,
    weighted_average,
)
from .lexicon import (
    Lexicon,
    LexiconEntry,
    build_lexicon,
    ingest_corpus,
    load_lexicon,
    normalize_key,
    save_lexicon,
    schwa_dropped_key,
    word_keys,
)
from .segment import (
    Arc,
    Tokenization,
    TokenLattice,
    build_lattice,
    count_paths,
    enumerate_paths,
    greedy_tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "VIRAMA",
    "CharacterTable",
    "PhonemeCategory",
    "PhonemeEntry",
    "fold_case",
    "load_default_table",
    "load_table_file",
    "dump_table_file",
    "compose",
    "joins_as_conjunct",
    "edit_distance",
    "HAS_C_KERNEL",
    "Arc",
    "TokenLattice",
    "Tokenization",
    "build_lattice",
    "greedy_tokenize",
    "enumerate_paths",
    "count_paths",
    "Lexicon",
    "LexiconEntry",
    "ingest_corpus",
    "normalize_key",
    "schwa_dropped_key",
    "word_keys",
    "build_lexicon",
    "save_lexicon",
    "load_lexicon",
    "Suggestion",
    "EngineConfig",
    "LEXICON",
    "FALLBACK",
    "direct_map",
    "query_keys",
    "suggest",
    "transliterate_sentence",
    "SchemeEncoding",
    "EvalReport",
    "avg_edit_dist",
    "weighted_average",
    "compare_schemes",
    "read_responses",
    "read_scheme",
    "read_frequencies",
    "DevaError",
    "UnmappedCharacter",
    "NoSegmentation",
    "IllegalSequence",
    "InvalidEncoding",
    "MalformedFile",
    "MissingData",
    "__version__",
]
