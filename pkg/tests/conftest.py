import pytest

from devaime import EngineConfig, build_lexicon, load_default_table


@pytest.fixture(scope="session")
def table():
    return load_default_table()


@pytest.fixture(scope="session")
def cfg():
    return EngineConfig()


# the five-word demo lexicon used across engine/CLI/HTTP tests
SEED_FREQS = {"जयपुर": 10, "राजस्थान": 8, "की": 50, "राजधानी": 5, "है": 60}


@pytest.fixture(scope="session")
def seeded_lexicon(table):
    lex, skipped = build_lexicon(SEED_FREQS, table)
    assert not skipped
    return lex


@pytest.fixture(scope="session")
def empty_lexicon(table):
    return build_lexicon({}, table)[0]
