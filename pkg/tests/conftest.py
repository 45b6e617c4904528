from __future__ import annotations

from pathlib import Path

import pytest

from poemetrics import Poem, load_lexicon, parse_poem

DATA_DIR = Path(__file__).parent / "data"
LEXICON_PATH = DATA_DIR / "lexicon_en.dict"
SONNET_PATH = DATA_DIR / "sonnet18.txt"


def poem_from_lines(*lines: str, id: str = "p", topic: str | None = None,
                    source: str = "test", language: str = "en") -> Poem:
    """One-stanza poem from literal lines, for metric fixtures."""
    return Poem(id=id, source=source, language=language, topic=topic,
                stanzas=(tuple(lines),))


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(LEXICON_PATH)


@pytest.fixture(scope="session")
def lexicon_path():
    return LEXICON_PATH


@pytest.fixture(scope="session")
def sonnet():
    return parse_poem(SONNET_PATH.read_text(encoding="utf-8"), id="sonnet18.txt",
                      source="shakespeare", language="en")


@pytest.fixture(scope="session")
def sonnet_path():
    return SONNET_PATH
