"""Pronunciation lexicon, syllable counting and lexical-stress scansion.

The lexicon format is CMU-dict compatible: one ``WORD  PH1 PH2 ...`` entry
per line, alternate pronunciations as ``WORD(1)``, comment lines starting
with ``;;;``.  Vowel phonemes carry a stress digit (0 no stress, 1 primary,
2 secondary); a word's syllable count is the number of such phonemes.

Words missing from the lexicon fall back to counting maximal groups of
orthographic vowel letters (a, e, i, o, u, y), with a floor of one syllable,
and are flagged as out-of-vocabulary so reports can show OOV rates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

from .corpus import TokenPolicy, tokenize

_PHONEME_RE = re.compile(r"^[A-Z]+[0-2]?$")
_ALT_SUFFIX_RE = re.compile(r"^(.*)\((\d+)\)$")
_VOWEL_GROUP_RE = re.compile(r"[aeiouy]+")


def is_vowel_phoneme(phoneme: str) -> bool:
    return phoneme[-1] in "012"


@dataclass(frozen=True)
class MalformedEntry:
    """A lexicon line that could not be parsed, and why."""

    line_number: int
    content: str
    reason: str


@dataclass(frozen=True)
class PronLexicon:
    """Word pronunciations keyed by uppercase word.

    Each word maps to its pronunciations in file order; the first one is the
    primary pronunciation used for counting and stress.
    """

    entries: dict[str, tuple[tuple[str, ...], ...]]
    problems: tuple[MalformedEntry, ...] = field(default=(), compare=False)

    def __contains__(self, word: str) -> bool:
        return word.upper() in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def primary(self, word: str) -> tuple[str, ...] | None:
        prons = self.entries.get(word.upper())
        return prons[0] if prons else None

    def pronunciations(self, word: str) -> tuple[tuple[str, ...], ...]:
        return self.entries.get(word.upper(), ())


@dataclass(frozen=True)
class StressPattern:
    """Per-syllable lexical stress of a line, one digit (0/1/2) per syllable."""

    pattern: str

    def __len__(self) -> int:
        return len(self.pattern)


def load_lexicon(source: str | Path | IO[str] | Iterable[str]) -> PronLexicon:
    """Load a CMU-format pronunciation lexicon from a path or text stream.

    Malformed lines are skipped and reported on ``problems``; alternates
    like ``WORD(1)`` merge under WORD preserving file order.
    """
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8", errors="replace") as handle:
            return _parse_lexicon(handle)
    return _parse_lexicon(source)


def _parse_lexicon(lines: Iterable[str]) -> PronLexicon:
    entries: dict[str, list[tuple[str, ...]]] = {}
    problems: list[MalformedEntry] = []
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(";;;"):
            continue
        fields = line.split()
        word, phonemes = fields[0], fields[1:]
        alt = _ALT_SUFFIX_RE.match(word)
        if alt:
            word = alt.group(1)
        word = word.upper()
        if not word:
            problems.append(MalformedEntry(number, line, "missing word"))
            continue
        if not phonemes:
            problems.append(MalformedEntry(number, line, "no phonemes"))
            continue
        bad = [p for p in phonemes if not _PHONEME_RE.match(p)]
        if bad:
            problems.append(MalformedEntry(number, line, f"bad phoneme {bad[0]!r}"))
            continue
        if not any(is_vowel_phoneme(p) for p in phonemes):
            problems.append(MalformedEntry(number, line, "no vowel phoneme"))
            continue
        entries.setdefault(word, []).append(tuple(phonemes))
    frozen = {w: tuple(prons) for w, prons in entries.items()}
    return PronLexicon(entries=frozen, problems=tuple(problems))


def fallback_syllables(word: str) -> int:
    """Heuristic syllable count: maximal orthographic vowel groups, floor 1."""
    return max(1, len(_VOWEL_GROUP_RE.findall(word.lower())))


def syllable_count_word(word: str, lexicon: PronLexicon | None) -> tuple[int, bool]:
    """Count syllables of one word.

    Returns ``(count, oov)``: vowel phonemes of the primary pronunciation
    when the word is in the lexicon, otherwise the orthographic fallback
    with ``oov=True``.
    """
    if not word:
        raise ValueError("word must be non-empty")
    if lexicon is not None:
        primary = lexicon.primary(word)
        if primary is not None:
            return sum(1 for p in primary if is_vowel_phoneme(p)), False
    return fallback_syllables(word), True


def syllable_count_line(line: str, lexicon: PronLexicon | None,
                        policy: TokenPolicy = TokenPolicy()) -> tuple[int, int]:
    """Sum of per-token syllable counts; returns ``(count, oov_tokens)``."""
    total = 0
    oov_tokens = 0
    for token in tokenize(line, policy):
        count, oov = syllable_count_word(token, lexicon)
        total += count
        oov_tokens += oov
    return total, oov_tokens


def stress_pattern_line(line: str, lexicon: PronLexicon | None,
                        policy: TokenPolicy = TokenPolicy()) -> tuple[StressPattern, int]:
    """Concatenated lexical-stress digits for a line.

    Out-of-vocabulary words contribute "1" per heuristic syllable, so the
    pattern length always equals the line's syllable count.  Returns the
    pattern and the number of OOV tokens.
    """
    digits: list[str] = []
    oov_tokens = 0
    for token in tokenize(line, policy):
        primary = lexicon.primary(token) if lexicon is not None else None
        if primary is not None:
            digits.extend(p[-1] for p in primary if is_vowel_phoneme(p))
        else:
            digits.append("1" * fallback_syllables(token))
            oov_tokens += 1
    return StressPattern("".join(digits)), oov_tokens
