"""Line-ending rhyme detection and per-poem rhyme statistics.

Two lines rhyme when the rimes of their final words match: the phoneme
sequence from the last primary- or secondary-stressed vowel to the end of
the word, stress digits erased.  This is a conservative perfect-rhyme test;
slant rhymes are not detected.  Final words missing from the lexicon fall
back to comparing their last three letters.  Identical final words rhyme.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .corpus import Poem, TokenPolicy, tokenize
from .phonetics import PronLexicon, is_vowel_phoneme


class EmptySchemeError(ValueError):
    """Raised when a rhyme statistic is asked of a zero-line scheme."""


@dataclass(frozen=True)
class RimeKey:
    """Comparable rhyme identity of one line ending.

    Exactly one of ``phonemic``/``fallback`` is set for a line with a final
    word; a line with no tokens gets an empty key that matches nothing.
    """

    phonemic: tuple[str, ...] | None = None
    fallback: str | None = None

    @property
    def is_empty(self) -> bool:
        return self.phonemic is None and self.fallback is None

    def matches(self, other: "RimeKey") -> bool:
        if self.is_empty or other.is_empty:
            return False
        return self == other


@dataclass(frozen=True)
class RhymeScheme:
    """One label per line in poem order; equal labels mark rhyming lines."""

    labels: tuple[str, ...]

    @property
    def notation(self) -> str:
        # Single letters concatenate (ABAB); longer labels need a separator.
        if all(len(label) == 1 for label in self.labels):
            return "".join(self.labels)
        return " ".join(self.labels)

    def __len__(self) -> int:
        return len(self.labels)


def rime_key(line: str, lexicon: PronLexicon | None,
             policy: TokenPolicy = TokenPolicy()) -> RimeKey:
    """Rime key of a line's final word.

    Uses the primary pronunciation's rime from its last stressed vowel
    (stress 1 or 2), or from the last vowel when no vowel is stressed.
    Words not in the lexicon key on their last ``min(3, len)`` letters.
    """
    tokens = tokenize(line, policy)
    if not tokens:
        return RimeKey()
    final = tokens[-1]
    primary = lexicon.primary(final) if lexicon is not None else None
    if primary is None:
        return RimeKey(fallback=final[-3:])
    vowel_positions = [i for i, p in enumerate(primary) if is_vowel_phoneme(p)]
    stressed = [i for i in vowel_positions if primary[i][-1] in "12"]
    start = stressed[-1] if stressed else vowel_positions[-1]
    rime = tuple(p.rstrip(string.digits) for p in primary[start:])
    return RimeKey(phonemic=rime)


def _label_for(index: int) -> str:
    # A..Z, then AA..AZ, BA.. for poems with more than 26 rhyme groups.
    letters = ""
    index += 1
    while index > 0:
        index, rem = divmod(index - 1, 26)
        letters = chr(ord("A") + rem) + letters
    return letters


def rhyme_scheme(poem: Poem, lexicon: PronLexicon | None,
                 policy: TokenPolicy = TokenPolicy()) -> RhymeScheme:
    """Label every line of the poem by rhyme group, in reading order.

    Labels are assigned in order of first appearance across the whole poem;
    stanza boundaries do not reset or limit rhyme detection.
    """
    keys: list[RimeKey] = [rime_key(line, lexicon, policy) for line in poem.lines]
    labels: list[str] = []
    group_keys: list[RimeKey] = []
    for key in keys:
        label = None
        for gi, group_key in enumerate(group_keys):
            if key.matches(group_key):
                label = _label_for(gi)
                break
        if label is None:
            label = _label_for(len(group_keys))
            group_keys.append(key)
        labels.append(label)
    return RhymeScheme(labels=tuple(labels))


def rhyme_pattern_count(scheme: RhymeScheme) -> int:
    """Number of distinct labels occurring at least twice in the poem."""
    counts: dict[str, int] = {}
    for label in scheme.labels:
        counts[label] = counts.get(label, 0) + 1
    return sum(1 for c in counts.values() if c >= 2)


def rhyme_richness(scheme: RhymeScheme) -> float:
    """Fraction of lines whose label occurs at least twice (rhyming lines)."""
    if not scheme.labels:
        raise EmptySchemeError("rhyme richness needs at least one line")
    counts: dict[str, int] = {}
    for label in scheme.labels:
        counts[label] = counts.get(label, 0) + 1
    rhyming = sum(1 for label in scheme.labels if counts[label] >= 2)
    return rhyming / len(scheme.labels)
