"""Poem parsing, collection loading and the shared tokenizer.

A poem is an ordered list of stanzas, each an ordered list of verse lines.
Plain-text poem files use blank lines as stanza separators; collections are
directory trees whose depth-1 subdirectories name topics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


class EmptyPoemError(ValueError):
    """Raised when poem text contains no non-blank line."""


@dataclass(frozen=True)
class TokenPolicy:
    """How lines are split into tokens for counting and overlap metrics.

    Edge punctuation is stripped per token, so contractions like "don't"
    keep their internal apostrophe.
    """

    lowercase: bool = True
    strip_punctuation: bool = True


@dataclass(frozen=True)
class Poem:
    """One poem: ordered stanzas of text lines plus identity metadata."""

    id: str
    source: str
    language: str
    stanzas: tuple[tuple[str, ...], ...]
    topic: str | None = None

    def __post_init__(self) -> None:
        if len(self.language) != 2:
            raise ValueError(f"language must be a 2-letter code, got {self.language!r}")
        if not self.stanzas or any(not s for s in self.stanzas):
            raise ValueError("poem needs at least one stanza, each with at least one line")
        for stanza in self.stanzas:
            for line in stanza:
                if "\n" in line or "\r" in line:
                    raise ValueError("poem lines must not contain line breaks")
                if not line.strip():
                    raise ValueError("poem lines must not be blank")

    @property
    def lines(self) -> tuple[str, ...]:
        return tuple(line for stanza in self.stanzas for line in stanza)

    @property
    def line_count(self) -> int:
        return sum(len(s) for s in self.stanzas)

    @property
    def stanza_count(self) -> int:
        return len(self.stanzas)

    def to_text(self) -> str:
        """Serialize back to plain text, stanzas separated by one blank line."""
        return "\n\n".join("\n".join(stanza) for stanza in self.stanzas)


@dataclass(frozen=True)
class LoadIssue:
    """A file skipped while loading a collection, and why."""

    path: str
    reason: str


@dataclass(frozen=True)
class PoemCollection:
    """An immutable set of poems with the topics present among them."""

    poems: tuple[Poem, ...]
    topics: frozenset[str]
    issues: tuple[LoadIssue, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        ids = [p.id for p in self.poems]
        if len(set(ids)) != len(ids):
            raise ValueError("poem ids must be unique within a collection")
        missing = {p.topic for p in self.poems if p.topic} - set(self.topics)
        if missing:
            raise ValueError(f"poem topics missing from collection topics: {missing}")

    @classmethod
    def from_poems(cls, poems: list[Poem] | tuple[Poem, ...],
                   issues: tuple[LoadIssue, ...] = ()) -> "PoemCollection":
        topics = frozenset(p.topic for p in poems if p.topic)
        return cls(poems=tuple(poems), topics=topics, issues=issues)

    def __len__(self) -> int:
        return len(self.poems)


def tokenize(line: str, policy: TokenPolicy = TokenPolicy()) -> list[str]:
    """Split a line into tokens under the given policy.

    Splits on whitespace, strips leading/trailing non-alphanumeric characters
    per token (keeping internal apostrophes and hyphens), drops tokens that
    become empty, and case-folds when the policy asks for it.
    """
    tokens = []
    for raw in line.split():
        tok = raw
        if policy.strip_punctuation:
            start, end = 0, len(tok)
            while start < end and not tok[start].isalnum():
                start += 1
            while end > start and not tok[end - 1].isalnum():
                end -= 1
            tok = tok[start:end]
        if not tok:
            continue
        if policy.lowercase:
            tok = tok.casefold()
        tokens.append(tok)
    return tokens


def parse_poem(text: str, *, id: str, source: str = "unknown",
               language: str = "en", topic: str | None = None) -> Poem:
    """Parse plain poem text into a Poem.

    Stanzas are maximal runs of non-blank lines; one or more blank lines
    separate stanzas, and leading/trailing blank lines are ignored.

    Raises EmptyPoemError when the text has no non-blank line.
    """
    stanzas: list[tuple[str, ...]] = []
    current: list[str] = []
    for line in text.splitlines():
        if line.strip():
            current.append(line)
        elif current:
            stanzas.append(tuple(current))
            current = []
    if current:
        stanzas.append(tuple(current))
    if not stanzas:
        raise EmptyPoemError(f"poem {id!r} has no content")
    return Poem(id=id, source=source, language=language, topic=topic,
                stanzas=tuple(stanzas))


def load_collection(root: str | Path, *, language: str = "en",
                    source: str | None = None) -> PoemCollection:
    """Load a topic-organized poem collection from a directory tree.

    Immediate subdirectories of ``root`` are topic names and the files inside
    them are poems on that topic; files directly under ``root`` carry no
    topic.  Poem ids are paths relative to ``root``.  Unreadable or empty
    files are skipped and reported on the collection's ``issues``, never
    aborting the whole load.  Two loads of the same tree yield identical
    collections.
    """
    root = Path(root)
    if not root.is_dir():
        raise NotADirectoryError(f"collection root {root} does not exist")
    if source is None:
        source = root.name

    def is_poem_file(path: Path) -> bool:
        # Broken symlinks count: they are files we must report as unreadable.
        return path.is_file() or path.is_symlink()

    candidates: list[tuple[str, Path, str | None]] = []
    for entry in root.iterdir():
        if entry.name.startswith("."):
            continue
        if is_poem_file(entry):
            candidates.append((entry.name, entry, None))
        elif entry.is_dir():
            for sub in entry.iterdir():
                if sub.name.startswith(".") or not is_poem_file(sub):
                    continue
                candidates.append((f"{entry.name}/{sub.name}", sub, entry.name))
    candidates.sort(key=lambda item: item[0])

    poems: list[Poem] = []
    issues: list[LoadIssue] = []
    for rel_id, path, topic in candidates:
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            issues.append(LoadIssue(path=rel_id, reason=f"unreadable: {exc}"))
            continue
        try:
            poems.append(parse_poem(text, id=rel_id, source=source,
                                    language=language, topic=topic))
        except EmptyPoemError:
            issues.append(LoadIssue(path=rel_id, reason="empty poem file"))
    return PoemCollection.from_poems(poems, issues=tuple(issues))
