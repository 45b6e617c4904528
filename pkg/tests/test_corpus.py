import os

import pytest
from hypothesis import given, strategies as st

from poemetrics import EmptyPoemError, TokenPolicy, load_collection, parse_poem, tokenize


class TestParsePoem:
    def test_blank_line_splits_stanzas(self):
        poem = parse_poem("a\nb\n\nc", id="p")
        assert poem.stanzas == (("a", "b"), ("c",))

    def test_multiple_blank_lines_collapse(self):
        poem = parse_poem("a\n\n\n\nb", id="p")
        assert poem.stanzas == (("a",), ("b",))

    def test_leading_and_trailing_blanks_ignored(self):
        poem = parse_poem("\n\nfirst\nsecond\n\n", id="p")
        assert poem.stanzas == (("first", "second"),)

    def test_whitespace_only_text_rejected(self):
        with pytest.raises(EmptyPoemError):
            parse_poem("  \n\n", id="p")

    def test_counts(self):
        poem = parse_poem("a\nb\n\nc\n\nd\ne\nf", id="p")
        assert poem.stanza_count == 3
        assert poem.line_count == 6
        assert poem.lines == ("a", "b", "c", "d", "e", "f")

    def test_invariants_enforced(self):
        from poemetrics import Poem
        with pytest.raises(ValueError):
            Poem(id="p", source="s", language="en", stanzas=())
        with pytest.raises(ValueError):
            Poem(id="p", source="s", language="en", stanzas=(("a\nb",),))
        with pytest.raises(ValueError):
            Poem(id="p", source="s", language="en", stanzas=(("   ",),))
        with pytest.raises(ValueError):
            Poem(id="p", source="s", language="english", stanzas=(("a",),))

    @given(st.lists(
        st.lists(
            st.text(alphabet="abcxyz ,.", min_size=1, max_size=20)
            .filter(lambda s: s.strip()),
            min_size=1, max_size=4),
        min_size=1, max_size=4))
    def test_round_trip(self, stanzas):
        from poemetrics import Poem
        poem = Poem(id="p", source="s", language="en",
                    stanzas=tuple(tuple(lines) for lines in stanzas))
        again = parse_poem(poem.to_text(), id="p", source="s", language="en")
        assert again.stanzas == poem.stanzas


class TestTokenize:
    def test_edge_punctuation_stripped(self):
        assert tokenize("Shall I compare thee?") == ["shall", "i", "compare", "thee"]

    def test_empty_line(self):
        assert tokenize("") == []

    def test_internal_apostrophe_kept(self):
        assert tokenize("don't stop") == ["don't", "stop"]

    def test_internal_hyphen_kept(self):
        assert tokenize("a well-known poem...") == ["a", "well-known", "poem"]

    def test_policy_flags(self):
        keep_case = TokenPolicy(lowercase=False)
        assert tokenize("Hello There!", keep_case) == ["Hello", "There"]
        keep_punct = TokenPolicy(strip_punctuation=False)
        assert tokenize("Hello There!", keep_punct) == ["hello", "there!"]

    def test_punctuation_only_tokens_dropped(self):
        assert tokenize("--- ... !!") == []

    @given(st.text(alphabet="aBc'-?! .,", max_size=40))
    def test_idempotent_under_rejoin(self, line):
        tokens = tokenize(line)
        assert tokenize(" ".join(tokens)) == tokens


class TestLoadCollection:
    def _write(self, path, text):
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")

    def test_topics_mirror_layout(self, tmp_path):
        self._write(tmp_path / "love" / "p1.txt", "a line\nanother line")
        self._write(tmp_path / "blue" / "p2.txt", "the sea\nthe sky")
        coll = load_collection(tmp_path)
        assert len(coll) == 2
        assert coll.topics == {"love", "blue"}
        assert [p.id for p in coll.poems] == ["blue/p2.txt", "love/p1.txt"]
        assert coll.poems[0].topic == "blue"

    def test_empty_root(self, tmp_path):
        coll = load_collection(tmp_path)
        assert len(coll) == 0
        assert coll.topics == frozenset()

    def test_toplevel_files_have_no_topic(self, tmp_path):
        self._write(tmp_path / "loose.txt", "one line here")
        coll = load_collection(tmp_path)
        assert coll.poems[0].topic is None
        assert coll.topics == frozenset()

    def test_unreadable_file_skipped_and_reported(self, tmp_path):
        self._write(tmp_path / "love" / "good1.txt", "fine poem")
        self._write(tmp_path / "love" / "good2.txt", "another fine poem")
        os.symlink(tmp_path / "nowhere", tmp_path / "love" / "broken.txt")
        coll = load_collection(tmp_path)
        assert len(coll) == 2
        assert len(coll.issues) == 1
        assert coll.issues[0].path == "love/broken.txt"

    def test_undecodable_and_empty_files_reported(self, tmp_path):
        self._write(tmp_path / "love" / "good.txt", "fine poem")
        (tmp_path / "love" / "binary.txt").write_bytes(b"\xff\xfe\x00bad")
        self._write(tmp_path / "love" / "blank.txt", "   \n\n")
        coll = load_collection(tmp_path)
        assert len(coll) == 1
        assert {i.path for i in coll.issues} == {"love/binary.txt", "love/blank.txt"}

    def test_deterministic(self, tmp_path):
        for name in ["b", "a", "c"]:
            self._write(tmp_path / "t" / f"{name}.txt", f"line {name}")
        first = load_collection(tmp_path)
        second = load_collection(tmp_path)
        assert first == second
        assert [p.id for p in first.poems] == ["t/a.txt", "t/b.txt", "t/c.txt"]

    def test_duplicate_ids_rejected(self):
        from poemetrics import PoemCollection
        from tests.conftest import poem_from_lines
        p = poem_from_lines("a line", id="same")
        with pytest.raises(ValueError):
            PoemCollection.from_poems([p, poem_from_lines("other", id="same")])
