import random
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from poemetrics import (
    PoemCollection,
    collection_novelty,
    inter_all_lines,
    inter_line_by_line,
    inter_single_string,
    intra_poem_novelty,
    rouge_n,
)
from poemetrics.novelty import InvalidOrderError, TooFewLinesError, TooFewPoemsError
from poemetrics.novelty import _kernels_numba, _kernels_numpy
from poemetrics.novelty.kernels import encode_units

from tests.conftest import poem_from_lines


def brute_rouge(candidate, reference, n):
    """Independent ROUGE-N oracle: list every n-gram, clip with list.count()."""
    cand_grams = [tuple(candidate[i:i + n]) for i in range(len(candidate) - n + 1)]
    ref_grams = [tuple(reference[i:i + n]) for i in range(len(reference) - n + 1)]
    overlap = sum(min(cand_grams.count(g), ref_grams.count(g))
                  for g in set(cand_grams))
    p = Fraction(overlap, len(cand_grams)) if cand_grams else Fraction(0)
    r = Fraction(overlap, len(ref_grams)) if ref_grams else Fraction(0)
    f1 = 2 * p * r / (p + r) if p + r > 0 else Fraction(0)
    return p, r, f1


token_lists = st.lists(st.sampled_from("abcdefgh"), max_size=8)


class TestRougeN:
    def test_identity(self):
        score = rouge_n(["a", "b", "c"], ["a", "b", "c"], 1)
        assert (score.precision, score.recall, score.f1) == (1.0, 1.0, 1.0)

    def test_disjoint(self):
        score = rouge_n(["a", "b", "c"], ["d", "e", "f"], 1)
        assert (score.precision, score.recall, score.f1) == (0.0, 0.0, 0.0)

    def test_unigram_partial_overlap(self):
        score = rouge_n(["a", "b", "c"], ["a", "b", "d"], 1)
        assert score.precision == pytest.approx(2 / 3, abs=1e-12)
        assert score.recall == pytest.approx(2 / 3, abs=1e-12)
        assert score.f1 == pytest.approx(2 / 3, abs=1e-12)

    def test_bigram_partial_overlap(self):
        score = rouge_n(["a", "b", "c"], ["a", "b", "d"], 2)
        assert score.precision == pytest.approx(1 / 2, abs=1e-12)
        assert score.recall == pytest.approx(1 / 2, abs=1e-12)
        assert score.f1 == pytest.approx(1 / 2, abs=1e-12)

    def test_clipped_counts(self):
        score = rouge_n(["a", "a", "a"], ["a", "a", "b"], 1)
        assert score.precision == pytest.approx(2 / 3, abs=1e-12)
        assert score.recall == pytest.approx(2 / 3, abs=1e-12)

    def test_both_shorter_than_n(self):
        score = rouge_n(["a"], ["b"], 2)
        assert (score.precision, score.recall, score.f1) == (0.0, 0.0, 0.0)

    def test_empty_candidate(self):
        score = rouge_n([], ["a", "b"], 1)
        assert (score.precision, score.recall, score.f1) == (0.0, 0.0, 0.0)

    def test_invalid_order(self):
        with pytest.raises(InvalidOrderError):
            rouge_n(["a"], ["a"], 0)

    def test_matches_brute_force_on_random_pairs(self):
        rng = random.Random(7)
        vocab = "abcdefgh"
        for _ in range(300):
            n = rng.choice([1, 2])
            cand = [rng.choice(vocab) for _ in range(rng.randint(0, 6))]
            ref = [rng.choice(vocab) for _ in range(rng.randint(0, 6))]
            p, r, f1 = brute_rouge(cand, ref, n)
            score = rouge_n(cand, ref, n)
            assert abs(score.precision - float(p)) <= 1e-12
            assert abs(score.recall - float(r)) <= 1e-12
            assert abs(score.f1 - float(f1)) <= 1e-12

    @given(token_lists, token_lists, st.integers(min_value=1, max_value=3))
    @settings(deadline=None)
    def test_symmetry_swaps_precision_and_recall(self, x, y, n):
        xy = rouge_n(x, y, n)
        yx = rouge_n(y, x, n)
        assert xy.f1 == yx.f1
        assert xy.precision == yx.recall
        assert xy.recall == yx.precision

    @given(token_lists, token_lists, st.integers(min_value=1, max_value=3))
    @settings(deadline=None)
    def test_bounded(self, x, y, n):
        score = rouge_n(x, y, n)
        for value in (score.precision, score.recall, score.f1):
            assert 0.0 <= value <= 1.0

    @given(st.lists(st.sampled_from("abcd"), min_size=1, max_size=8))
    @settings(deadline=None)
    def test_self_comparison_is_perfect(self, x):
        score = rouge_n(x, x, 1)
        assert (score.precision, score.recall, score.f1) == (1.0, 1.0, 1.0)

    def test_one_token_replacement_strictly_lowers_f1(self):
        rng = random.Random(13)
        for _ in range(50):
            original = [rng.choice("abcd") for _ in range(rng.randint(1, 8))]
            copy = list(original)
            copy[rng.randrange(len(copy))] = "z"  # out of vocabulary
            assert rouge_n(copy, original, 1).f1 < 1.0


class TestIntraPoem:
    def test_identical_lines(self):
        poem = poem_from_lines("the same line", "the same line", "the same line")
        assert intra_poem_novelty(poem) == 1.0

    def test_disjoint_lines(self):
        poem = poem_from_lines("a b", "c d", "e f")
        assert intra_poem_novelty(poem) == 0.0

    def test_hand_computed_fixture(self):
        poem = poem_from_lines("a b", "a c", "d e")
        assert intra_poem_novelty(poem) == pytest.approx(1 / 6, abs=1e-12)

    def test_identical_text_at_two_positions_counts(self):
        poem = poem_from_lines("a b", "a b")
        assert intra_poem_novelty(poem) == 1.0

    def test_single_line_rejected(self):
        with pytest.raises(TooFewLinesError):
            intra_poem_novelty(poem_from_lines("only one line"))

    def test_matches_scalar_rouge_mean(self):
        from itertools import combinations
        from poemetrics import tokenize
        poem = poem_from_lines("the light of day", "come what may",
                               "the light of night", "what light may come")
        tokens = [tokenize(line) for line in poem.lines]
        expected = np.mean([rouge_n(tokens[i], tokens[j], 1).f1
                            for i, j in combinations(range(4), 2)])
        assert intra_poem_novelty(poem) == pytest.approx(float(expected), abs=1e-12)


class TestInterModes:
    def test_single_string_identical(self):
        p = poem_from_lines("a b", "c")
        assert inter_single_string(p, p).f1 == 1.0

    def test_single_string_disjoint(self):
        assert inter_single_string(poem_from_lines("a b"),
                                   poem_from_lines("c d")).f1 == 0.0

    def test_single_string_concatenates_lines(self):
        p1 = poem_from_lines("a b", "c")
        p2 = poem_from_lines("a", "c d")
        assert inter_single_string(p1, p2).f1 == pytest.approx(2 / 3, abs=1e-12)

    def test_line_by_line_identical(self):
        p = poem_from_lines("a b", "c d")
        assert inter_line_by_line(p, p) == 1.0

    def test_line_by_line_truncates_longer_poem(self):
        p1 = poem_from_lines("a b", "x", "q r", "s t")
        p2 = poem_from_lines("a b", "y")
        assert inter_line_by_line(p1, p2) == pytest.approx(0.5, abs=1e-12)

    def test_line_by_line_hand_computed(self):
        p1 = poem_from_lines("a b", "x")
        p2 = poem_from_lines("a b", "y", "z")
        assert inter_line_by_line(p1, p2) == pytest.approx(0.5, abs=1e-12)

    def test_all_lines_identical_single_line(self):
        p = poem_from_lines("a b c")
        assert inter_all_lines(p, p) == 1.0

    def test_all_lines_disjoint(self):
        assert inter_all_lines(poem_from_lines("a", "b"),
                               poem_from_lines("c", "d")) == 0.0

    def test_all_lines_cartesian_mean(self):
        p1 = poem_from_lines("a", "b")
        p2 = poem_from_lines("a")
        assert inter_all_lines(p1, p2) == pytest.approx(0.5, abs=1e-12)

    def test_all_modes_match_brute_force_on_micro_poems(self):
        from poemetrics import tokenize
        rng = random.Random(99)
        vocab = "abcdef"
        for _ in range(25):
            lines1 = [" ".join(rng.choice(vocab) for _ in range(rng.randint(1, 6)))
                      for _ in range(rng.randint(1, 5))]
            lines2 = [" ".join(rng.choice(vocab) for _ in range(rng.randint(1, 6)))
                      for _ in range(rng.randint(1, 5))]
            p1 = poem_from_lines(*lines1, id="p1")
            p2 = poem_from_lines(*lines2, id="p2")
            t1 = [tokenize(l) for l in lines1]
            t2 = [tokenize(l) for l in lines2]
            for n in (1, 2):
                flat = brute_rouge(sum(t1, []), sum(t2, []), n)[2]
                assert abs(inter_single_string(p1, p2, n).f1 - float(flat)) <= 1e-12
                m = min(len(t1), len(t2))
                aligned = [brute_rouge(t1[i], t2[i], n)[2] for i in range(m)]
                assert abs(inter_line_by_line(p1, p2, n)
                           - float(sum(aligned) / m)) <= 1e-12
                crossed = [brute_rouge(a, b, n)[2] for a in t1 for b in t2]
                assert len(crossed) == len(t1) * len(t2)
                assert abs(inter_all_lines(p1, p2, n)
                           - float(sum(crossed) / len(crossed))) <= 1e-12


def make_collection(k, seed=5, lines_per_poem=3):
    rng = random.Random(seed)
    poems = []
    for i in range(k):
        lines = [" ".join(rng.choice("abcdefgh") for _ in range(4))
                 for _ in range(lines_per_poem)]
        poems.append(poem_from_lines(*lines, id=f"poem{i:02d}"))
    return PoemCollection.from_poems(poems)


class TestCollectionNovelty:
    def test_two_poems_score_one_pair(self):
        report = collection_novelty(make_collection(2), "inter")
        assert len(report.per_unit) == 1
        assert report.per_unit[0][0] == "poem00|poem01"

    def test_full_run_scores_all_pairs(self):
        report = collection_novelty(make_collection(8), "inter")
        assert len(report.per_unit) == 28
        assert report.sampled is False

    def test_aggregate_is_mean_of_per_unit(self):
        report = collection_novelty(make_collection(6), "inter", mode="line-by-line")
        assert report.mean == pytest.approx(
            np.mean([s for _, s in report.per_unit]), abs=1e-12)

    def test_sampling_is_deterministic(self):
        coll = make_collection(8)
        first = collection_novelty(coll, "inter", sample=(10, 7))
        second = collection_novelty(coll, "inter", sample=(10, 7))
        assert first == second
        assert first.sampled is True
        assert first.seed == 7
        assert len(first.per_unit) == 10

    def test_sample_draws_subset_of_full_pairs(self):
        coll = make_collection(8)
        full = dict(collection_novelty(coll, "inter").per_unit)
        sampled = collection_novelty(coll, "inter", sample=(10, 7))
        for unit, score in sampled.per_unit:
            assert full[unit] == score

    def test_sample_larger_than_population_uses_all_pairs(self):
        report = collection_novelty(make_collection(4), "inter", sample=(100, 3))
        assert len(report.per_unit) == 6
        assert report.sampled is False

    def test_different_seeds_differ(self):
        coll = make_collection(10)
        a = collection_novelty(coll, "inter", sample=(5, 1))
        b = collection_novelty(coll, "inter", sample=(5, 2))
        assert [u for u, _ in a.per_unit] != [u for u, _ in b.per_unit]

    def test_intra_scope(self):
        coll = make_collection(4)
        report = collection_novelty(coll, "intra")
        assert report.scope == "intra"
        assert len(report.per_unit) == 4
        expected = [intra_poem_novelty(p) for p in coll.poems]
        assert [s for _, s in report.per_unit] == pytest.approx(expected, abs=1e-12)

    def test_intra_skips_single_line_poems(self):
        poems = [poem_from_lines("a b", "c d", id="multi"),
                 poem_from_lines("only line", id="single")]
        report = collection_novelty(PoemCollection.from_poems(poems), "intra")
        assert [u for u, _ in report.per_unit] == ["multi"]

    def test_intra_all_single_line_rejected(self):
        poems = [poem_from_lines("one", id="a"), poem_from_lines("two", id="b")]
        with pytest.raises(TooFewPoemsError):
            collection_novelty(PoemCollection.from_poems(poems), "intra")

    def test_inter_needs_two_poems(self):
        with pytest.raises(TooFewPoemsError):
            collection_novelty(make_collection(1), "inter")

    def test_inter_modes_match_pairwise_functions(self):
        coll = make_collection(5)
        pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
        for mode, fn in [("single-string", lambda a, b: inter_single_string(a, b).f1),
                         ("line-by-line", inter_line_by_line),
                         ("all-lines", inter_all_lines)]:
            report = collection_novelty(coll, "inter", mode=mode)
            expected = [fn(coll.poems[i], coll.poems[j]) for i, j in pairs]
            assert [s for _, s in report.per_unit] == pytest.approx(expected, abs=1e-12)


class TestKernelBackends:
    def _random_batch(self, seed):
        rng = random.Random(seed)
        units = [[rng.choice("abcde") for _ in range(rng.randint(0, 9))]
                 for _ in range(12)]
        ids, offsets = encode_units(units, rng.choice([1, 2]))
        pairs = [(i, j) for i in range(12) for j in range(12)]
        left = np.array([i for i, _ in pairs], dtype=np.int64)
        right = np.array([j for _, j in pairs], dtype=np.int64)
        return ids, offsets, left, right

    def test_numba_and_numpy_agree_exactly(self):
        for seed in range(10):
            ids, offsets, left, right = self._random_batch(seed)
            numba_out = _kernels_numba.pairwise_f1(ids, offsets, left, right)
            numpy_out = _kernels_numpy.pairwise_f1(ids, offsets, left, right)
            np.testing.assert_array_equal(numba_out, numpy_out)

    def test_env_flag_selects_numpy_backend(self):
        code = ("from poemetrics.novelty import active_backend; "
                "print(active_backend())")
        out = subprocess.run([sys.executable, "-c", code],
                             capture_output=True, text=True,
                             env={"PATH": "/usr/bin:/bin", "POEMETRICS_NUMBA": "0"})
        assert out.stdout.strip() == "numpy"

    def test_default_backend_prefers_numba(self):
        from poemetrics.novelty import active_backend
        assert active_backend() in {"numba", "numpy"}

    def test_encode_empty_units(self):
        ids, offsets = encode_units([[], ["a"]], 2)
        assert offsets.tolist() == [0, 0, 0]
        assert ids.size == 0
