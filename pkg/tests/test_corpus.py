import random
from collections import Counter

import pytest

from mkspeech.corpus import (
    CoverageState,
    EmptyPool,
    UtteranceCandidate,
    candidate_from_text,
    coverage_report,
    extract_diphones,
    greedy_select,
    load_candidates,
    render_coverage_report,
    write_selection,
)


def make_candidate(utt_id, words, text=None):
    words = tuple(tuple(w) for w in words)
    return UtteranceCandidate(
        id=utt_id,
        text=text or utt_id,
        words=words,
        diphones=extract_diphones(words),
    )


class TestDiphones:
    def test_pair(self):
        assert extract_diphones((("a", "b"),)) == Counter({("a", "b"): 1})

    def test_single_phone_none(self):
        assert extract_diphones((("a",),)) == Counter()

    def test_counting(self):
        got = extract_diphones((("a", "b", "a", "b"),))
        assert got == Counter({("a", "b"): 2, ("b", "a"): 1})

    def test_no_cross_word_pairs(self):
        assert extract_diphones((("a", "b"), ("c", "d"))) == Counter(
            {("a", "b"): 1, ("c", "d"): 1}
        )

    def test_count_invariant(self):
        cand = candidate_from_text("u1", "прва планина расте")
        expected = sum(max(0, len(w) - 1) for w in cand.words)
        assert sum(cand.diphones.values()) == expected


class TestGreedy:
    def test_greedy_dominance(self):
        u1 = make_candidate("u1", [list("abc")])  # covers ab, bc
        u2 = make_candidate("u2", [list("ab")])  # covers ab
        selection, _ = greedy_select([u1, u2], target_count=1, min_len=1, max_len=5)
        assert [c.id for c in selection] == ["u1"]

    def test_target_zero(self):
        u1 = make_candidate("u1", [list("ab")])
        selection, state = greedy_select([u1], target_count=0, min_len=1, max_len=5)
        assert selection == [] and state.selected_ids == []

    def test_length_filter(self):
        short = make_candidate("s", [list("ab")])
        long = make_candidate("l", [list("ab")] * 30)
        ok = make_candidate("ok", [list("ab")] * 5)
        selection, _ = greedy_select([short, long, ok], 3, min_len=3, max_len=20)
        assert [c.id for c in selection] == ["ok"]

    def test_empty_pool(self):
        u1 = make_candidate("u1", [list("ab")])
        with pytest.raises(EmptyPool):
            greedy_select([u1], 1, min_len=5, max_len=10)

    def test_deterministic_tiebreak_by_id(self):
        a = make_candidate("a", [list("xy")], text="ист")
        b = make_candidate("b", [list("xy")], text="ист")
        selection, _ = greedy_select([b, a], 2, min_len=1, max_len=5)
        assert [c.id for c in selection] == ["a", "b"]

    def test_monotone_coverage(self):
        pool = _synthetic_pool(200, seed=5)
        _, state = greedy_select(pool, 50, min_len=1, max_len=50)
        universe = set()
        for c in pool:
            universe |= set(c.diphones)
        covered = set()
        fractions = []
        for utt_id in state.selected_ids:
            cand = next(c for c in pool if c.id == utt_id)
            covered |= set(cand.diphones)
            fractions.append(len(covered & universe) / len(universe))
        assert all(b >= a for a, b in zip(fractions, fractions[1:]))

    def test_greedy_step_optimality(self):
        pool = _synthetic_pool(120, seed=9)
        selection, _ = greedy_select(pool, 20, min_len=1, max_len=50)
        covered: set = set()
        remaining = {c.id: c for c in pool}
        for pick in selection:
            best_new = max(len(set(c.diphones) - covered) for c in remaining.values())
            assert len(set(pick.diphones) - covered) == best_new
            del remaining[pick.id]
            covered |= set(pick.diphones)


def _synthetic_pool(n, seed, phones="abcdefghij"):
    rng = random.Random(seed)
    pool = []
    for i in range(n):
        words = []
        for _ in range(rng.randint(1, 4)):
            length = rng.randint(2, 8)
            words.append([rng.choice(phones) for _ in range(length)])
        pool.append(make_candidate(f"u{i:04d}", words, text="x" * rng.randint(5, 40)))
    return pool


class TestCoverageReport:
    def test_full_coverage(self):
        state = CoverageState()
        state.add(make_candidate("u", [list("abc")]))
        report = coverage_report(state, {("a", "b"), ("b", "c")})
        assert report.fraction == 1.0 and report.missing == ()

    def test_zero_coverage(self):
        report = coverage_report(CoverageState(), {("a", "b")})
        assert report.fraction == 0.0 and report.missing == ((("a", "b")),)

    def test_half_coverage(self):
        state = CoverageState()
        state.add(make_candidate("u", [list("ab")]))
        report = coverage_report(state, {("a", "b"), ("b", "c")})
        assert report.fraction == 0.5

    def test_render_is_line_oriented(self):
        state = CoverageState()
        state.add(make_candidate("u", [list("ab")]))
        text = render_coverage_report(coverage_report(state, {("a", "b"), ("b", "c")}))
        assert "coverage: 0.5000" in text.splitlines()[0]


class TestIO:
    def test_load_plain_and_tsv(self, tmp_path):
        path = tmp_path / "pool.txt"
        path.write_text("мама оди дома\nid7\tдаб расте горе\n", "utf-8")
        cands = load_candidates(path)
        assert [c.id for c in cands] == ["000001", "id7"]
        assert cands[1].text == "даб расте горе"
        assert cands[0].word_count == 3

    def test_selection_tsv(self, tmp_path):
        sel = [make_candidate("a", [list("ab")], text="прва"),
               make_candidate("b", [list("bc")], text="втора")]
        out = tmp_path / "sel.tsv"
        write_selection(out, sel)
        assert out.read_text("utf-8") == "1\ta\tпрва\n2\tb\tвтора\n"
