import math
import random

import pytest

from mkspeech.stats import (
    EmptyScores,
    NoReference,
    RatingRecord,
    apply_screen,
    boxplot_csv,
    format_mos_row,
    mos_ci,
    mos_mean,
    mos_table,
    mushra_aggregate,
    mushra_post_screen,
    read_csv,
    read_jsonl,
    read_records,
    render_mos_table,
    render_mushra_report,
    summarize_condition,
    write_csv,
    write_jsonl,
)


def mos_record(listener, condition, value, page="p1", stim="u1"):
    return RatingRecord(listener, f"s-{listener}", page, condition, stim, "mos", value)


def mushra_record(listener, condition, value, page="p1", stim="u1"):
    return RatingRecord(listener, f"s-{listener}", page, condition, stim, "mushra", value)


class TestRecords:
    def test_mos_range(self):
        with pytest.raises(ValueError):
            mos_record("l", "c", 6)
        with pytest.raises(ValueError):
            mos_record("l", "c", 3.5)

    def test_mushra_range(self):
        with pytest.raises(ValueError):
            mushra_record("l", "c", 101)
        mushra_record("l", "c", 0)
        mushra_record("l", "c", 100)

    def test_unknown_scale(self):
        with pytest.raises(ValueError):
            RatingRecord("l", "s", "p", "c", "u", "likert", 3)

    def test_jsonl_roundtrip(self, tmp_path):
        records = [mos_record("l1", "a", 4), mos_record("l2", "b", 2)]
        path = tmp_path / "r.ndjson"
        write_jsonl(path, records)
        assert read_jsonl(path) == records
        assert read_records(path) == records

    def test_csv_roundtrip(self, tmp_path):
        records = [mushra_record("l1", "a", 87.5), mushra_record("l2", "b", 12.0)]
        path = tmp_path / "r.csv"
        write_csv(path, records)
        assert read_csv(path) == records
        assert read_records(path) == records


class TestMosMean:
    def test_examples(self):
        assert mos_mean([4, 4, 4]) == 4.0
        assert mos_mean([1, 2, 3, 4, 5]) == 3.0
        assert mos_mean([5]) == 5.0

    def test_empty(self):
        with pytest.raises(EmptyScores):
            mos_mean([])

    def test_against_brute_force(self):
        rng = random.Random(99)
        for _ in range(200):
            scores = [rng.randint(1, 5) for _ in range(rng.randint(1, 40))]
            acc = 0.0
            for s in scores:
                acc += s
            assert abs(mos_mean(scores) - acc / len(scores)) < 1e-12


class TestMosCi:
    def test_zero_variance(self):
        assert mos_ci([3, 3, 3, 3]) == (3.0, 0.0)

    def test_345(self):
        mu, half = mos_ci([3, 4, 5])
        assert mu == 4.0
        assert half == pytest.approx(1.96 / math.sqrt(3), abs=1e-12)

    def test_single_rating_flagged(self):
        assert mos_ci([4]) == (4.0, 0.0)
        assert summarize_condition("c", [4]).single_rating

    def test_against_brute_force(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(2, 50)
            scores = [rng.randint(1, 5) for _ in range(n)]
            mu = sum(scores) / n
            sigma = math.sqrt(sum((s - mu) ** 2 for s in scores) / (n - 1))
            expected = 1.96 * sigma / math.sqrt(n)
            got_mu, got_half = mos_ci(scores)
            assert abs(got_mu - mu) < 1e-12 and abs(got_half - expected) < 1e-12


class TestMosTable:
    def test_row_format_table_i(self):
        row = summarize_condition("RHVoice", [3, 4])
        import dataclasses

        frozen = dataclasses.replace(row, mu=3.35, ci_half_width=0.59)
        assert format_mos_row(frozen) == "RHVoice | 3.35 | 0.59"

    def test_grouping_and_order(self):
        records = [
            mos_record("l1", "b", 4),
            mos_record("l1", "a", 2),
            mos_record("l2", "b", 4),
            mos_record("l2", "natural", 5),
        ]
        table = mos_table(records, natural_condition="natural")
        assert [t.condition_id for t in table] == ["a", "b", "natural"]
        assert table[1].mu == 4.0 and table[1].n == 2

    def test_permutation_invariant(self):
        records = [mos_record(f"l{i}", c, 1 + (i + len(c)) % 5) for i in range(10) for c in ("x", "y")]
        rng = random.Random(3)
        shuffled = records[:]
        rng.shuffle(shuffled)
        assert mos_table(records) == mos_table(shuffled)

    def test_mixed_scales_rejected(self):
        with pytest.raises(ValueError):
            mos_table([mos_record("l", "a", 3), mushra_record("l", "a", 50)])

    def test_serialization_roundtrip_preserves_table(self, tmp_path):
        rng = random.Random(11)
        records = [
            mos_record(f"l{i}", cond, rng.randint(1, 5), page=f"p{i}")
            for i in range(40)
            for cond in ("a", "b", "c", "d", "natural")
        ]
        path = tmp_path / "r.ndjson"
        write_jsonl(path, records)
        assert mos_table(read_jsonl(path)) == mos_table(records)

    def test_render_includes_natural_separator(self):
        records = [mos_record("l1", "a", 4), mos_record("l1", "natural", 5)]
        text = render_mos_table(mos_table(records, "natural"), "natural")
        lines = text.splitlines()
        assert lines[0] == "Model | MOS | 95 % CI"
        assert "natural" in lines[-2] or any("natural speech MOS" in l for l in lines)


class TestPostScreen:
    def test_perfect_listener_retained(self):
        records = [mushra_record("l1", "reference", 100, page=f"p{i}") for i in range(10)]
        assert "l1" in mushra_post_screen(records).retained

    def test_always_low_listener_excluded(self):
        records = [mushra_record("l1", "reference", 50, page=f"p{i}") for i in range(10)]
        screen = mushra_post_screen(records)
        assert "l1" not in screen.retained
        assert screen.report[0].violations == 10

    def test_boundary_fraction_retained(self):
        # one low trial out of ten is 10 % <= 15 %
        records = [
            mushra_record("l1", "reference", 85 if i == 0 else 95, page=f"p{i}")
            for i in range(10)
        ]
        assert "l1" in mushra_post_screen(records).retained

    def test_two_of_ten_excluded(self):
        records = [
            mushra_record("l1", "reference", 50 if i < 2 else 95, page=f"p{i}")
            for i in range(10)
        ]
        assert "l1" not in mushra_post_screen(records).retained

    def test_no_reference_errors(self):
        with pytest.raises(NoReference):
            mushra_post_screen([mushra_record("l1", "sysA", 70)])

    def test_monotone_in_threshold(self):
        rng = random.Random(5)
        records = [
            mushra_record(f"l{j}", "reference", rng.randint(60, 100), page=f"p{i}")
            for j in range(8)
            for i in range(10)
        ]
        retained_prev = None
        for threshold in (70, 80, 90, 95):
            retained = mushra_post_screen(records, ref_threshold=threshold).retained
            if retained_prev is not None:
                assert retained <= retained_prev  # raising threshold never adds listeners
            retained_prev = retained

    def test_apply_screen_filters(self):
        records = [mushra_record("l1", "reference", 100), mushra_record("l2", "reference", 10)]
        screen = mushra_post_screen(records)
        kept = apply_screen(records, screen)
        assert {r.listener_id for r in kept} == {"l1"}


class TestMushraAggregate:
    def test_all_100(self):
        records = [mushra_record(f"l{i}", "sysA", 100) for i in range(5)]
        (summary,) = mushra_aggregate(records)
        assert summary.median == 100 and summary.q3 - summary.q1 == 0

    def test_median_of_three(self):
        records = [mushra_record(f"l{i}", "sysA", v) for i, v in enumerate((0, 50, 100))]
        (summary,) = mushra_aggregate(records)
        assert summary.median == 50

    def test_quartiles_linear_interpolation(self):
        records = [mushra_record(f"l{i}", "sysA", v) for i, v in enumerate((0, 10, 20, 30))]
        (summary,) = mushra_aggregate(records)
        assert summary.q1 == 7.5 and summary.q3 == 22.5

    def test_permutation_invariant(self):
        rng = random.Random(4)
        records = [
            mushra_record(f"l{i}", c, rng.uniform(0, 100))
            for i in range(12)
            for c in ("a", "b", "reference")
        ]
        shuffled = records[:]
        rng.shuffle(shuffled)
        assert mushra_aggregate(records) == mushra_aggregate(shuffled)

    def test_empty(self):
        with pytest.raises(EmptyScores):
            mushra_aggregate([])

    def test_boxplot_csv_columns(self):
        records = [mushra_record(f"l{i}", "sysA", 10.0 * i) for i in range(5)]
        text = boxplot_csv(mushra_aggregate(records))
        header, row = text.strip().splitlines()
        assert header == "condition,min,q1,median,q3,max,mean,ci"
        assert row.startswith("sysA,0,10,20,30,40,20,")

    def test_report_mentions_reference_rank(self):
        records = [mushra_record("l1", "reference", 95), mushra_record("l1", "sysA", 40)]
        text = render_mushra_report(mushra_aggregate(records))
        assert "hidden reference ranked 1 of 2" in text
