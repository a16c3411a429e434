"""Plain-text and CSV report rendering for listening-test results."""

import csv
import io
from typing import Sequence

from .mos import NATURAL_SPEECH_BAND, MosSummary
from .mushra import MushraSummary, REFERENCE_CONDITION, ScreenResult

MOS_HEADER = "Model | MOS | 95 % CI"
MOS_RULE = "-" * len(MOS_HEADER)


def format_mos_row(summary: MosSummary) -> str:
    """``RHVoice | 3.35 | 0.59`` -- two decimals each, pipe separated."""
    return f"{summary.condition_id} | {summary.mu:.2f} | {summary.ci_half_width:.2f}"


def render_mos_table(
    summaries: Sequence[MosSummary], natural_condition: str | None = None
) -> str:
    """Text table with the natural-speech row set off by a rule line."""
    lines = [MOS_HEADER, MOS_RULE]
    for s in summaries:
        if natural_condition is not None and s.condition_id == natural_condition:
            lines.append(MOS_RULE)
        lines.append(format_mos_row(s))
    notes = []
    for s in summaries:
        if s.single_rating:
            notes.append(f"note: {s.condition_id} has a single rating; CI degenerate")
        if natural_condition is not None and s.condition_id == natural_condition:
            lo, hi = NATURAL_SPEECH_BAND
            if lo <= s.mu <= hi:
                notes.append(f"note: natural speech MOS {s.mu:.2f} within expected {lo}-{hi}")
            else:
                notes.append(f"note: natural speech MOS {s.mu:.2f} outside expected {lo}-{hi}")
    return "\n".join(lines + notes) + "\n"


def render_mushra_report(
    summaries: Sequence[MushraSummary], screen: ScreenResult | None = None
) -> str:
    """Line-oriented MUSHRA summary plus screening and ranking notes."""
    lines = ["Condition | median | Q1 | Q3 | mean | 95 % CI | N"]
    lines.append("-" * len(lines[0]))
    for s in summaries:
        lines.append(
            f"{s.condition_id} | {s.median:.1f} | {s.q1:.1f} | {s.q3:.1f}"
            f" | {s.mean:.2f} | {s.ci_half_width:.2f} | {s.n}"
        )
    ranked = sorted(summaries, key=lambda s: s.median, reverse=True)
    rank = next(
        (i for i, s in enumerate(ranked, 1) if s.condition_id == REFERENCE_CONDITION), None
    )
    if rank is not None:
        lines.append(
            f"note: hidden reference ranked {rank} of {len(ranked)} by median"
        )
    if screen is not None:
        excluded = [s.listener_id for s in screen.report if not s.retained]
        lines.append(
            f"note: post-screening retained {len(screen.retained)} of "
            f"{len(screen.report)} listeners"
            + (f"; excluded: {', '.join(excluded)}" if excluded else "")
        )
    return "\n".join(lines) + "\n"


BOXPLOT_FIELDS = ("condition", "min", "q1", "median", "q3", "max", "mean", "ci")


def boxplot_csv(summaries: Sequence[MushraSummary]) -> str:
    """Plot-ready quartile statistics, one row per condition."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(BOXPLOT_FIELDS)
    for s in summaries:
        writer.writerow(
            [
                s.condition_id,
                f"{s.minimum:.6g}",
                f"{s.q1:.6g}",
                f"{s.median:.6g}",
                f"{s.q3:.6g}",
                f"{s.maximum:.6g}",
                f"{s.mean:.6g}",
                f"{s.ci_half_width:.6g}",
            ]
        )
    return buf.getvalue()
