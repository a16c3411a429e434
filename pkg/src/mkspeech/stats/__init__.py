"""MOS and MUSHRA statistics, post-screening and report rendering."""

from .mos import (
    NATURAL_SPEECH_BAND,
    Z_95,
    EmptyScores,
    MosSummary,
    mos_ci,
    mos_mean,
    mos_table,
    summarize_condition,
)
from .mushra import (
    DEFAULT_REF_THRESHOLD,
    DEFAULT_TRIAL_FRACTION,
    REFERENCE_CONDITION,
    ListenerScreen,
    MushraSummary,
    NoReference,
    ScreenResult,
    apply_screen,
    mushra_aggregate,
    mushra_post_screen,
)
from .records import (
    CSV_FIELDS,
    MOS_SCALE,
    MUSHRA_SCALE,
    RatingRecord,
    read_csv,
    read_jsonl,
    read_records,
    write_csv,
    write_jsonl,
)
from .reports import (
    BOXPLOT_FIELDS,
    boxplot_csv,
    format_mos_row,
    render_mos_table,
    render_mushra_report,
)

__all__ = [
    "BOXPLOT_FIELDS",
    "CSV_FIELDS",
    "DEFAULT_REF_THRESHOLD",
    "DEFAULT_TRIAL_FRACTION",
    "EmptyScores",
    "ListenerScreen",
    "MOS_SCALE",
    "MUSHRA_SCALE",
    "MosSummary",
    "MushraSummary",
    "NATURAL_SPEECH_BAND",
    "NoReference",
    "RatingRecord",
    "REFERENCE_CONDITION",
    "ScreenResult",
    "Z_95",
    "apply_screen",
    "boxplot_csv",
    "format_mos_row",
    "mos_ci",
    "mos_mean",
    "mos_table",
    "mushra_aggregate",
    "mushra_post_screen",
    "read_csv",
    "read_jsonl",
    "read_records",
    "render_mos_table",
    "render_mushra_report",
    "summarize_condition",
    "write_csv",
    "write_jsonl",
]
