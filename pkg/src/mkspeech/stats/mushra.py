"""MUSHRA aggregation with hidden-reference post-screening."""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .mos import Z_95, EmptyScores
from .records import MUSHRA_SCALE, RatingRecord

#: Condition id conventionally carried by the hidden reference copy.
REFERENCE_CONDITION = "reference"

#: ITU-R BS.1534-3 post-screening defaults: a listener goes out after
#: scoring the hidden reference below 90 in more than 15 % of their trials.
DEFAULT_REF_THRESHOLD = 90.0
DEFAULT_TRIAL_FRACTION = 0.15


class NoReference(ValueError):
    """No hidden-reference records found to screen against."""


@dataclass(frozen=True)
class ListenerScreen:
    listener_id: str
    reference_trials: int
    violations: int
    retained: bool

    @property
    def violation_fraction(self) -> float:
        return self.violations / self.reference_trials if self.reference_trials else 0.0


@dataclass(frozen=True)
class ScreenResult:
    retained: frozenset[str]
    report: tuple[ListenerScreen, ...]


@dataclass(frozen=True)
class MushraSummary:
    condition_id: str
    n: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float
    mean: float
    ci_half_width: float
    retained_listener_count: int


def mushra_post_screen(
    records: Sequence[RatingRecord],
    ref_threshold: float = DEFAULT_REF_THRESHOLD,
    trial_fraction: float = DEFAULT_TRIAL_FRACTION,
    ref_condition: str = REFERENCE_CONDITION,
) -> ScreenResult:
    """Drop listeners who rated the hidden reference too low too often."""
    ref_records = [r for r in records if r.condition_id == ref_condition]
    if not ref_records:
        raise NoReference(f"no records for hidden-reference condition {ref_condition!r}")
    trials: dict[str, int] = {}
    violations: dict[str, int] = {}
    for rec in ref_records:
        trials[rec.listener_id] = trials.get(rec.listener_id, 0) + 1
        if rec.value < ref_threshold:
            violations[rec.listener_id] = violations.get(rec.listener_id, 0) + 1
    report = []
    for listener in sorted(trials):
        t = trials[listener]
        v = violations.get(listener, 0)
        report.append(
            ListenerScreen(
                listener_id=listener,
                reference_trials=t,
                violations=v,
                retained=(v / t) <= trial_fraction,
            )
        )
    retained = frozenset(s.listener_id for s in report if s.retained)
    return ScreenResult(retained=retained, report=tuple(report))


def apply_screen(records: Sequence[RatingRecord], screen: ScreenResult) -> list[RatingRecord]:
    return [r for r in records if r.listener_id in screen.retained]


def mushra_aggregate(records: Sequence[RatingRecord]) -> list[MushraSummary]:
    """Quartiles (linear interpolation), mean and 95 % CI per condition.

    Post-screening is the caller's business; pass raw or screened records.
    """
    if not records:
        raise EmptyScores("no records")
    bad = [r for r in records if r.scale != MUSHRA_SCALE]
    if bad:
        raise ValueError(f"{len(bad)} records are not on the MUSHRA scale")
    by_condition: dict[str, list[RatingRecord]] = {}
    for rec in records:
        by_condition.setdefault(rec.condition_id, []).append(rec)
    out = []
    for condition in sorted(by_condition):
        recs = by_condition[condition]
        values = np.sort(np.array([r.value for r in recs], dtype=np.float64))
        n = len(values)
        mu = float(values.mean())
        if n > 1:
            sigma = float(values.std(ddof=1))
            half = Z_95 * sigma / math.sqrt(n)
        else:
            half = 0.0
        q1, med, q3 = (float(q) for q in np.percentile(values, [25, 50, 75]))
        out.append(
            MushraSummary(
                condition_id=condition,
                n=n,
                minimum=float(values[0]),
                q1=q1,
                median=med,
                q3=q3,
                maximum=float(values[-1]),
                mean=mu,
                ci_half_width=half,
                retained_listener_count=len({r.listener_id for r in recs}),
            )
        )
    return out
