"""Mean opinion score aggregation with 95 % confidence intervals."""

import math
from dataclasses import dataclass
from typing import Sequence

from .records import MOS_SCALE, RatingRecord

#: Real human speech is expected to land in this MOS band; summaries outside
#: it for the natural condition get an advisory note, never an error.
NATURAL_SPEECH_BAND = (4.5, 4.8)

Z_95 = 1.96


class EmptyScores(ValueError):
    """No scores to aggregate."""


@dataclass(frozen=True)
class MosSummary:
    condition_id: str
    n: int
    mu: float
    sigma: float
    ci_half_width: float
    single_rating: bool = False  # CI degenerate, sigma undefined at N=1


def mos_mean(scores: Sequence[float]) -> float:
    """Arithmetic mean of the scores."""
    if len(scores) == 0:
        raise EmptyScores("no scores")
    return sum(scores) / len(scores)


def mos_ci(scores: Sequence[float]) -> tuple[float, float]:
    """(mean, 95 % CI half-width) with the sample standard deviation.

    A single rating has no spread estimate: the half-width is 0 and the
    summary carries a warning flag.
    """
    mu = mos_mean(scores)
    n = len(scores)
    if n == 1:
        return mu, 0.0
    sigma = math.sqrt(sum((s - mu) ** 2 for s in scores) / (n - 1))
    return mu, Z_95 * sigma / math.sqrt(n)


def summarize_condition(condition_id: str, scores: Sequence[float]) -> MosSummary:
    mu, half = mos_ci(scores)
    n = len(scores)
    sigma = 0.0 if n == 1 else half * math.sqrt(n) / Z_95
    return MosSummary(
        condition_id=condition_id,
        n=n,
        mu=mu,
        sigma=sigma,
        ci_half_width=half,
        single_rating=(n == 1),
    )


def mos_table(
    records: Sequence[RatingRecord], natural_condition: str | None = None
) -> list[MosSummary]:
    """One summary per condition, sorted by id, natural-speech row last.

    The grouping is permutation-invariant over the record list.  Mixing in
    non-MOS records is an error.
    """
    if not records:
        raise EmptyScores("no records")
    bad = [r for r in records if r.scale != MOS_SCALE]
    if bad:
        raise ValueError(f"{len(bad)} records are not on the MOS scale")
    by_condition: dict[str, list[float]] = {}
    for rec in records:
        by_condition.setdefault(rec.condition_id, []).append(rec.value)
    order = sorted(by_condition)
    if natural_condition is not None and natural_condition in by_condition:
        order = [c for c in order if c != natural_condition] + [natural_condition]
    return [summarize_condition(c, sorted(by_condition[c])) for c in order]
