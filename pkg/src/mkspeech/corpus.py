"""Phonetically rich utterance selection by greedy diphone coverage.

The unit of richness is the diphone: an adjacent within-word phone pair.
Selection greedily maximizes newly covered diphone types, breaking ties by
a token-balance score (rarer diphones weigh more), then shorter text, then
lexicographic id, so a fixed pool always yields the same selection.
"""

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .phonology import StressLexicon, front_end

Diphone = tuple[str, str]


class EmptyPool(ValueError):
    """No candidate satisfies the length filter."""


@dataclass(frozen=True)
class UtteranceCandidate:
    id: str
    text: str
    words: tuple[tuple[str, ...], ...]  # phone ids per word
    diphones: Counter = field(default_factory=Counter)

    @property
    def word_count(self) -> int:
        return len(self.words)


@dataclass
class CoverageState:
    covered: set[Diphone] = field(default_factory=set)
    counts: Counter = field(default_factory=Counter)
    selected_ids: list[str] = field(default_factory=list)

    def add(self, candidate: UtteranceCandidate) -> None:
        self.counts.update(candidate.diphones)
        self.covered |= set(candidate.diphones)
        self.selected_ids.append(candidate.id)


@dataclass(frozen=True)
class CoverageReport:
    fraction: float
    covered_types: int
    universe_size: int
    missing: tuple[Diphone, ...]
    histogram: dict[int, int]  # occurrence count -> number of diphone types


def extract_diphones(words: tuple[tuple[str, ...], ...]) -> Counter:
    """Multiset of adjacent phone pairs, never crossing a word boundary."""
    out: Counter = Counter()
    for phones in words:
        for a, b in zip(phones, phones[1:]):
            out[(a, b)] += 1
    return out


def candidate_from_text(
    utt_id: str, text: str, lexicon: StressLexicon | None = None
) -> UtteranceCandidate:
    """Phonemize one utterance and collect its diphones."""
    result = front_end(text, lexicon)
    words = tuple(
        wa.phones.ids()
        for phrase in result.phrases
        for wa in phrase.words
        if wa.phones is not None
    )
    return UtteranceCandidate(id=utt_id, text=text, words=words, diphones=extract_diphones(words))


def load_candidates(path: str | Path, lexicon: StressLexicon | None = None) -> list[UtteranceCandidate]:
    """Read candidates from UTF-8 text: ``id<TAB>text`` or one utterance per
    line (line number becomes the id)."""
    candidates = []
    for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if "\t" in line:
            utt_id, text = line.split("\t", 1)
        else:
            utt_id, text = f"{lineno:06d}", line
        candidates.append(candidate_from_text(utt_id, text, lexicon))
    return candidates


def _balance_score(candidate: UtteranceCandidate, counts: Counter) -> float:
    # Rewards tokens of diphones that are still rare in the selection.
    return sum(n / (1.0 + counts[d]) for d, n in candidate.diphones.items())


def greedy_select(
    candidates: list[UtteranceCandidate],
    target_count: int,
    min_len: int = 3,
    max_len: int = 20,
) -> tuple[list[UtteranceCandidate], CoverageState]:
    """Pick up to ``target_count`` utterances by greedy diphone coverage.

    Candidates outside the [min_len, max_len] word-count range are skipped.
    Raises EmptyPool when the length filter leaves nothing to pick from.
    """
    if min_len > max_len:
        raise ValueError("min_len must be <= max_len")
    pool = [c for c in candidates if min_len <= c.word_count <= max_len]
    if not pool:
        raise EmptyPool("no candidate satisfies the length filter")

    state = CoverageState()
    selection: list[UtteranceCandidate] = []
    remaining = {c.id: c for c in pool}

    while len(selection) < target_count and remaining:
        best = min(
            remaining.values(),
            key=lambda c: (
                -len(set(c.diphones) - state.covered),
                -_balance_score(c, state.counts),
                len(c.text),
                c.id,
            ),
        )
        del remaining[best.id]
        state.add(best)
        selection.append(best)
    return selection, state


def coverage_report(state: CoverageState, universe: set[Diphone]) -> CoverageReport:
    covered = state.covered & universe
    fraction = len(covered) / len(universe) if universe else 0.0
    histogram: dict[int, int] = {}
    for d in universe:
        n = state.counts.get(d, 0)
        histogram[n] = histogram.get(n, 0) + 1
    return CoverageReport(
        fraction=fraction,
        covered_types=len(covered),
        universe_size=len(universe),
        missing=tuple(sorted(universe - state.covered)),
        histogram=dict(sorted(histogram.items())),
    )


def render_coverage_report(report: CoverageReport) -> str:
    """Line-oriented ``key: value`` rendering of a coverage report."""
    lines = [
        f"coverage: {report.fraction:.4f}",
        f"covered_types: {report.covered_types}",
        f"universe_size: {report.universe_size}",
        f"missing_count: {len(report.missing)}",
    ]
    for count, types in report.histogram.items():
        lines.append(f"histogram[{count}]: {types}")
    if report.missing:
        lines.append("missing: " + " ".join(f"{a}+{b}" for a, b in report.missing))
    return "\n".join(lines) + "\n"


def write_selection(path: str | Path, selection: list[UtteranceCandidate]) -> None:
    """TSV export: rank<TAB>id<TAB>text, rank starting at 1."""
    with open(path, "w", encoding="utf-8") as fh:
        for rank, cand in enumerate(selection, 1):
            fh.write(f"{rank}\t{cand.id}\t{cand.text}\n")
