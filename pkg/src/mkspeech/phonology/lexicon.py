"""Stress exception lexicon.

File format: UTF-8 TSV, one entry per line::

    word<TAB>index[<TAB>alternate_index]

``index`` is the 0-based stressed-syllable position counted from the word
start.  Loanwords still being accommodated may carry a second, alternate
index; the first one wins, the alternate is kept as metadata.
"""

from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    index: int
    alternate: int | None = None


@dataclass(frozen=True)
class StressLexicon:
    entries: dict[str, LexiconEntry] = field(default_factory=dict)

    def get(self, word: str) -> int | None:
        entry = self.entries.get(word.lower())
        return entry.index if entry else None

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def from_pairs(cls, pairs: dict[str, int]) -> "StressLexicon":
        return cls({w.lower(): LexiconEntry(w.lower(), i) for w, i in pairs.items()})

    @classmethod
    def load(cls, path: str | Path) -> "StressLexicon":
        entries: dict[str, LexiconEntry] = {}
        for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise ValueError(f"{path}:{lineno}: expected word<TAB>index")
            word = parts[0].lower()
            try:
                index = int(parts[1])
                alternate = int(parts[2]) if len(parts) > 2 else None
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: bad stress index") from exc
            if index < 0 or (alternate is not None and alternate < 0):
                raise ValueError(f"{path}:{lineno}: stress index must be >= 0")
            entries[word] = LexiconEntry(word, index, alternate)
        return cls(entries)
