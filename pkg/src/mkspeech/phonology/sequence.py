"""Phone sequence types shared by the rule pipeline."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Phone:
    """One phone with its source-grapheme span and prosodic flags.

    ``span`` is a half-open [start, end) character range into the original
    text.  A schwa inserted by the syllabic-r rule carries the span of its r.
    """

    id: str
    span: tuple[int, int]
    stressed: bool = False
    syllabic: bool = False

    def with_id(self, new_id: str) -> "Phone":
        return replace(self, id=new_id)


@dataclass(frozen=True)
class PhoneSequence:
    """An ordered phone string for one word, plus its phrase position."""

    phones: tuple[Phone, ...]
    phrase_final: bool = False

    def __len__(self) -> int:
        return len(self.phones)

    def ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.phones)

    def check(self) -> None:
        """Raise ValueError if structural invariants are broken."""
        prev = (-1, -1)
        for p in self.phones:
            start, end = p.span
            if end < start or (start, end) < prev:
                raise ValueError(f"grapheme spans out of order at {p}")
            prev = (start, end)  # inserted segments share their host's span
        if sum(1 for p in self.phones if p.stressed) > 1:
            raise ValueError("more than one stress flag in a word")


@dataclass(frozen=True)
class Syllable:
    """A contiguous phone span [start, end) with exactly one nucleus."""

    start: int
    end: int
    nucleus: int


class UnsupportedGrapheme(ValueError):
    """A letter outside the 31-letter Macedonian alphabet."""


class NoNucleus(ValueError):
    """A word with no vowel and no syllabic consonant cannot be syllabified."""
