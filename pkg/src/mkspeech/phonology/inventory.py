"""Phoneme inventory, voicing pair table and allophone table.

The tables live in ``data/*.tsv`` and are loaded once per process; the
resulting objects are immutable and safe to share between threads.
"""

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

VOWEL = "vowel"
SONORANT = "sonorant"
VOICED_OBSTRUENT = "voiced"
VOICELESS_OBSTRUENT = "voiceless"

_CLASSES = {VOWEL, SONORANT, VOICED_OBSTRUENT, VOICELESS_OBSTRUENT}

#: Schwa segment inserted by the syllabic-r rule.  It is an allophonic
#: segment, not one of the 31 phonemes, and never acts as a syllable nucleus
#: on its own (the nucleus is the syllabic r that follows it).
SCHWA = "@"

APOSTROPHES = ("'", "’", "ʼ")


@dataclass(frozen=True)
class Phoneme:
    """One segment: its ASCII id, source letter, voicing class and pair."""

    id: str
    letter: str
    voicing: str
    pair: str | None = None

    @property
    def is_vowel(self) -> bool:
        return self.voicing == VOWEL

    @property
    def is_obstruent(self) -> bool:
        return self.voicing in (VOICED_OBSTRUENT, VOICELESS_OBSTRUENT)

    @property
    def is_voiced_obstruent(self) -> bool:
        return self.voicing == VOICED_OBSTRUENT


@dataclass(frozen=True)
class Allophone:
    """A context variant of a base phoneme, as listed in allophones.tsv."""

    base: str
    variant: str
    context_rule: str


def _read_table(name: str) -> list[list[str]]:
    text = resources.files("mkspeech.phonology").joinpath(f"data/{name}").read_text("utf-8")
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split("\t"))
    return rows


class Inventory:
    """The 31-phoneme inventory plus pair and allophone tables."""

    def __init__(self, phonemes: list[Phoneme], allophones: list[Allophone]):
        self.by_id = {p.id: p for p in phonemes}
        self.by_letter = {p.letter: p for p in phonemes}
        self.allophones = tuple(allophones)
        self._check()

    def _check(self) -> None:
        if len(self.by_id) != 31:
            raise ValueError(f"inventory must hold 31 phonemes, got {len(self.by_id)}")
        for p in self.by_id.values():
            if p.voicing not in _CLASSES:
                raise ValueError(f"unknown voicing class {p.voicing!r} for {p.id}")
            if p.pair is not None:
                other = self.by_id.get(p.pair)
                if other is None or other.pair != p.id or other.id == p.id:
                    raise ValueError(f"voicing pair of {p.id} is not symmetric")
        variants = {a.variant for a in self.allophones}
        bases = {a.base for a in self.allophones}
        if len(variants) != 6 or len(bases) != 4:
            raise ValueError("allophone table must define 6 variants over 4 base phonemes")
        for a in self.allophones:
            if a.base not in self.by_id:
                raise ValueError(f"allophone base {a.base!r} is not in the inventory")

    def segment_class(self, phone_id: str) -> str:
        """Voicing class of a phone id, including allophonic segments."""
        if phone_id == SCHWA:
            return SONORANT
        return self.by_id[phone_id].voicing

    def is_vowel(self, phone_id: str) -> bool:
        return self.segment_class(phone_id) == VOWEL

    def is_obstruent(self, phone_id: str) -> bool:
        return self.segment_class(phone_id) in (VOICED_OBSTRUENT, VOICELESS_OBSTRUENT)

    def is_voiced_obstruent(self, phone_id: str) -> bool:
        return self.segment_class(phone_id) == VOICED_OBSTRUENT

    def pair_of(self, phone_id: str) -> str | None:
        p = self.by_id.get(phone_id)
        return p.pair if p else None

    @property
    def letters(self) -> set[str]:
        return set(self.by_letter)


@lru_cache(maxsize=1)
def default_inventory() -> Inventory:
    pair_rows = _read_table("pairs.tsv")
    pair_map: dict[str, str] = {}
    for voiced, voiceless in pair_rows:
        pair_map[voiced] = voiceless
        pair_map[voiceless] = voiced

    phonemes = []
    for letter, phone, klass in _read_table("phonemes.tsv"):
        phonemes.append(Phoneme(id=phone, letter=letter, voicing=klass, pair=pair_map.get(phone)))

    allophones = [Allophone(base, variant, rule) for base, variant, rule in _read_table("allophones.tsv")]
    return Inventory(phonemes, allophones)
