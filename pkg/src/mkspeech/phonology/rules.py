"""The rule pipeline: letters to phones, allophony, orthoepy, stress.

Every function is pure and idempotent where the contract says so; sequences
are immutable, so results share no state with their inputs.
"""

from dataclasses import replace

from .inventory import SCHWA, APOSTROPHES, Inventory, default_inventory
from .lexicon import StressLexicon
from .sequence import NoNucleus, Phone, PhoneSequence, Syllable, UnsupportedGrapheme


def grapheme_to_phoneme(
    word: str, offset: int = 0, inventory: Inventory | None = None
) -> PhoneSequence:
    """Map a word's letters one-to-one onto phones.

    ``offset`` is the word's position in the source text, so grapheme spans
    index into the full text.  Apostrophes (orthographic schwa markers) are
    skipped and produce no phone.
    """
    inv = inventory or default_inventory()
    phones = []
    for i, ch in enumerate(word):
        if ch in APOSTROPHES:
            continue
        phoneme = inv.by_letter.get(ch.lower())
        if phoneme is None:
            raise UnsupportedGrapheme(f"letter {ch!r} is not in the Macedonian alphabet")
        phones.append(Phone(id=phoneme.id, span=(offset + i, offset + i + 1)))
    return PhoneSequence(phones=tuple(phones))


def apply_allophones(seq: PhoneSequence, inventory: Inventory | None = None) -> PhoneSequence:
    """Apply context-dependent allophone rules.

    The only wired-in rule is syllabic r: an /r/ with no vowel neighbour
    (between consonants, or at a word edge next to a consonant) becomes a
    syllable nucleus, realized as an inserted schwa plus syllabic r.  The
    inserted schwa carries the span of its r.  Other table entries have no
    registered context matcher yet and act as identity.
    """
    inv = inventory or default_inventory()
    out: list[Phone] = []
    phones = seq.phones
    for i, p in enumerate(phones):
        if p.id == "r" and not p.syllabic:
            prev_vowel = i > 0 and inv.is_vowel(phones[i - 1].id)
            next_vowel = i + 1 < len(phones) and inv.is_vowel(phones[i + 1].id)
            if not prev_vowel and not next_vowel:
                out.append(Phone(id=SCHWA, span=p.span))
                out.append(replace(p, syllabic=True))
                continue
        out.append(p)
    return replace(seq, phones=tuple(out))


def apply_voicing_assimilation(
    seq: PhoneSequence,
    exceptions: frozenset[str] | set[str] = frozenset(),
    word: str | None = None,
    inventory: Inventory | None = None,
) -> PhoneSequence:
    """Regressive voicing assimilation inside a word.

    In every adjacent obstruent pair with mismatched voicing the first
    obstruent is replaced by its voiced/voiceless pair.  A single
    right-to-left pass reaches the fixed point because each trigger is
    already final when its predecessor is rewritten.  Obstruents without a
    counterpart (/h/) are left alone.  Words listed in ``exceptions`` are
    returned untouched.
    """
    inv = inventory or default_inventory()
    if word is not None and word.lower() in exceptions:
        return seq
    phones = list(seq.phones)
    for i in range(len(phones) - 2, -1, -1):
        a, b = phones[i], phones[i + 1]
        if not (inv.is_obstruent(a.id) and inv.is_obstruent(b.id)):
            continue
        if inv.is_voiced_obstruent(a.id) == inv.is_voiced_obstruent(b.id):
            continue
        pair = inv.pair_of(a.id)
        if pair is not None:
            phones[i] = a.with_id(pair)
    return replace(seq, phones=tuple(phones))


def apply_final_devoicing(seq: PhoneSequence, inventory: Inventory | None = None) -> PhoneSequence:
    """Devoice the last phone of a phrase-final word, if it is a paired
    voiced obstruent.  Anything else passes through unchanged."""
    inv = inventory or default_inventory()
    if not seq.phrase_final or not seq.phones:
        return seq
    last = seq.phones[-1]
    if inv.is_voiced_obstruent(last.id):
        pair = inv.pair_of(last.id)
        if pair is not None:
            phones = seq.phones[:-1] + (last.with_id(pair),)
            return replace(seq, phones=phones)
    return seq


def _is_nucleus(p: Phone, inv: Inventory) -> bool:
    return p.syllabic or inv.is_vowel(p.id)


def syllabify(seq: PhoneSequence, inventory: Inventory | None = None) -> list[Syllable]:
    """Split a word into syllables, one per nucleus.

    Consonants between nuclei join the following syllable (no phonotactic
    onset maximization; the stress rule only needs nucleus positions).
    """
    inv = inventory or default_inventory()
    nuclei = [i for i, p in enumerate(seq.phones) if _is_nucleus(p, inv)]
    if not nuclei:
        raise NoNucleus("word has no vowel or syllabic consonant")
    syllables = []
    start = 0
    for j, nucleus in enumerate(nuclei):
        end = len(seq.phones) if j == len(nuclei) - 1 else nucleus + 1
        syllables.append(Syllable(start=start, end=end, nucleus=nucleus))
        start = end
    return syllables


def assign_stress(
    word_seq: PhoneSequence,
    lexicon: StressLexicon | None = None,
    word: str | None = None,
    inventory: Inventory | None = None,
) -> PhoneSequence:
    """Place exactly one stress flag on a nucleus.

    Lexicon entries win; otherwise stress falls on the antepenultimate
    syllable, i.e. index ``max(0, n - 3)``, which for 1- and 2-syllable
    words is the first syllable.
    """
    inv = inventory or default_inventory()
    syllables = syllabify(word_seq, inv)
    index = None
    if lexicon is not None and word is not None:
        index = lexicon.get(word)
    if index is None or index >= len(syllables):
        index = max(0, len(syllables) - 3)
    target = syllables[index].nucleus
    phones = tuple(
        replace(p, stressed=(i == target)) for i, p in enumerate(word_seq.phones)
    )
    return replace(word_seq, phones=phones)


def validate_lexicon(lexicon: StressLexicon, inventory: Inventory | None = None) -> None:
    """Check that every lexicon index is below its word's syllable count."""
    inv = inventory or default_inventory()
    bad = []
    for entry in lexicon.entries.values():
        try:
            seq = apply_allophones(grapheme_to_phoneme(entry.word, inventory=inv), inv)
            count = len(syllabify(seq, inv))
        except (UnsupportedGrapheme, NoNucleus) as exc:
            bad.append(f"{entry.word}: {exc}")
            continue
        if entry.index >= count:
            bad.append(f"{entry.word}: stress index {entry.index} >= {count} syllables")
    if bad:
        raise ValueError("invalid lexicon entries: " + "; ".join(bad))
