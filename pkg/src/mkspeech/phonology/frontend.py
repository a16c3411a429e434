"""Front-end composition: text in, stressed phone sequences per phrase out."""

from dataclasses import dataclass, field, replace

from .inventory import Inventory, default_inventory
from .lexicon import StressLexicon
from .rules import (
    apply_allophones,
    apply_final_devoicing,
    apply_voicing_assimilation,
    assign_stress,
    grapheme_to_phoneme,
)
from .sequence import NoNucleus, PhoneSequence, UnsupportedGrapheme
from .tokenize import Break, Word, normalize_text


@dataclass(frozen=True)
class WordAnalysis:
    token: Word
    phones: PhoneSequence | None
    error: str | None = None


@dataclass(frozen=True)
class Phrase:
    words: tuple[WordAnalysis, ...]


@dataclass(frozen=True)
class FrontEndResult:
    phrases: tuple[Phrase, ...]
    errors: tuple[str, ...] = field(default=())


def analyze_word(
    token: Word,
    lexicon: StressLexicon | None = None,
    exceptions: frozenset[str] = frozenset(),
    inventory: Inventory | None = None,
) -> WordAnalysis:
    """Run the word-level rules; errors are reported, not raised."""
    inv = inventory or default_inventory()
    if not token.supported:
        return WordAnalysis(token=token, phones=None, error="unsupported")
    try:
        seq = grapheme_to_phoneme(token.text, offset=token.start, inventory=inv)
    except UnsupportedGrapheme as exc:
        return WordAnalysis(token=token, phones=None, error=str(exc))
    seq = apply_allophones(seq, inv)
    seq = apply_voicing_assimilation(seq, exceptions, word=token.text, inventory=inv)
    try:
        seq = assign_stress(seq, lexicon, word=token.text, inventory=inv)
    except NoNucleus:
        return WordAnalysis(token=token, phones=seq, error="no nucleus")
    return WordAnalysis(token=token, phones=seq)


def front_end(
    text: str,
    lexicon: StressLexicon | None = None,
    exceptions: frozenset[str] = frozenset(),
    inventory: Inventory | None = None,
) -> FrontEndResult:
    """normalize -> g2p -> allophones -> assimilation -> stress -> devoicing.

    Assimilation stays word-internal; final devoicing fires only on the last
    spoken word of each phrase (minor breaks do not count, end of input
    does).  Per-token problems go into the error report and the rest of the
    phrase is still produced.
    """
    inv = inventory or default_inventory()
    tokens = normalize_text(text)

    phrases: list[Phrase] = []
    errors: list[str] = []
    current: list[WordAnalysis] = []

    def close_phrase() -> None:
        if not current:
            return
        for i in range(len(current) - 1, -1, -1):
            wa = current[i]
            if wa.phones is not None:
                final_seq = apply_final_devoicing(
                    replace(wa.phones, phrase_final=True), inv
                )
                current[i] = replace(wa, phones=final_seq)
                break
        phrases.append(Phrase(words=tuple(current)))
        current.clear()

    for token in tokens:
        if isinstance(token, Break):
            if token.kind == "phrase":
                close_phrase()
            continue
        analysis = analyze_word(token, lexicon, exceptions, inv)
        if analysis.error:
            errors.append(f"{token.text!r}@{token.start}: {analysis.error}")
        current.append(analysis)
    close_phrase()

    return FrontEndResult(phrases=tuple(phrases), errors=tuple(errors))
