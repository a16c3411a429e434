"""Rule-based Macedonian text-to-phoneme front-end."""

from .frontend import FrontEndResult, Phrase, WordAnalysis, analyze_word, front_end
from .inventory import (
    SCHWA,
    Allophone,
    Inventory,
    Phoneme,
    default_inventory,
)
from .lexicon import LexiconEntry, StressLexicon
from .rules import (
    apply_allophones,
    apply_final_devoicing,
    apply_voicing_assimilation,
    assign_stress,
    grapheme_to_phoneme,
    syllabify,
    validate_lexicon,
)
from .sequence import NoNucleus, Phone, PhoneSequence, Syllable, UnsupportedGrapheme
from .tokenize import Break, Token, Word, normalize_text

__all__ = [
    "SCHWA",
    "Allophone",
    "Break",
    "FrontEndResult",
    "Inventory",
    "LexiconEntry",
    "NoNucleus",
    "Phone",
    "PhoneSequence",
    "Phoneme",
    "Phrase",
    "StressLexicon",
    "Syllable",
    "Token",
    "UnsupportedGrapheme",
    "Word",
    "WordAnalysis",
    "analyze_word",
    "apply_allophones",
    "apply_final_devoicing",
    "apply_voicing_assimilation",
    "assign_stress",
    "default_inventory",
    "front_end",
    "grapheme_to_phoneme",
    "normalize_text",
    "syllabify",
    "validate_lexicon",
]
