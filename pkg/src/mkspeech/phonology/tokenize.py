"""Text normalization: split raw text into word tokens and break marks.

Tokenizer rule table:
  * letters (any script) and digits accumulate into word tokens;
  * an apostrophe directly attached to letters stays inside the word
    (orthographic schwa as in 'рж, 'рбет);
  * ``. ! ? …`` end a phrase; ``, ; :`` and dashes are minor breaks;
  * remaining punctuation and symbols are ignored;
  * a word is ``supported`` only if every letter is in the 31-letter
    Macedonian alphabet (apostrophes aside).

End of input closes an open phrase, so a trailing unterminated sentence is
still phrase-final.
"""

from dataclasses import dataclass

from .inventory import APOSTROPHES, default_inventory

PHRASE_PUNCT = ".!?…"
MINOR_PUNCT = ",;:—–-"


@dataclass(frozen=True)
class Word:
    text: str
    start: int
    supported: bool = True

    @property
    def end(self) -> int:
        return self.start + len(self.text)


@dataclass(frozen=True)
class Break:
    kind: str  # "phrase" or "minor"
    start: int


Token = Word | Break


def _is_word_char(ch: str) -> bool:
    return ch.isalpha() or ch.isdigit()


def normalize_text(raw_text: str) -> list[Token]:
    """Tokenize ``raw_text`` into words and phrase/minor break marks."""
    letters = default_inventory().letters
    tokens: list[Token] = []
    i = 0
    n = len(raw_text)
    while i < n:
        ch = raw_text[i]
        if _is_word_char(ch) or (ch in APOSTROPHES and i + 1 < n and _is_word_char(raw_text[i + 1])):
            start = i
            while i < n and (
                _is_word_char(raw_text[i])
                or (raw_text[i] in APOSTROPHES and i + 1 < n and _is_word_char(raw_text[i + 1]))
            ):
                i += 1
            text = raw_text[start:i]
            supported = all(ch in APOSTROPHES or ch.lower() in letters for ch in text)
            tokens.append(Word(text=text, start=start, supported=supported))
        elif ch in PHRASE_PUNCT:
            if tokens and not isinstance(tokens[-1], Break):
                tokens.append(Break(kind="phrase", start=i))
            elif tokens and isinstance(tokens[-1], Break) and tokens[-1].kind == "minor":
                tokens[-1] = Break(kind="phrase", start=i)
            i += 1
        elif ch in MINOR_PUNCT:
            if tokens and isinstance(tokens[-1], Word):
                tokens.append(Break(kind="minor", start=i))
            i += 1
        else:
            i += 1
    return tokens
