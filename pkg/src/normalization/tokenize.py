from dataclasses import dataclass

import regex

from src.normalization.schema import (
    ARABIC_DIACRITICS,
    ARABIC_LETTERS,
    ARABIC_PUNCTUATION,
    DETACHABLE_PUNCTUATION,
    OPENING_PUNCTUATION,
)

WORD = "word"
NUMBER = "number"
PUNCTUATION = "punctuation"
FOREIGN = "foreign"

_CHUNK = regex.compile(r"\S+")
_ARABIC_PUNCT_SPLIT = regex.compile("([" + "".join(sorted(ARABIC_PUNCTUATION)) + "])")
_ARABIC_LETTER = regex.compile(r"[\p{Script=Arabic}&&\p{L}]", flags=regex.V1)
_ARABIC_DIGIT = regex.compile(r"[\p{Script=Arabic}&&\p{Nd}]", flags=regex.V1)
_ANY_LETTER = regex.compile(r"\p{L}")


@dataclass(frozen=True)
class ArabicToken:
    text: str
    kind: str
    preceded_by_space: bool = False


def token_kind(text):
    if len(text) == 1 and text in DETACHABLE_PUNCTUATION:
        return PUNCTUATION
    if any(c in ARABIC_LETTERS or c in ARABIC_DIACRITICS for c in text) or _ARABIC_LETTER.search(text):
        return WORD
    if _ARABIC_DIGIT.search(text) and not _ANY_LETTER.search(text):
        return NUMBER
    return FOREIGN


def _split_chunk(chunk):
    start, end = 0, len(chunk)
    leading = []
    while start < end and chunk[start] in DETACHABLE_PUNCTUATION:
        leading.append(chunk[start])
        start += 1
    trailing = []
    while end > start and chunk[end - 1] in DETACHABLE_PUNCTUATION:
        end -= 1
        trailing.append(chunk[end])
    # Arabic punctuation never belongs inside a word
    middle = [p for p in _ARABIC_PUNCT_SPLIT.split(chunk[start:end]) if p]
    return leading + middle + trailing[::-1]


def tokenize(text):
    """
    Splits normalized text into ArabicTokens.

    Whitespace separates chunks; punctuation is then detached from each chunk.
    Apostrophes and hyphens inside a word stay attached. preceded_by_space
    records the original spacing so detokenize() can restore it.
    """
    tokens = []
    for match in _CHUNK.finditer(text):
        spaced = match.start() > 0
        for i, piece in enumerate(_split_chunk(match.group())):
            tokens.append(ArabicToken(piece, token_kind(piece), spaced and i == 0))
    return tokens


def attaches_left(text):
    return token_kind(text) == PUNCTUATION and text not in OPENING_PUNCTUATION


def _space_flags(tokens, spacing):
    if spacing is None:
        return [token_kind(t) != PUNCTUATION for t in tokens]
    return [s.preceded_by_space if isinstance(s, ArabicToken) else bool(s) for s in spacing]


def detokenize(tokens, spacing=None):
    """
    Joins transliterated tokens back into a line.

    spacing may be the source ArabicTokens (or their preceded_by_space flags);
    without it, tokens are joined with single spaces. Closing punctuation is
    never preceded by a space either way; opening marks keep the source spacing.
    """
    tokens = list(tokens)
    flags = _space_flags(tokens, spacing)
    if len(flags) != len(tokens):
        raise ValueError(f"Got {len(tokens)} tokens but {len(flags)} spacing entries")

    out = []
    pending_space = False
    for token, spaced in zip(tokens, flags):
        if not token:
            pending_space = pending_space or spaced
            continue
        if attaches_left(token):
            spaced = pending_space = False
        if out and (spaced or pending_space):
            out.append(" ")
        out.append(token)
        pending_space = False
    return "".join(out).strip()
