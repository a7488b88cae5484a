import unicodedata

from src.normalization.schema import TATWEEL

# Arabic Presentation Forms-A and -B
PRESENTATION_RANGES = (("ﭐ", "﷿"), ("ﹰ", "﻾"))


def _is_presentation_form(char):
    return any(lo <= char <= hi for lo, hi in PRESENTATION_RANGES)


def _decompose(char):
    expanded = unicodedata.normalize("NFKC", char)
    # isolated diacritic forms decompose to <space, mark>
    if len(expanded) > 1 and expanded[0] == " " and unicodedata.combining(expanded[1]):
        expanded = expanded[1:]
    return expanded


def normalize(text):
    """
    Normalizes Arabic text before transliteration.

    Presentation forms and ligatures are decomposed to their base letters and
    marks, and tatweel is removed. Every other codepoint is left as is, so
    alef maksura and ta marbuta keep their own mapping rows.
    """
    if not text:
        return ""
    decomposed = "".join(_decompose(c) if _is_presentation_form(c) else c for c in text)
    return decomposed.replace(TATWEEL, "")
