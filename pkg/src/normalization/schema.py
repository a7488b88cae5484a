# Arabic Character Schema

from dataclasses import dataclass

LETTER = "letter"
DIACRITIC = "diacritic"
DIGIT = "digit"
PUNCTUATION = "punctuation"
OTHER = "other"


@dataclass(frozen=True)
class ArabicChar:
    codepoint: str
    name: str
    char_class: str
    buckwalter: str | None = None


# (codepoint, name, class, buckwalter)
_INVENTORY = [
    ("ء", "hamza", LETTER, "'"),
    ("آ", "alef with madda", LETTER, "|"),
    ("أ", "alef with hamza above", LETTER, ">"),
    ("ؤ", "waw with hamza above", LETTER, "&"),
    ("إ", "alef with hamza below", LETTER, "<"),
    ("ئ", "yeh with hamza above", LETTER, "}"),
    ("ا", "alef", LETTER, "A"),
    ("ب", "beh", LETTER, "b"),
    ("ة", "teh marbuta", LETTER, "p"),
    ("ت", "teh", LETTER, "t"),
    ("ث", "theh", LETTER, "v"),
    ("ج", "jeem", LETTER, "j"),
    ("ح", "hah", LETTER, "H"),
    ("خ", "khah", LETTER, "x"),
    ("د", "dal", LETTER, "d"),
    ("ذ", "thal", LETTER, "*"),
    ("ر", "reh", LETTER, "r"),
    ("ز", "zain", LETTER, "z"),
    ("س", "seen", LETTER, "s"),
    ("ش", "sheen", LETTER, "$"),
    ("ص", "sad", LETTER, "S"),
    ("ض", "dad", LETTER, "D"),
    ("ط", "tah", LETTER, "T"),
    ("ظ", "zah", LETTER, "Z"),
    ("ع", "ain", LETTER, "E"),
    ("غ", "ghain", LETTER, "g"),
    ("ـ", "tatweel", OTHER, "_"),
    ("ف", "feh", LETTER, "f"),
    ("ق", "qaf", LETTER, "q"),
    ("ك", "kaf", LETTER, "k"),
    ("ل", "lam", LETTER, "l"),
    ("م", "meem", LETTER, "m"),
    ("ن", "noon", LETTER, "n"),
    ("ه", "heh", LETTER, "h"),
    ("و", "waw", LETTER, "w"),
    ("ى", "alef maksura", LETTER, "Y"),
    ("ي", "yeh", LETTER, "y"),
    ("ً", "fathatan", DIACRITIC, "F"),
    ("ٌ", "dammatan", DIACRITIC, "N"),
    ("ٍ", "kasratan", DIACRITIC, "K"),
    ("َ", "fatha", DIACRITIC, "a"),
    ("ُ", "damma", DIACRITIC, "u"),
    ("ِ", "kasra", DIACRITIC, "i"),
    ("ّ", "shadda", DIACRITIC, "~"),
    ("ْ", "sukun", DIACRITIC, "o"),
    ("ٰ", "superscript alef", DIACRITIC, "`"),
    ("ٱ", "alef wasla", LETTER, "{"),
    ("،", "arabic comma", PUNCTUATION, None),
    ("؛", "arabic semicolon", PUNCTUATION, None),
    ("؟", "arabic question mark", PUNCTUATION, None),
    ("٪", "arabic percent sign", PUNCTUATION, None),
] + [(chr(0x0660 + d), f"arabic-indic digit {d}", DIGIT, None) for d in range(10)]

ARABIC_CHARS = {cp: ArabicChar(cp, name, cls, bw) for cp, name, cls, bw in _INVENTORY}

ARABIC_TO_BUCKWALTER = {cp: c.buckwalter for cp, c in ARABIC_CHARS.items() if c.buckwalter}
BUCKWALTER_TO_ARABIC = {bw: cp for cp, bw in ARABIC_TO_BUCKWALTER.items()}

ARABIC_LETTERS = frozenset(cp for cp, c in ARABIC_CHARS.items() if c.char_class == LETTER)
ARABIC_DIACRITICS = frozenset(cp for cp, c in ARABIC_CHARS.items() if c.char_class == DIACRITIC)
ARABIC_DIGITS = frozenset(cp for cp, c in ARABIC_CHARS.items() if c.char_class == DIGIT)
ARABIC_PUNCTUATION = frozenset(cp for cp, c in ARABIC_CHARS.items() if c.char_class == PUNCTUATION)

SHADDA = "ّ"
TATWEEL = "ـ"

# Punctuation the tokenizer detaches. ASCII marks only detach at the edges of a chunk.
ASCII_PUNCTUATION = frozenset(".,!?;:()\"'%")
DETACHABLE_PUNCTUATION = ASCII_PUNCTUATION | ARABIC_PUNCTUATION
# Opening marks keep the source spacing in front of them; every other mark attaches to the left.
OPENING_PUNCTUATION = frozenset("(\"'")


def is_arabic_block(char):
    return "؀" <= char <= "ۿ" or "ݐ" <= char <= "ݿ"


def char_class(char):
    entry = ARABIC_CHARS.get(char)
    return entry.char_class if entry else OTHER


def strip_diacritics(text):
    return "".join(c for c in text if c not in ARABIC_DIACRITICS)
