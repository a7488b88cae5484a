import regex

from src.config import OrthographyConfig

SUN_LETTERS = "ċdnrstxżz"
VOWELS = "aeiou"

# il-, or fil-/bil- once contracted; never an "il-" inside a longer word
_ARTICLE_BEFORE_SUN = regex.compile(rf"^((?:[fb])?i)l-([{SUN_LETTERS}])", flags=regex.IGNORECASE)
_BARE_ARTICLE_BEFORE_SUN = regex.compile(rf"^l-([{SUN_LETTERS}])", flags=regex.IGNORECASE)
_ARTICLE = regex.compile(rf"^i(?:l|[{SUN_LETTERS}])-", flags=regex.IGNORECASE)


def assimilate(word):
    """
    Sun-letter assimilation: il-żejt -> iż-żejt, and l-s... -> s-s... for a
    word-initial article that already lost its vowel.
    """
    word = _ARTICLE_BEFORE_SUN.sub(lambda m: f"{m.group(1)}{m.group(2).lower()}-{m.group(2)}", word)
    return _BARE_ARTICLE_BEFORE_SUN.sub(lambda m: f"{m.group(1).lower()}-{m.group(1)}", word)


def starts_with_article(word):
    return bool(_ARTICLE.match(word))


def _contracting(config):
    prepositions = set()
    if config.contract_fi:
        prepositions.add("fi")
    if config.contract_bi:
        prepositions.add("bi")
    return prepositions


def orthography_with_spacing(words, spacing, config=None, fixed=None):
    """
    Applies the orthographic conventions to words and their preceded-by-space
    flags. Returns the new words and flags; only contraction changes the count.

    Words flagged in `fixed` (foreign text, tokens without an analysis) are
    passed through: never assimilated, contracted into, or elided.
    """
    config = config or OrthographyConfig()
    spacing = list(spacing)
    fixed = list(fixed) if fixed is not None else [False] * len(words)
    words = [w if keep else assimilate(w) for w, keep in zip(words, fixed)]

    prepositions = _contracting(config)
    merged_words, merged_spacing, merged_fixed = [], [], []
    i = 0
    while i < len(words):
        word = words[i]
        if (
            not fixed[i]
            and word.lower() in prepositions
            and i + 1 < len(words)
            and not fixed[i + 1]
            and starts_with_article(words[i + 1])
        ):
            # fi + it-triq -> fit-triq
            merged_words.append(word + words[i + 1][1:])
            merged_spacing.append(spacing[i])
            merged_fixed.append(False)
            i += 2
            continue
        merged_words.append(word)
        merged_spacing.append(spacing[i])
        merged_fixed.append(fixed[i])
        i += 1

    if config.elide_article:
        for i in range(1, len(merged_words)):
            previous = merged_words[i - 1]
            if (
                merged_spacing[i]
                and not merged_fixed[i]
                and previous
                and previous[-1].lower() in VOWELS
                and starts_with_article(merged_words[i])
            ):
                merged_words[i] = merged_words[i][1:]
    return merged_words, merged_spacing


def apply_maltese_orthography(tokens, config=None, fixed=None):
    """
    Sun-letter assimilation, fi/bi contraction and post-vocalic article elision
    over MorphTx outputs in sentence order.

    ["fi", "it-teriq"] -> ["fit-teriq"]; ["il-żejt"] -> ["iż-żejt"]
    """
    tokens = list(tokens)
    words, _ = orthography_with_spacing(tokens, [True] * len(tokens), config, fixed)
    return words
