from src.normalization.buckwalter import to_buckwalter
from src.normalization.normalize import normalize
from src.transliteration.morphtx import default_morphtx
from src.transliteration.orthography import orthography_with_spacing

ORIGINAL = "original"
BUCKWALTER = "buckwalter"
BUCKWALTER_LC = "buckwalter-lc"
CHARTX = "chartx"
MORPHTX = "morphtx"

SCHEMES = (ORIGINAL, BUCKWALTER, BUCKWALTER_LC, CHARTX, MORPHTX)


def _check(scheme):
    if scheme not in SCHEMES:
        raise ValueError(f"Unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")


def transliterate_line(line, scheme, sentence=None, morphtx=None, diagnostics=None, unmapped=None):
    """
    Transliterates one sentence under the given scheme. sentence is the
    sidecar analysis for that line and is only used by morphtx; the chartx
    scheme uses morphtx.chartx so a custom rule table applies to both.
    """
    _check(scheme)
    if scheme == ORIGINAL:
        return normalize(line)
    if scheme in (BUCKWALTER, BUCKWALTER_LC):
        return to_buckwalter(normalize(line), lowercase=scheme == BUCKWALTER_LC)
    morphtx = morphtx or default_morphtx()
    if scheme == CHARTX:
        return morphtx.chartx.transliterate_line(line, unmapped)
    return morphtx.transliterate_sentence(line, sentence, diagnostics, unmapped)


def transliterate_word(text, scheme, analysis=None, morphtx=None, unmapped=None):
    """
    Word-level transliteration for annotated corpora: one token in, one token
    out. Under morphtx, orthography is applied inside the token only.
    """
    _check(scheme)
    if scheme == ORIGINAL:
        return normalize(text)
    if scheme in (BUCKWALTER, BUCKWALTER_LC):
        return to_buckwalter(normalize(text), lowercase=scheme == BUCKWALTER_LC)
    morphtx = morphtx or default_morphtx()
    if scheme == CHARTX or analysis is None:
        return morphtx.chartx.transliterate_word(normalize(text), unmapped)
    words = morphtx.transliterate_token(analysis, unmapped).split()
    words, _ = orthography_with_spacing(words, [i > 0 for i in range(len(words))], morphtx.config)
    return " ".join(words)
