import logging
from functools import lru_cache

from src.config import OrthographyConfig
from src.normalization.normalize import normalize
from src.normalization.schema import SHADDA
from src.normalization.tokenize import FOREIGN, detokenize, tokenize
from src.transliteration.analyses import AlignmentError, align
from src.transliteration.chartx import default_chartx, reorder_shadda
from src.transliteration.orthography import orthography_with_spacing
from src.transliteration.rules import default_morpheme_rules

logger = logging.getLogger(__name__)

ARTICLE_TAG = "DET"
PROPER_NOUN_TAG = "NOUN_PROP"


def capitalize_first_letter(text):
    for i, char in enumerate(text):
        if char.isalpha():
            return text[:i] + char.upper() + text[i + 1:]
    return text


def _drop_article_gemination(surface):
    # Al + s~ayyAr: the article's assimilation is written by orthography instead
    surface = reorder_shadda(surface)
    if len(surface) > 1 and surface[1] == SHADDA:
        return surface[0] + surface[2:]
    return surface


class MorphTx:
    """
    Morphology-aware transliteration. Morphemes covered by a morpheme rule
    emit that rule's target; every other morpheme goes through CharTx with its
    diacritics. Maltese orthographic conventions are applied per sentence.
    """

    def __init__(self, chartx=None, rules=None, config=None):
        self.chartx = chartx or default_chartx()
        self.rules = rules or default_morpheme_rules()
        self.config = config or OrthographyConfig()

    def _capitalized_index(self, analysis, matched):
        if not analysis.is_proper_noun:
            return None
        for i, morpheme in enumerate(analysis.morphemes):
            if morpheme.tag == PROPER_NOUN_TAG:
                return i
        for i, rule in enumerate(matched):
            if rule is None:
                return i
        return None

    def transliterate_token(self, analysis, unmapped=None):
        if analysis.analysis_missing:
            return self.chartx.transliterate_word(analysis.text, unmapped)
        if not analysis.morphemes:
            return self.chartx.transliterate_word(analysis.diacritized, unmapped)

        morphemes = analysis.morphemes
        matched = [self.rules.lookup(m.tag, m.surface, analysis.construct_state) for m in morphemes]
        capitalized = self._capitalized_index(analysis, matched)

        parts = []
        for i, (morpheme, rule) in enumerate(zip(morphemes, matched)):
            if rule is not None:
                text = rule.output
            else:
                surface = morpheme.surface
                if i > 0 and morphemes[i - 1].tag == ARTICLE_TAG and matched[i - 1] is not None:
                    surface = _drop_article_gemination(surface)
                text = self.chartx.transliterate_word(surface, unmapped)
            if i == capitalized:
                text = capitalize_first_letter(text)
            parts.append(text)
            if rule is not None and rule.detached:
                parts.append(" ")
        return " ".join("".join(parts).split())

    def transliterate_sentence(self, line, sentence=None, diagnostics=None, unmapped=None):
        if sentence is None:
            return self.chartx.transliterate_line(line, unmapped)
        tokens = tokenize(normalize(line))
        try:
            aligned = align(sentence, tokens)
        except AlignmentError as e:
            logger.debug("Falling back to CharTx: %s", e)
            if diagnostics is not None:
                diagnostics.error(e, sentence_id=sentence.sentence_id)
            return self.chartx.transliterate_line(line, unmapped)

        words, spacing, fixed = [], [], []
        pending_space = False
        for token, analysis in zip(tokens, aligned):
            pieces = self.transliterate_token(analysis, unmapped).split()
            if not pieces:
                pending_space = pending_space or token.preceded_by_space
                continue
            for j, piece in enumerate(pieces):
                words.append(piece)
                spacing.append(token.preceded_by_space or pending_space if j == 0 else True)
                fixed.append(token.kind == FOREIGN or analysis.analysis_missing)
            pending_space = False
        words, spacing = orthography_with_spacing(words, spacing, self.config, fixed)
        return detokenize(words, spacing)

    def transliterate_text(self, text, analyses=None, diagnostics=None, unmapped=None):
        lines = text.split("\n")
        out = []
        for i, line in enumerate(lines):
            sentence = _sentence_at(analyses, i)
            out.append(self.transliterate_sentence(line, sentence, diagnostics, unmapped))
        return "\n".join(out)


def _sentence_at(analyses, index):
    if analyses is None:
        return None
    if hasattr(analyses, "get"):
        return analyses.get(index)
    return analyses[index] if index < len(analyses) else None


@lru_cache(maxsize=None)
def default_morphtx():
    return MorphTx()


def morphtx_token(analysis, unmapped=None):
    return default_morphtx().transliterate_token(analysis, unmapped)


def morphtx_text(text, analyses=None, diagnostics=None, unmapped=None):
    """
    normalize -> tokenize -> morphtx_token per token -> orthography -> detokenize,
    one sentence per line. Lines without a usable analysis record are
    transliterated with CharTx.
    """
    return default_morphtx().transliterate_text(text, analyses, diagnostics, unmapped)
