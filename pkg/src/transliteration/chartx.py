from dataclasses import dataclass
from functools import lru_cache

from src.normalization.normalize import normalize
from src.normalization.schema import ARABIC_DIACRITICS, ARABIC_LETTERS, SHADDA, is_arabic_block
from src.normalization.tokenize import FOREIGN, ArabicToken, detokenize, tokenize
from src.transliteration.rules import default_char_rules


@dataclass(frozen=True)
class Segment:
    source: str
    output: str
    rule: object = None

    @property
    def mapped(self):
        return self.rule is not None


def reorder_shadda(word):
    """
    Moves shadda directly after its letter within a run of marks, so that
    letter + fatha + shadda becomes the letter + shadda digram the gemination
    rules expect.
    """
    chars = list(word)
    i = 0
    while i < len(chars):
        if chars[i] in ARABIC_LETTERS:
            j = i + 1
            while j < len(chars) and chars[j] in ARABIC_DIACRITICS:
                j += 1
            marks = chars[i + 1:j]
            if SHADDA in marks and marks[0] != SHADDA:
                marks.remove(SHADDA)
                chars[i + 1:j] = [SHADDA] + marks
            i = j
        else:
            i += 1
    return "".join(chars)


class CharTx:
    """
    Context-sensitive character mapping from Arabic script to Maltese.

    Rule classes are applied in precedence order over the whole word. Within a
    class, a left-to-right scan takes the longest rule matching codepoints no
    earlier class has consumed; BOS/EOS anchors refer to the word edges.
    Codepoints left over after the last class pass through unchanged.
    """

    def __init__(self, table=None):
        self.table = table if table is not None else default_char_rules()

    def rewrite(self, chars):
        n = len(chars)
        consumed = [False] * n
        spans = {}
        for group in self.table.groups:
            pos = 0
            while pos < n:
                if consumed[pos]:
                    pos += 1
                    continue
                rule = group.longest_match(chars, pos, consumed)
                if rule is None:
                    pos += 1
                    continue
                end = pos + len(rule.source)
                spans[pos] = rule
                consumed[pos:end] = [True] * (end - pos)
                pos = end

        segments = []
        pos = 0
        while pos < n:
            rule = spans.get(pos)
            if rule is None:
                segments.append(Segment(chars[pos], chars[pos]))
                pos += 1
            else:
                segments.append(Segment(rule.source, rule.target, rule))
                pos += len(rule.source)
        return segments

    def trace(self, word):
        return self.rewrite(reorder_shadda(word))

    def transliterate_word(self, token, unmapped=None):
        if isinstance(token, ArabicToken):
            if token.kind == FOREIGN:
                return token.text
            token = token.text
        segments = self.trace(token)
        if unmapped is not None:
            unmapped.extend(s.source for s in segments if not s.mapped and is_arabic_block(s.source))
        return "".join(s.output for s in segments)

    def transliterate_line(self, line, unmapped=None):
        tokens = tokenize(normalize(line))
        return detokenize([self.transliterate_word(t, unmapped) for t in tokens], tokens)

    def transliterate_text(self, text, unmapped=None):
        return "\n".join(self.transliterate_line(line, unmapped) for line in text.split("\n"))


@lru_cache(maxsize=None)
def default_chartx():
    return CharTx()


def chartx_word(token, unmapped=None):
    """
    Transliterates a single normalized token with the default rule table.
    Foreign tokens and unmapped codepoints are preserved.
    """
    return default_chartx().transliterate_word(token, unmapped)


def chartx_text(text, unmapped=None):
    """
    normalize -> tokenize -> chartx_word per token -> detokenize.
    """
    return default_chartx().transliterate_text(text, unmapped)
