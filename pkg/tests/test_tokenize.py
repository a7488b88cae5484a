import random
from collections import Counter

import pytest
import regex

from src.normalization.tokenize import (
    FOREIGN,
    NUMBER,
    PUNCTUATION,
    WORD,
    ArabicToken,
    attaches_left,
    detokenize,
    token_kind,
    tokenize,
)
from tests.conftest import WORKED_ARABIC


def test_worked_example_tokens():
    tokens = tokenize(WORKED_ARABIC)
    assert [t.text for t in tokens] == ["أوقفت", "السيارة", "في", "الطريق", "."]
    assert [t.kind for t in tokens] == [WORD, WORD, WORD, WORD, PUNCTUATION]
    assert [t.preceded_by_space for t in tokens] == [False, True, True, True, False]


def test_empty():
    assert tokenize("") == []
    assert detokenize([]) == ""


@pytest.mark.parametrize("text, kind", [
    ("كتاب", WORD),
    ("٢٠٢٣", NUMBER),
    ("؟", PUNCTUATION),
    (".", PUNCTUATION),
    ("hello", FOREIGN),
    ("2023", FOREIGN),
])
def test_token_kind(text, kind):
    assert token_kind(text) == kind


def test_arabic_punctuation_always_detaches():
    assert [t.text for t in tokenize("نعم،لا")] == ["نعم", "،", "لا"]


def test_ascii_punctuation_only_detaches_at_edges():
    assert [t.text for t in tokenize('("fit-triq")')] == ["(", '"', "fit-triq", '"', ")"]
    assert [t.text for t in tokenize("ta'x")] == ["ta'x"]
    assert [t.text for t in tokenize("fit-triq")] == ["fit-triq"]


def test_detokenize_restores_source_spacing():
    text = 'قال ("نعم") ثم ذهب'
    tokens = tokenize(text)
    assert detokenize([t.text for t in tokens], tokens) == text


def test_no_space_before_closing_punctuation():
    text = "قال: «نعم» ، ثم ذهب ."
    tokens = tokenize(text)
    assert detokenize([t.text for t in tokens], tokens) == "قال: «نعم»، ثم ذهب."
    assert detokenize(["fi", "altriq", "."], [False, True, True]) == "fi altriq."
    assert detokenize(["iva", "", "?"], [False, True, True]) == "iva?"


def test_detokenize_without_spacing():
    assert detokenize(["fi", "triq", ".", "iva", "?"]) == "fi triq. iva?"


def test_detokenize_skips_empty_tokens():
    assert detokenize(["a", "", "b"], [False, True, False]) == "a b"


def test_detokenize_length_mismatch():
    with pytest.raises(ValueError):
        detokenize(["a", "b"], [ArabicToken("a", FOREIGN)])


_ALPHABET = ["ك", "ت", "ب", "ي", "ّ", "a", "b", "١", "2", ".", ",", "?", "(", ")", '"', "'", "،", "؟", "-", " ", "  ", "\t"]


def _random_text(rng):
    return "".join(rng.choice(_ALPHABET) for _ in range(rng.randint(0, 24)))


def test_tokenize_keeps_every_codepoint():
    rng = random.Random(11)
    for _ in range(3000):
        text = _random_text(rng)
        pieces = [t.text for t in tokenize(text)]
        assert all(pieces)
        assert Counter("".join(pieces)) == Counter(c for c in text if not c.isspace())
        assert "".join(pieces) == regex.sub(r"\s+", "", text)


def test_detokenize_restores_text_up_to_whitespace():
    rng = random.Random(12)
    for _ in range(3000):
        text = _random_text(rng)
        tokens = tokenize(text)
        out = detokenize([t.text for t in tokens], tokens)
        assert regex.sub(r"\s+", "", out) == regex.sub(r"\s+", "", text)
        if not any(t.preceded_by_space and attaches_left(t.text) for t in tokens):
            assert out == " ".join(text.split())
