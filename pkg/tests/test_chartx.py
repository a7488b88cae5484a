import hashlib
import itertools
import random
from concurrent.futures import ThreadPoolExecutor

import pytest
import regex

from src.config import DEFAULT_CHAR_RULES
from src.normalization.buckwalter import from_buckwalter
from src.normalization.schema import ARABIC_DIACRITICS, ARABIC_LETTERS, is_arabic_block
from src.normalization.tokenize import FOREIGN, ArabicToken
from src.transliteration.chartx import CharTx, chartx_text, chartx_word, default_chartx, reorder_shadda
from src.transliteration.rules import (
    ANCHORS,
    BOS,
    EOS,
    FORBIDDEN_TARGET,
    RuleTableError,
    default_char_rules,
    load_char_rules,
)
from tests.conftest import WORKED_ARABIC, WORKED_CHARTX

MALTESE_OUTPUT = regex.compile(r"[abdefgġhħijklmnqrstuwxż']*")

# lam, a sun letter, shadda, fatha, kasra, sukun, both glides, alef, hamza-on-alef, ain, teh marbuta
SHORT_WORD_ALPHABET = "لزَّْيِوأاعة"


def oracle(word, table):
    """
    Naive reference matcher: among every rule that fits on unconsumed
    codepoints, commit the one with the best (class, start, -length) and
    repeat until nothing fits.
    """
    by_key = {rule.key: rule for rule in table}
    n = len(word)
    consumed = [False] * n
    spans = {}
    while True:
        best = None
        for start in range(n):
            for length in (1, 2, 3):
                end = start + length
                if end > n or any(consumed[start:end]):
                    continue
                for anchor in ANCHORS:
                    rule = by_key.get((word[start:end], anchor))
                    if rule is None:
                        continue
                    if anchor == BOS and start != 0:
                        continue
                    if anchor == EOS and end != n:
                        continue
                    rank = (rule.precedence, start, -length)
                    if best is None or rank < best[0]:
                        best = (rank, start, rule)
        if best is None:
            break
        _, start, rule = best
        spans[start] = rule
        consumed[start:start + len(rule.source)] = [True] * len(rule.source)

    out = []
    pos = 0
    while pos < n:
        if pos in spans:
            out.append(spans[pos].target)
            pos += len(spans[pos].source)
        else:
            out.append(word[pos])
            pos += 1
    return "".join(out)


def test_worked_example_sentence():
    assert chartx_text(WORKED_ARABIC) == WORKED_CHARTX


def test_space_before_punctuation_is_dropped():
    assert chartx_text("في الطريق .") == "fi altriq."
    assert chartx_text("في الطريق ؟") == "fi altriq?"


@pytest.mark.parametrize("word, expected", [
    ("أوقفت", "uqft"),
    ("السيارة", "alsjara"),
    ("في", "fi"),
    ("الطريق", "altriq"),
])
def test_worked_example_words(word, expected):
    assert chartx_word(word) == expected


def test_lam_sun_gemination():
    assert chartx_word("الزّيت") == "ażżit"


def test_no_gemination_without_shadda():
    assert chartx_word("الزيت") == "alżit"


def test_symbols():
    assert chartx_text("٢٠٢٣؟") == "2023?"


def test_empty():
    assert chartx_text("") == ""
    assert chartx_word("") == ""


def test_foreign_token_passes_through():
    assert chartx_word(ArabicToken("abc", FOREIGN)) == "abc"
    assert chartx_text("abc def.") == "abc def."


def test_gemination_outranks_an_earlier_glide():
    assert chartx_word(from_buckwalter("say~Ar")) == "sejjar"


def test_word_boundary_rules():
    assert chartx_word(from_buckwalter("rbyE")) == "rbi'"
    assert chartx_word(from_buckwalter(">Hmd")) == "ħmd"
    assert chartx_word(from_buckwalter("s>l")) == "sal"


def test_final_yeh_gemination():
    assert chartx_word(from_buckwalter("Ely~")) == "għli"


def test_unmapped_codepoints_are_kept_and_reported():
    unmapped = []
    assert chartx_word("بپ", unmapped) == "bپ"
    assert unmapped == ["پ"]


def test_shadda_moves_next_to_its_letter():
    assert reorder_shadda(from_buckwalter("sa~")) == from_buckwalter("s~a")
    assert reorder_shadda(from_buckwalter("s~a")) == from_buckwalter("s~a")
    assert chartx_word(from_buckwalter("sa~")) == chartx_word(from_buckwalter("s~a")) == "sse"


def test_multiline_text_keeps_lines():
    assert chartx_text("في\n\nفي") == "fi\n\nfi"


def test_trace_reports_rule_classes():
    classes = [s.rule.rule_class for s in default_chartx().trace(from_buckwalter("say~Ar"))]
    assert classes == ["letters", "diacritics", "gemination", "letters", "letters"]


def test_matcher_equals_oracle_on_short_words():
    table = default_char_rules()
    chartx = CharTx(table)
    mismatches = []
    for length in range(1, 5):
        for chars in itertools.product(SHORT_WORD_ALPHABET, repeat=length):
            word = reorder_shadda("".join(chars))
            produced = "".join(s.output for s in chartx.rewrite(word))
            if produced != oracle(word, table):
                mismatches.append(word)
    assert mismatches == []


def _random_words(seed, count, max_length=8):
    rng = random.Random(seed)
    alphabet = sorted(ARABIC_LETTERS | ARABIC_DIACRITICS)
    return ["".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_length))) for _ in range(count)]


def test_output_alphabet_on_random_words():
    for word in _random_words(7, 2000):
        out = chartx_word(word)
        assert not any(is_arabic_block(c) for c in out), word
        assert MALTESE_OUTPUT.fullmatch(out), (word, out)
        assert not FORBIDDEN_TARGET.search(out), (word, out)


def test_every_codepoint_is_consumed_once():
    chartx = default_chartx()
    for word in _random_words(11, 500):
        segments = chartx.trace(word)
        assert "".join(s.source for s in segments) == reorder_shadda(word)


def test_deterministic_across_threads():
    words = _random_words(3, 300)
    sequential = [chartx_word(w) for w in words]
    with ThreadPoolExecutor(max_workers=4) as executor:
        assert list(executor.map(chartx_word, words)) == sequential


# rule table

def test_default_table():
    table = default_char_rules()
    assert len(table) == 151
    assert table.version == "1"
    assert table.checksum == hashlib.sha256(DEFAULT_CHAR_RULES.read_bytes()).hexdigest()
    assert [g.name for g in table.groups][0] == "lam_sun_gemination"
    assert all(not FORBIDDEN_TARGET.search(rule.target) for rule in table)


def _write_rules(tmp_path, *rows):
    path = tmp_path / "rules.tsv"
    path.write_text("# version: 2\n" + "".join("\t".join(r) + "\n" for r in rows), encoding="utf-8")
    return path


def test_duplicate_rule_is_rejected(tmp_path):
    path = _write_rules(tmp_path, ("b", "-", "b", "letters"), ("b", "-", "bb", "letters"))
    with pytest.raises(RuleTableError, match="duplicate"):
        load_char_rules(path)


@pytest.mark.parametrize("row, message", [
    (("b", "-", "v", "letters"), "outside"),
    (("b", "MID", "b", "letters"), "anchor"),
    (("b", "-", "b", "vowels"), "class"),
    (("b", "-", "b"), "4 tab-separated"),
    (("bbbb", "-", "b", "letters"), "1 to 3"),
])
def test_bad_rule_rows(tmp_path, row, message):
    with pytest.raises(RuleTableError, match=message):
        load_char_rules(_write_rules(tmp_path, row))


def test_rules_path_from_environment(tmp_path, monkeypatch):
    path = _write_rules(tmp_path, ("b", "-", "p", "letters"))
    monkeypatch.setenv("MALTESE_TRANSLIT_RULES", str(path))
    with pytest.raises(RuleTableError):
        load_char_rules()
    path = _write_rules(tmp_path, ("b", "-", "bee", "letters"))
    table = load_char_rules()
    assert table.version == "2"
    assert CharTx(table).transliterate_word("بت") == "beeت"
