import pytest

from src.config import OrthographyConfig
from src.transliteration.orthography import apply_maltese_orthography, assimilate, starts_with_article


@pytest.mark.parametrize("tokens, expected", [
    (["fi", "it-teriq"], ["fit-teriq"]),
    (["il-żejt"], ["iż-żejt"]),
    (["il-ktieb"], ["il-ktieb"]),
    (["fi", "il-ktieb"], ["fil-ktieb"]),
    (["bi", "il-ktieb"], ["bil-ktieb"]),
    (["fi", "il-sejjara"], ["fis-sejjara"]),
    (["ra", "il-ktieb"], ["ra", "l-ktieb"]),
    (["ra", "il-xemx"], ["ra", "x-xemx"]),
    (["kien", "il-ktieb"], ["kien", "il-ktieb"]),
    ([], []),
])
def test_orthography(tokens, expected):
    assert apply_maltese_orthography(tokens) == expected


def test_every_sun_letter_assimilates():
    for letter in "ċdnrstxżz":
        assert assimilate(f"il-{letter}ar") == f"i{letter}-{letter}ar"


def test_assimilation_keeps_case():
    assert assimilate("Il-Sejjara") == "Is-Sejjara"
    assert assimilate("il-Sejjara") == "is-Sejjara"


def test_bare_article_assimilates_at_word_start():
    assert assimilate("l-sejjara") == "s-sejjara"
    assert assimilate("bil-sejjara") == "bis-sejjara"


def test_starts_with_article():
    assert starts_with_article("il-ktieb")
    assert starts_with_article("iż-żejt")
    assert not starts_with_article("ilma")
    assert not starts_with_article("ik-kelb")


def test_switches():
    config = OrthographyConfig(contract_bi=False, elide_article=False)
    assert apply_maltese_orthography(["bi", "il-ktieb"], config) == ["bi", "il-ktieb"]
    assert apply_maltese_orthography(["fi", "il-ktieb"], config) == ["fil-ktieb"]
    assert apply_maltese_orthography(["ra", "il-ktieb"], config) == ["ra", "il-ktieb"]
    config = OrthographyConfig(contract_fi=False)
    assert apply_maltese_orthography(["fi", "il-ktieb"], config) == ["fi", "l-ktieb"]


def test_contraction_removes_exactly_one_token_per_merge():
    tokens = ["fi", "il-bejt", "u", "bi", "is-sejjara", "ta'", "il-ktieb"]
    out = apply_maltese_orthography(tokens)
    assert out == ["fil-bejt", "u", "bis-sejjara", "ta'", "il-ktieb"]
    assert len(out) == len(tokens) - 2


def test_article_inside_a_word_is_not_assimilated():
    assert assimilate("Brazil-Tunisia") == "Brazil-Tunisia"
    assert assimilate("April-Novembru") == "April-Novembru"
    assert assimilate("fil-sejjara") == "fis-sejjara"


def test_fixed_words_pass_through():
    assert apply_maltese_orthography(["fi", "in-house"], fixed=[False, True]) == ["fi", "in-house"]
    assert apply_maltese_orthography(["fi", "il-ktieb"], fixed=[True, False]) == ["fi", "l-ktieb"]
    assert apply_maltese_orthography(["ra", "il-ktieb"], fixed=[False, True]) == ["ra", "il-ktieb"]
    assert apply_maltese_orthography(["il-sejjara"], fixed=[True]) == ["il-sejjara"]
    assert apply_maltese_orthography(["Roma", "fi", "il-sejjara"], fixed=[True, False, False]) == ["Roma", "fis-sejjara"]
