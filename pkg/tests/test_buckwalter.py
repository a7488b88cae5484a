from src.normalization.buckwalter import from_buckwalter, to_buckwalter
from src.normalization.schema import ARABIC_TO_BUCKWALTER, BUCKWALTER_TO_ARABIC
from tests.conftest import WORKED_ARABIC, WORKED_BUCKWALTER, WORKED_BUCKWALTER_LC


def test_worked_example_sentence():
    assert to_buckwalter(WORKED_ARABIC) == WORKED_BUCKWALTER


def test_worked_example_sentence_lowercased():
    assert to_buckwalter(WORKED_ARABIC, lowercase=True) == WORKED_BUCKWALTER_LC
    assert to_buckwalter(WORKED_ARABIC, lowercase=True) == to_buckwalter(WORKED_ARABIC).lower()


def test_empty():
    assert to_buckwalter("") == ""
    assert from_buckwalter("") == ""


def test_table_is_a_bijection():
    assert len(set(ARABIC_TO_BUCKWALTER.values())) == len(ARABIC_TO_BUCKWALTER)
    assert all(BUCKWALTER_TO_ARABIC[bw] == cp for cp, bw in ARABIC_TO_BUCKWALTER.items())


def test_inverse_on_covered_characters():
    covered = "".join(ARABIC_TO_BUCKWALTER)
    assert from_buckwalter(to_buckwalter(covered)) == covered


def test_uncovered_codepoints_pass_through():
    assert to_buckwalter("٢٠٢٣؟ ok") == "٢٠٢٣؟ ok"


def test_diacritized_word():
    assert from_buckwalter("Alsay~Arap") == "السَيّارَة"
    assert to_buckwalter("السَيّارَة") == "Alsay~Arap"
