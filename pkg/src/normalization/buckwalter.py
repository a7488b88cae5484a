from src.normalization.schema import ARABIC_TO_BUCKWALTER, BUCKWALTER_TO_ARABIC

_TO_BW = str.maketrans(ARABIC_TO_BUCKWALTER)
_FROM_BW = str.maketrans(BUCKWALTER_TO_ARABIC)


def to_buckwalter(text, lowercase=False):
    """
    Maps normalized Arabic text to Buckwalter ASCII.

    Codepoints outside the Buckwalter table pass through. With lowercase=True
    the mapped string is case-folded, which merges e.g. A (alef) with a (fatha).
    """
    mapped = text.translate(_TO_BW)
    return mapped.lower() if lowercase else mapped


def from_buckwalter(text):
    """
    Inverse of to_buckwalter(text, lowercase=False). Unknown characters are kept.
    """
    return text.translate(_FROM_BW)
