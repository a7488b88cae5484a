import os
from dataclasses import dataclass
from pathlib import Path

__version__ = "1.0.0"

DATA_DIR = Path(__file__).parent / "transliteration" / "data"
DEFAULT_CHAR_RULES = DATA_DIR / "char_rules.tsv"
DEFAULT_MORPHEME_RULES = DATA_DIR / "morpheme_rules.tsv"

CHAR_RULES_ENV = "MALTESE_TRANSLIT_RULES"
MORPHEME_RULES_ENV = "MALTESE_TRANSLIT_MORPHEMES"

DEFAULT_CONTINUATION_MARKER = "##"
DEFAULT_UNKNOWN_PIECE = "[UNK]"

SIDECAR_FORMAT = "maltese-translit-analyses"
SIDECAR_VERSION = 1


@dataclass(frozen=True)
class OrthographyConfig:
    """
    Switches for the Maltese orthographic conventions applied after MorphTx.
    Only the fi contraction is attested in the source rules; the bi
    contraction and the post-vocalic article elision are extensions.
    """
    contract_fi: bool = True
    contract_bi: bool = True
    elide_article: bool = True


def char_rules_path(override=None):
    return Path(override or os.environ.get(CHAR_RULES_ENV) or DEFAULT_CHAR_RULES)


def morpheme_rules_path(override=None):
    return Path(override or os.environ.get(MORPHEME_RULES_ENV) or DEFAULT_MORPHEME_RULES)
