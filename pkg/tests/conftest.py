import io
import json
from pathlib import Path

import pytest

from src.normalization.buckwalter import from_buckwalter
from src.transliteration.analyses import load_analyses

FIXTURES = Path(__file__).parent / "fixtures"

WORKED_ARABIC = "أوقفت السيارة في الطريق."
WORKED_BUCKWALTER = ">wqft AlsyArp fy AlTryq."
WORKED_BUCKWALTER_LC = ">wqft alsyarp fy altryq."
WORKED_CHARTX = "uqft alsjara fi altriq."
WORKED_MORPHTX = "awqefat is-sejjara fit-teriq."


def make_token(*morphemes, **flags):
    """make_token(("Al", "DET"), ("say~Ar", "NOUN")) with Buckwalter surfaces."""
    parsed = [{"surface": from_buckwalter(surface), "tag": tag} for surface, tag in morphemes]
    return {"diacritized": "".join(m["surface"] for m in parsed), "morphemes": parsed, **flags}


def make_record(*tokens, sentence_id=1):
    return json.dumps({"sentence_id": sentence_id, "tokens": list(tokens)}, ensure_ascii=False)


def make_sidecar(*records):
    return load_analyses(io.StringIO("".join(r + "\n" for r in records)))


@pytest.fixture
def worked_sidecar():
    return load_analyses(FIXTURES / "worked_example_analyses.jsonl")
