import csv
import logging
from dataclasses import dataclass

import pandas as pd

from src.transliteration.schemes import transliterate_line

logger = logging.getLogger(__name__)

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"

# five-way labels collapse onto the three-way set
LABEL_ALIASES = {
    "positive": POSITIVE,
    "very_positive": POSITIVE,
    "negative": NEGATIVE,
    "very_negative": NEGATIVE,
    "neutral": NEUTRAL,
}

TEXT_COLUMN = "text"
LABEL_COLUMN = "label"


class LabelError(ValueError):
    def __init__(self, label, index=None):
        self.label = label
        where = f"record {index}: " if index is not None else ""
        super().__init__(f"{where}unknown sentiment label {label!r}")


@dataclass(frozen=True)
class SentimentRecord:
    text: str
    label: str
    index: int | None = None


def canonical_label(label, index=None):
    key = str(label).strip().lower()
    if key not in LABEL_ALIASES:
        raise LabelError(label, index)
    return LABEL_ALIASES[key]


def filter_sentiment(records, diagnostics=None):
    """
    Drops neutral records and canonicalises the rest to positive/negative,
    keeping input order. A record with an unknown label is reported and
    skipped; without a diagnostics stream the LabelError propagates.
    """
    kept = []
    for record in records:
        try:
            label = canonical_label(record.label, record.index)
        except LabelError as e:
            if diagnostics is None:
                raise
            diagnostics.error(e, record_index=record.index)
            continue
        if label == NEUTRAL:
            continue
        kept.append(SentimentRecord(record.text, label, record.index))
    logger.info("Kept %d of %d sentiment records", len(kept), len(records))
    return kept


def transliterate_sentiment(record, scheme, sentence=None, morphtx=None, diagnostics=None, unmapped=None):
    text = transliterate_line(record.text, scheme, sentence, morphtx, diagnostics, unmapped)
    return SentimentRecord(text, record.label, record.index)


def read_sentiment(path):
    """
    Reads a text/label TSV with a header row into SentimentRecords. Quotes are
    ordinary text; a backslash escapes the next character.
    """
    df = pd.read_csv(
        path, sep="\t", dtype=str, keep_default_na=False, quoting=csv.QUOTE_NONE, escapechar="\\"
    )
    missing = {TEXT_COLUMN, LABEL_COLUMN} - set(df.columns)
    if missing:
        raise ValueError(f"{path}: missing column(s) {', '.join(sorted(missing))}")
    records = [
        SentimentRecord(text, label, i)
        for i, (text, label) in enumerate(zip(df[TEXT_COLUMN], df[LABEL_COLUMN]))
    ]
    logger.info("Read %d sentiment records from %s", len(records), path)
    return records


def write_sentiment(records, path):
    df = pd.DataFrame(
        {TEXT_COLUMN: [r.text for r in records], LABEL_COLUMN: [r.label for r in records]},
        columns=[TEXT_COLUMN, LABEL_COLUMN],
    )
    df.to_csv(path, sep="\t", index=False, lineterminator="\n", quoting=csv.QUOTE_NONE, escapechar="\\")
    logger.info("Wrote %d sentiment records to %s", len(records), path)
    return path
