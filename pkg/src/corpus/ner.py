import logging
from dataclasses import dataclass

from src.transliteration.analyses import AlignmentError, align
from src.transliteration.schemes import MORPHTX, transliterate_word

logger = logging.getLogger(__name__)

OUTSIDE = "O"
ENTITY_TYPES = ("PER", "ORG", "LOC")

ANERCORP = "anercorp"
MAPA = "mapa"
SCHEMAS = (ANERCORP, MAPA)

# ANERCorp entity type -> common tagset (None drops the entity)
ANERCORP_TYPES = {
    "PER": "PER",
    "PERS": "PER",
    "ORG": "ORG",
    "LOC": "LOC",
    "MISC": None,
}

MAPA_PERSON = "PERSON"
MAPA_ADDRESS = "ADDRESS"
MAPA_ORGANISATION = ("ORGANISATION", "ORG")
MAPA_LEVEL1 = {"PERSON", "ORGANISATION", "ORG", "ADDRESS", "DATE", "AMOUNT", "TIME", "VEHICLE"}
MAPA_LEVEL2_PER = {"given name", "family name"}
MAPA_LEVEL2_LOC = {"city", "country"}
MAPA_LEVEL2 = MAPA_LEVEL2_PER | MAPA_LEVEL2_LOC | {
    "initial name", "title", "role", "profession", "nationality", "marital status", "age",
    "ethnic category", "day", "month", "year", "standard abbreviation", "building", "place",
    "postcode", "street", "territory", "unit", "value", "url", "email", "license plate",
    "type", "identification number", "phone number", "bank account", "other",
}


class TagError(ValueError):
    def __init__(self, tags, index=None):
        self.tags = sorted(tags)
        where = f"sentence {index}: " if index is not None else ""
        super().__init__(f"{where}unknown tag(s) {', '.join(self.tags)}")


@dataclass
class NerSentence:
    tokens: list
    tags: list
    fine_tags: list | None = None
    index: int | None = None

    def __post_init__(self):
        if len(self.tokens) != len(self.tags):
            raise ValueError(f"{len(self.tokens)} tokens but {len(self.tags)} tags")
        if self.fine_tags is not None and len(self.fine_tags) != len(self.tokens):
            raise ValueError(f"{len(self.tokens)} tokens but {len(self.fine_tags)} level-2 tags")

    def __len__(self):
        return len(self.tokens)


def split_tag(tag):
    if tag == OUTSIDE:
        return OUTSIDE, None
    prefix, sep, entity = tag.partition("-")
    if not sep or prefix not in ("B", "I") or not entity:
        return None, tag
    return prefix, entity


def is_valid_bio(tags):
    previous = None
    for tag in tags:
        prefix, entity = split_tag(tag)
        if prefix is None:
            return False
        if prefix == "I" and previous != entity:
            return False
        previous = entity
    return True


def repair_bio(tags):
    """
    Turns every orphaned I-X (not preceded by B-X or I-X) into B-X.
    """
    repaired = []
    previous = None
    for tag in tags:
        prefix, entity = split_tag(tag)
        if prefix == "I" and previous != entity:
            tag = f"B-{entity}"
        repaired.append(tag)
        previous = entity
    return repaired


def _anercorp_tags(sentence):
    unknown = set()
    tags = []
    for tag in sentence.tags:
        prefix, entity = split_tag(tag)
        if prefix == OUTSIDE:
            tags.append(OUTSIDE)
        elif prefix is None or entity not in ANERCORP_TYPES:
            unknown.add(tag)
        else:
            mapped = ANERCORP_TYPES[entity]
            tags.append(f"{prefix}-{mapped}" if mapped else OUTSIDE)
    return tags, unknown


def _mapa_tag(level1, level2, unknown):
    p1, t1 = split_tag(level1)
    p2, t2 = split_tag(level2)
    if p1 is None or (t1 is not None and t1 not in MAPA_LEVEL1):
        unknown.add(level1)
    if p2 is None or (t2 is not None and t2.lower() not in MAPA_LEVEL2):
        unknown.add(level2)
    t2 = t2.lower() if t2 else None

    if t2 in MAPA_LEVEL2_PER:
        return f"{p1 if t1 == MAPA_PERSON else p2}-PER"
    if t2 in MAPA_LEVEL2_LOC:
        return f"{p1 if t1 == MAPA_ADDRESS else p2}-LOC"
    if t1 in MAPA_ORGANISATION:
        return f"{p1}-ORG"
    return OUTSIDE


def _mapa_tags(sentence):
    unknown = set()
    fine = sentence.fine_tags or [OUTSIDE] * len(sentence)
    tags = [_mapa_tag(level1, level2, unknown) for level1, level2 in zip(sentence.tags, fine)]
    return tags, unknown


def normalize_ner_tags(sentence, source_schema):
    """
    Maps a sentence onto the common PER/ORG/LOC tagset.

    ANERCorp: MISC becomes O. MAPA: level-2 given/family name -> PER,
    city/country -> LOC, level-1 organisation -> ORG, everything else O.
    BIO validity is restored after relabelling.
    """
    if source_schema == ANERCORP:
        tags, unknown = _anercorp_tags(sentence)
    elif source_schema == MAPA:
        tags, unknown = _mapa_tags(sentence)
    else:
        raise ValueError(f"Unknown NER schema {source_schema!r}; expected one of {', '.join(SCHEMAS)}")
    if unknown:
        raise TagError(unknown, sentence.index)
    return NerSentence(list(sentence.tokens), repair_bio(tags), None, sentence.index)


def transliterate_ner(sentence, scheme, analyses=None, morphtx=None, diagnostics=None, unmapped=None):
    """
    Transliterates each token on its own and copies the tags positionally.
    Every scheme maps one word to one word, so lengths are preserved.
    """
    aligned = [None] * len(sentence)
    if scheme == MORPHTX and analyses is not None:
        try:
            aligned = align(analyses, sentence.tokens)
        except AlignmentError as e:
            logger.debug("Sentence %s falls back to CharTx: %s", sentence.index, e)
            if diagnostics is not None:
                diagnostics.error(e, sentence_index=sentence.index)
    tokens = [
        transliterate_word(token, scheme, analysis, morphtx, unmapped)
        for token, analysis in zip(sentence.tokens, aligned)
    ]
    fine = list(sentence.fine_tags) if sentence.fine_tags is not None else None
    return NerSentence(tokens, list(sentence.tags), fine, sentence.index)


def read_conll(path):
    """
    Reads token<TAB>tag[<TAB>level-2 tag] rows with blank lines between
    sentences. Rows without a tab are split on whitespace.
    """
    sentences = []
    rows = []

    def flush():
        if rows:
            tokens = [r[0] for r in rows]
            tags = [r[1] for r in rows]
            fine = [r[2] for r in rows] if all(len(r) > 2 for r in rows) else None
            sentences.append(NerSentence(tokens, tags, fine, len(sentences)))
            rows.clear()

    with open(path, "r", encoding="utf-8") as f:
        for number, raw in enumerate(f, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip():
                flush()
                continue
            if line.startswith("-DOCSTART-"):
                continue
            fields = line.split("\t") if "\t" in line else line.split()
            if len(fields) < 2:
                raise ValueError(f"{path}:{number}: expected a token and a tag")
            rows.append(fields)
    flush()
    logger.info("Read %d sentences from %s", len(sentences), path)
    return sentences


def write_conll(sentences, path):
    with open(path, "w", encoding="utf-8") as f:
        for sentence in sentences:
            columns = [sentence.tokens, sentence.tags]
            if sentence.fine_tags is not None:
                columns.append(sentence.fine_tags)
            for row in zip(*columns):
                f.write("\t".join(row) + "\n")
            f.write("\n")
    logger.info("Wrote %d sentences to %s", len(sentences), path)
    return path
