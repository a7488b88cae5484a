import json
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path

from src.config import SIDECAR_FORMAT, SIDECAR_VERSION
from src.normalization.normalize import normalize
from src.normalization.schema import strip_diacritics

logger = logging.getLogger(__name__)

POSITIONS = ("proclitic", "prefix", "stem", "suffix", "enclitic")
PROPER_NOUN_TAG = "NOUN_PROP"


class SidecarHeaderError(ValueError):
    pass


class SidecarRecordError(ValueError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class AlignmentError(ValueError):
    pass


@dataclass(frozen=True)
class Morpheme:
    surface: str
    tag: str
    position: str | None = None


@dataclass(frozen=True)
class MorphAnalysis:
    token_index: int
    diacritized: str
    morphemes: tuple = ()
    is_proper_noun: bool = False
    construct_state: bool = False
    text: str = ""
    analysis_missing: bool = False

    @classmethod
    def missing(cls, token_index, text):
        return cls(token_index, text, text=text, analysis_missing=True)


@dataclass(frozen=True)
class SentenceAnalysis:
    sentence_id: object
    analyses: tuple
    sentence: str | None = None
    provenance: str | None = None
    line: int = 0


@dataclass
class AnalysisSidecar:
    """
    Per-sentence analyses in record order. A malformed record keeps its slot
    as None so that later sentences stay aligned with their input lines.
    """
    sentences: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def __len__(self):
        return len(self.sentences)

    def get(self, index):
        if 0 <= index < len(self.sentences):
            return self.sentences[index]
        return None


def _require(condition, line, message):
    if not condition:
        raise SidecarRecordError(line, message)


def _parse_morpheme(raw, line):
    _require(isinstance(raw, dict), line, "morpheme must be an object")
    surface, tag = raw.get("surface"), raw.get("tag")
    _require(isinstance(surface, str) and isinstance(tag, str), line, "morpheme needs string 'surface' and 'tag'")
    position = raw.get("position")
    _require(position is None or position in POSITIONS, line, f"unknown morpheme position {position!r}")
    return Morpheme(normalize(surface), tag, position)


def _parse_token(raw, default_index, line):
    _require(isinstance(raw, dict), line, "token must be an object or null")
    diacritized = raw.get("diacritized")
    _require(isinstance(diacritized, str), line, "token needs a string 'diacritized'")
    diacritized = normalize(diacritized)
    morphemes = raw.get("morphemes", [])
    _require(isinstance(morphemes, list), line, "'morphemes' must be a list")
    morphemes = tuple(_parse_morpheme(m, line) for m in morphemes)
    if morphemes:
        rebuilt = strip_diacritics("".join(m.surface for m in morphemes))
        _require(
            rebuilt == strip_diacritics(diacritized),
            line,
            f"morphemes {rebuilt!r} do not reconstruct {diacritized!r}",
        )
    index = raw.get("index", default_index)
    _require(isinstance(index, int), line, "token 'index' must be an integer")
    proper = bool(raw.get("proper_noun", False)) or any(m.tag == PROPER_NOUN_TAG for m in morphemes)
    return MorphAnalysis(index, diacritized, morphemes, proper, bool(raw.get("construct", False)))


def parse_record(raw, line):
    _require(isinstance(raw, dict), line, "record must be a JSON object")
    tokens = raw.get("tokens")
    _require(isinstance(tokens, list), line, "record needs a 'tokens' list")
    analyses = {}
    for position, token in enumerate(tokens):
        if token is None:
            analyses[position] = None
            continue
        analysis = _parse_token(token, position, line)
        _require(analysis.token_index not in analyses, line, f"duplicate token index {analysis.token_index}")
        analyses[analysis.token_index] = analysis
    _require(sorted(analyses) == list(range(len(tokens))), line, "token indices must be 0..n-1")
    return SentenceAnalysis(
        raw.get("sentence_id", line),
        tuple(analyses[i] for i in range(len(tokens))),
        raw.get("sentence"),
        raw.get("provenance"),
        line,
    )


def _check_header(raw):
    if raw.get("format") != SIDECAR_FORMAT or raw.get("version") != SIDECAR_VERSION:
        raise SidecarHeaderError(
            f"unsupported sidecar header {raw!r}; expected format {SIDECAR_FORMAT!r} version {SIDECAR_VERSION}"
        )


def load_analyses(stream):
    """
    Reads a line-delimited JSON analysis sidecar.

    Each line holds one sentence record. Malformed records are collected in
    AnalysisSidecar.errors and leave a None slot; a bad header is fatal.
    """
    if isinstance(stream, (str, Path)):
        with open(stream, "r", encoding="utf-8") as f:
            return load_analyses(f)

    sidecar = AnalysisSidecar()
    first = True
    for number, raw_line in enumerate(stream, start=1):
        if not raw_line.strip():
            continue
        is_first, first = first, False
        try:
            raw = json.loads(raw_line)
        except json.JSONDecodeError as e:
            sidecar.errors.append(SidecarRecordError(number, f"invalid JSON: {e.msg}"))
            sidecar.sentences.append(None)
            continue
        if is_first and isinstance(raw, dict) and "format" in raw:
            _check_header(raw)
            continue
        try:
            sidecar.sentences.append(parse_record(raw, number))
        except SidecarRecordError as e:
            sidecar.errors.append(e)
            sidecar.sentences.append(None)

    if sidecar.errors:
        logger.warning("Sidecar has %d malformed record(s)", len(sidecar.errors))
    logger.info("Loaded analyses for %d sentence(s)", len(sidecar))
    return sidecar


def align(sentence, tokens):
    """
    Aligns a sentence's analyses with tokenizer output by token index.
    Tokens without an analysis are flagged analysis_missing.
    """
    tokens = list(tokens)
    if len(sentence.analyses) != len(tokens):
        raise AlignmentError(
            f"sentence {sentence.sentence_id}: sidecar has {len(sentence.analyses)} token(s), "
            f"tokenizer produced {len(tokens)}"
        )
    aligned = []
    for index, (analysis, token) in enumerate(zip(sentence.analyses, tokens)):
        text = token.text if hasattr(token, "text") else token
        if analysis is None:
            aligned.append(MorphAnalysis.missing(index, text))
        else:
            aligned.append(replace(analysis, text=text))
    return aligned
