import logging
from dataclasses import dataclass
from pathlib import Path

import pandas as pd
from tqdm import tqdm

from src.config import DEFAULT_CONTINUATION_MARKER, DEFAULT_UNKNOWN_PIECE
from src.normalization.tokenize import tokenize
from src.transliteration.schemes import MORPHTX, SCHEMES, transliterate_line

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["model", "scheme", "tokens", "pieces", "fertility", "unknown_rate"]


class EmptyCorpusError(ValueError):
    pass


@dataclass(frozen=True)
class SubwordVocab:
    """
    A WordPiece-style vocabulary. Entries starting with continuation_marker
    may only follow another piece; unmarked entries may only start a token.
    """
    entries: frozenset
    continuation_marker: str = DEFAULT_CONTINUATION_MARKER
    unknown_piece: str = DEFAULT_UNKNOWN_PIECE
    name: str = "vocab"

    @classmethod
    def from_file(cls, path, continuation_marker=DEFAULT_CONTINUATION_MARKER,
                  unknown_piece=DEFAULT_UNKNOWN_PIECE, name=None):
        path = Path(path)
        with open(path, "r", encoding="utf-8") as f:
            entries = frozenset(line.rstrip("\r\n") for line in f if line.strip())
        if name is None:
            name = path.stem if path.stem != "vocab" else path.parent.name or path.stem
        logger.info("Loaded %d vocabulary entries from %s", len(entries), path)
        return cls(entries, continuation_marker, unknown_piece, name)

    def with_entries(self, extra):
        return SubwordVocab(self.entries | frozenset(extra), self.continuation_marker, self.unknown_piece, self.name)

    def __contains__(self, piece):
        return piece in self.entries

    def __len__(self):
        return len(self.entries)


def _greedy_pieces(token, vocab):
    pieces = []
    start = 0
    while start < len(token):
        end = len(token)
        current = None
        while start < end:
            piece = token[start:end]
            if start > 0:
                piece = vocab.continuation_marker + piece
            if piece in vocab:
                current = piece
                break
            end -= 1
        if current is None:
            return None
        pieces.append(current)
        start = end
    return pieces


def subword_tokenize(token, vocab):
    """
    Greedy longest-prefix matching; pieces after the first carry the
    continuation marker. A token that cannot be covered becomes the single
    unknown piece.
    """
    if not token:
        return []
    pieces = _greedy_pieces(token, vocab)
    return pieces if pieces is not None else [vocab.unknown_piece]


def strip_marker(pieces, vocab):
    m = vocab.continuation_marker
    return "".join(p[len(m):] if i > 0 and p.startswith(m) else p for i, p in enumerate(pieces))


@dataclass(frozen=True)
class FertilityReport:
    token_count: int
    subword_count: int
    unknown_count: int = 0

    @property
    def fertility(self):
        return self.subword_count / self.token_count

    @property
    def unknown_rate(self):
        return self.unknown_count / self.token_count

    def as_row(self, model, scheme):
        return {
            "model": model,
            "scheme": scheme,
            "tokens": self.token_count,
            "pieces": self.subword_count,
            "fertility": self.fertility,
            "unknown_rate": self.unknown_rate,
        }


def fertility(tokens, vocab, lowercase=False, unknown_as_characters=False):
    """
    Average number of subword pieces per token.

    lowercase folds tokens first, as an uncased tokenizer would.
    unknown_as_characters counts an uncovered token as one piece per
    character instead of a single unknown piece.
    """
    token_count = subword_count = unknown_count = 0
    for token in tokens:
        if not token:
            continue
        if lowercase:
            token = token.lower()
        pieces = _greedy_pieces(token, vocab)
        token_count += 1
        if pieces is None:
            unknown_count += 1
            subword_count += len(token) if unknown_as_characters else 1
        else:
            subword_count += len(pieces)
    if token_count == 0:
        raise EmptyCorpusError("fertility is undefined for a corpus without tokens")
    return FertilityReport(token_count, subword_count, unknown_count)


def corpus_tokens(lines):
    return [token.text for line in lines for token in tokenize(line)]


def report_schemes(with_analyses=False):
    # morphtx without analyses would only repeat the chartx row
    return [s for s in SCHEMES if s != MORPHTX or with_analyses]


def scheme_report(lines, vocabs, schemes, sidecar=None, lowercase=False, unknown_as_characters=False,
                  morphtx=None, diagnostics=None, unmapped=None):
    """
    Transliterates the Arabic lines under every scheme and measures each
    vocabulary's fertility on the result. One row per (model, scheme).
    """
    lines = list(lines)
    rows = []
    for scheme in schemes:
        out = [
            transliterate_line(line, scheme, sidecar.get(i) if sidecar is not None else None,
                               morphtx, diagnostics, unmapped)
            for i, line in enumerate(tqdm(lines, desc=scheme, leave=False, disable=None))
        ]
        tokens = corpus_tokens(out)
        for vocab in vocabs:
            report = fertility(tokens, vocab, lowercase, unknown_as_characters)
            logger.info("%s / %s: fertility %.3f over %d tokens", vocab.name, scheme, report.fertility,
                        report.token_count)
            rows.append(report.as_row(vocab.name, scheme))
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def write_report(df, path):
    df.to_csv(path, sep="\t", index=False, float_format="%.6f", lineterminator="\n")
    logger.info("Fertility report saved to %s", path)
    return path
