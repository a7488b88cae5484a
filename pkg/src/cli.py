import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import pandas as pd
from tqdm import tqdm

from src.analysis.fertility import (
    REPORT_COLUMNS,
    SubwordVocab,
    corpus_tokens,
    fertility,
    report_schemes,
    scheme_report,
    write_report,
)
from src.analysis.plots import plot_fertility
from src.config import DEFAULT_CONTINUATION_MARKER, DEFAULT_UNKNOWN_PIECE, OrthographyConfig, __version__
from src.corpus.ner import ANERCORP, SCHEMAS, TagError, normalize_ner_tags, read_conll, transliterate_ner, write_conll
from src.corpus.sampling import DEFAULT_SEED, NAMED_SPLITS, downsample, parse_split
from src.corpus.sentiment import filter_sentiment, read_sentiment, transliterate_sentiment, write_sentiment
from src.diagnostics import Diagnostics
from src.normalization.normalize import normalize
from src.transliteration.analyses import load_analyses
from src.transliteration.chartx import CharTx
from src.transliteration.morphtx import MorphTx
from src.transliteration.rules import load_char_rules, load_morpheme_rules, tables_checksum
from src.transliteration.schemes import CHARTX, MORPHTX, SCHEMES, transliterate_line

logger = logging.getLogger(__name__)

NER = "ner"
SA = "sa"


@dataclass
class RunConfig:
    command: str
    scheme: str = CHARTX
    input: str | None = None
    output: str | None = None
    analyses: str | None = None
    rules: str | None = None
    morpheme_rules: str | None = None
    diagnostics: str | None = None
    workers: int = 1
    task: str = NER
    schema: str = ANERCORP
    downsample: str | None = None
    seed: int = DEFAULT_SEED
    vocabs: list = field(default_factory=list)
    marker: str = DEFAULT_CONTINUATION_MARKER
    unknown_piece: str = DEFAULT_UNKNOWN_PIECE
    per_scheme: bool = False
    lowercase: bool = False
    unknown_as_characters: bool = False
    plot: str | None = None
    orthography: OrthographyConfig = field(default_factory=OrthographyConfig)


def build_engine(config):
    chartx = CharTx(load_char_rules(config.rules))
    return MorphTx(chartx, load_morpheme_rules(config.morpheme_rules), config.orthography)


def _load_sidecar(config, diagnostics):
    if not config.analyses:
        return None
    sidecar = load_analyses(config.analyses)
    for error in sidecar.errors:
        diagnostics.error(error, line=error.line)
    return sidecar


def _sentence(sidecar, index):
    return sidecar.get(index) if sidecar is not None else None


def _map(fn, items, workers, desc):
    items = list(items)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(tqdm(executor.map(fn, items), total=len(items), desc=desc, disable=None))
    return [fn(item) for item in tqdm(items, desc=desc, disable=None)]


def _read_lines(path, stdin):
    if path and path != "-":
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    else:
        text = stdin.read()
    lines = text.split("\n")
    trailing = text.endswith("\n")
    if trailing or not text:
        lines.pop()
    return lines, trailing


def _write_lines(lines, trailing, path, stdout):
    text = "\n".join(lines) + ("\n" if trailing and lines else "")
    if path and path != "-":
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info("Wrote %d lines to %s", len(lines), path)
    else:
        stdout.write(text)


def _split_paths(output):
    out = Path(output)
    return out.with_name(f"{out.stem}.train{out.suffix}"), out.with_name(f"{out.stem}.valid{out.suffix}")


def _write_records(records, config, writer):
    if not config.downsample:
        writer(records, config.output)
        return
    train, valid = downsample(records, parse_split(config.downsample, config.seed))
    train_path, valid_path = _split_paths(config.output)
    writer(train, train_path)
    writer(valid, valid_path)


def run_normalize(config, diagnostics, stdin, stdout):
    lines, trailing = _read_lines(config.input, stdin)
    _write_lines(_map(normalize, lines, config.workers, "normalize"), trailing, config.output, stdout)


def run_translit(config, diagnostics, stdin, stdout):
    lines, trailing = _read_lines(config.input, stdin)
    engine = build_engine(config)
    sidecar = _load_sidecar(config, diagnostics)
    if sidecar is not None and config.scheme != MORPHTX:
        logger.warning("--analyses is only used by the morphtx scheme")

    def work(item):
        index, line = item
        unmapped = []
        out = transliterate_line(line, config.scheme, _sentence(sidecar, index), engine, diagnostics, unmapped)
        diagnostics.record_unmapped(unmapped)
        return out

    out = _map(work, enumerate(lines), config.workers, config.scheme)
    _write_lines(out, trailing, config.output, stdout)


def run_corpus_ner(config, diagnostics, engine, sidecar):
    sentences = read_conll(config.input)

    def work(sentence):
        try:
            tagged = normalize_ner_tags(sentence, config.schema)
        except TagError as e:
            diagnostics.error(e, sentence_index=sentence.index)
            return None
        unmapped = []
        out = transliterate_ner(tagged, config.scheme, _sentence(sidecar, sentence.index), engine, diagnostics,
                                unmapped)
        diagnostics.record_unmapped(unmapped)
        return out

    results = [s for s in _map(work, sentences, config.workers, config.scheme) if s is not None]
    _write_records(results, config, write_conll)


def run_corpus_sa(config, diagnostics, engine, sidecar):
    records = filter_sentiment(read_sentiment(config.input), diagnostics)

    def work(record):
        unmapped = []
        out = transliterate_sentiment(record, config.scheme, _sentence(sidecar, record.index), engine, diagnostics,
                                      unmapped)
        diagnostics.record_unmapped(unmapped)
        return out

    _write_records(_map(work, records, config.workers, config.scheme), config, write_sentiment)


def run_corpus(config, diagnostics, stdin, stdout):
    engine = build_engine(config)
    sidecar = _load_sidecar(config, diagnostics)
    if config.task == NER:
        run_corpus_ner(config, diagnostics, engine, sidecar)
    else:
        run_corpus_sa(config, diagnostics, engine, sidecar)


def run_fertility(config, diagnostics, stdin, stdout):
    vocabs = [SubwordVocab.from_file(path, config.marker, config.unknown_piece) for path in config.vocabs]
    lines, _ = _read_lines(config.input, stdin)
    if config.per_scheme:
        engine = build_engine(config)
        sidecar = _load_sidecar(config, diagnostics)
        unmapped = []
        report = scheme_report(
            lines, vocabs, report_schemes(sidecar is not None), sidecar,
            config.lowercase, config.unknown_as_characters, engine, diagnostics, unmapped,
        )
        diagnostics.record_unmapped(unmapped)
    else:
        tokens = corpus_tokens(lines)
        rows = [
            fertility(tokens, vocab, config.lowercase, config.unknown_as_characters).as_row(vocab.name, "input")
            for vocab in vocabs
        ]
        report = pd.DataFrame(rows, columns=REPORT_COLUMNS)

    write_report(report, config.output if config.output and config.output != "-" else stdout)
    if config.plot:
        plot_fertility(report, config.plot)


COMMANDS = {
    "normalize": run_normalize,
    "translit": run_translit,
    "corpus": run_corpus,
    "fertility": run_fertility,
}


def run(config, stdin=None, stdout=None):
    """
    Runs one subcommand. Returns 0 on success and 1 on a fatal error, which
    is also reported as a "fatal" event on the diagnostics stream.
    """
    stream = None
    diagnostics = Diagnostics()
    try:
        if config.diagnostics:
            # an unwritable path falls back to stderr for the fatal event
            stream = open(config.diagnostics, "w", encoding="utf-8")
            diagnostics = Diagnostics(stream)
        COMMANDS[config.command](config, diagnostics, stdin or sys.stdin, stdout or sys.stdout)
    except (OSError, ValueError) as e:
        logger.error("%s failed: %s", config.command, e)
        diagnostics.fatal(e)
        return 1
    finally:
        diagnostics.summary()
        if stream is not None:
            stream.close()
    return 0


def _positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def build_parser():
    parser = argparse.ArgumentParser(description="Arabic to Maltese transliteration pipeline")
    parser.add_argument("--version", action="store_true", help="Print the version and rule-table checksum")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Only log warnings and errors")
    parser.add_argument("--diagnostics", type=str, help="Write JSON-lines diagnostics here instead of stderr")
    parser.add_argument("--rules", type=str, help="Character rule table (overrides $MALTESE_TRANSLIT_RULES)")
    parser.add_argument("--morpheme-rules", type=str,
                        help="Morpheme rule table (overrides $MALTESE_TRANSLIT_MORPHEMES)")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Normalize command
    normalize_parser = subparsers.add_parser("normalize", help="Normalize Arabic text line by line")
    normalize_parser.add_argument("--in", dest="input", type=str, help="Input file (default: stdin)")
    normalize_parser.add_argument("--out", dest="output", type=str, help="Output file (default: stdout)")

    # Translit command
    translit_parser = subparsers.add_parser("translit", help="Transliterate one sentence per line")
    translit_parser.add_argument("--scheme", type=str, default=CHARTX, choices=SCHEMES, help="Output scheme")
    translit_parser.add_argument("--analyses", type=str, help="Morphological analysis sidecar (JSON lines)")
    translit_parser.add_argument("--in", dest="input", type=str, help="Input file (default: stdin)")
    translit_parser.add_argument("--out", dest="output", type=str, help="Output file (default: stdout)")
    translit_parser.add_argument("--workers", type=_positive_int, default=1, help="Worker threads")
    translit_parser.add_argument("--no-bi-contraction", action="store_true", help="Keep 'bi il-' uncontracted")
    translit_parser.add_argument("--no-elision", action="store_true", help="Keep the article vowel after vowels")

    # Corpus command
    corpus_parser = subparsers.add_parser("corpus", help="Transliterate an annotated dataset")
    corpus_parser.add_argument("--task", type=str, default=NER, choices=[NER, SA], help="Dataset type")
    corpus_parser.add_argument("--schema", type=str, default=ANERCORP, choices=SCHEMAS, help="NER source tagset")
    corpus_parser.add_argument("--scheme", type=str, default=CHARTX, choices=SCHEMES, help="Output scheme")
    corpus_parser.add_argument("--analyses", type=str, help="Morphological analysis sidecar (JSON lines)")
    corpus_parser.add_argument("--downsample", type=str,
                               help=f"TRAIN,VALID counts or one of: {', '.join(NAMED_SPLITS)}")
    corpus_parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Sampling seed")
    corpus_parser.add_argument("--in", dest="input", type=str, required=True, help="Input file")
    corpus_parser.add_argument("--out", dest="output", type=str, required=True, help="Output file")
    corpus_parser.add_argument("--workers", type=_positive_int, default=1, help="Worker threads")
    corpus_parser.add_argument("--no-bi-contraction", action="store_true", help="Keep 'bi il-' uncontracted")
    corpus_parser.add_argument("--no-elision", action="store_true", help="Keep the article vowel after vowels")

    # Fertility command
    fertility_parser = subparsers.add_parser("fertility", help="Subword fertility of a vocabulary")
    fertility_parser.add_argument("--vocab", dest="vocabs", type=str, action="append", required=True,
                                  help="Vocabulary file, one entry per line (repeatable)")
    fertility_parser.add_argument("--marker", type=str, default=DEFAULT_CONTINUATION_MARKER,
                                  help="Continuation marker")
    fertility_parser.add_argument("--unk", dest="unknown_piece", type=str, default=DEFAULT_UNKNOWN_PIECE,
                                  help="Unknown piece")
    fertility_parser.add_argument("--in", dest="input", type=str, help="Input file (default: stdin)")
    fertility_parser.add_argument("--per-scheme", action="store_true", help="Report every transliteration scheme")
    fertility_parser.add_argument("--analyses", type=str, help="Sidecar enabling the morphtx row")
    fertility_parser.add_argument("--lowercase", action="store_true", help="Lowercase tokens first")
    fertility_parser.add_argument("--unknown-as-chars", dest="unknown_as_characters", action="store_true",
                                  help="Count an unknown token as one piece per character")
    fertility_parser.add_argument("--out", dest="output", type=str, help="Report TSV (default: stdout)")
    fertility_parser.add_argument("--plot", type=str, help="Save a fertility bar chart here")

    return parser


def config_from_args(args):
    values = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__ and v is not None}
    values["orthography"] = OrthographyConfig(
        contract_bi=not getattr(args, "no_bi_contraction", False),
        elide_article=not getattr(args, "no_elision", False),
    )
    return RunConfig(**values)


def main(argv=None, stdin=None, stdout=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    if args.version:
        out = stdout or sys.stdout
        out.write(f"maltese-translit {__version__} rules sha256:{tables_checksum(args.rules, args.morpheme_rules)}\n")
        return 0
    if args.command is None:
        parser.print_help()
        return 2
    return run(config_from_args(args), stdin, stdout)


if __name__ == "__main__":
    sys.exit(main())
