import hashlib
import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache

import regex

from src.config import char_rules_path, morpheme_rules_path
from src.normalization.buckwalter import from_buckwalter
from src.normalization.schema import strip_diacritics

logger = logging.getLogger(__name__)

NO_ANCHOR = "-"
BOS = "BOS"
EOS = "EOS"
ANCHORS = (NO_ANCHOR, BOS, EOS)

EMPTY_TARGET = "∅"
DETACH_MARKER = "_"
ANY_FORM = "*"

# Precedence order of the character rule classes
RULE_CLASSES = (
    "lam_sun_gemination",
    "final_y_gemination",
    "gemination",
    "hamza_alef_diacritic",
    "long_vowel_a",
    "y_glide",
    "w_glide",
    "word_boundary",
    "diacritics",
    "letters",
    "symbols",
)

# Letters CharTx must never produce: ċ, p, v, z, and g outside "għ"
FORBIDDEN_TARGET = regex.compile(r"[ċpvz]|g(?!ħ)", flags=regex.IGNORECASE)


class RuleTableError(ValueError):
    pass


@dataclass(frozen=True)
class MappingRule:
    source: str
    anchor: str
    target: str
    rule_class: str
    precedence: int
    line: int = 0

    @property
    def key(self):
        return (self.source, self.anchor)

    def matches_at(self, chars, pos, consumed):
        end = pos + len(self.source)
        if end > len(chars) or not chars.startswith(self.source, pos):
            return False
        if self.anchor == BOS and pos != 0:
            return False
        if self.anchor == EOS and end != len(chars):
            return False
        return not any(consumed[pos:end])


@dataclass(frozen=True)
class RuleGroup:
    name: str
    precedence: int
    by_first: dict = field(default_factory=dict)

    def longest_match(self, chars, pos, consumed):
        for rule in self.by_first.get(chars[pos], ()):
            if rule.matches_at(chars, pos, consumed):
                return rule
        return None


class RuleTable:
    """
    Ordered character rules grouped by precedence class. Immutable once built.
    """

    def __init__(self, rules, version=None, checksum=None):
        self.rules = tuple(rules)
        self.version = version
        self.checksum = checksum
        seen = {}
        for rule in self.rules:
            if rule.key in seen:
                raise RuleTableError(
                    f"line {rule.line}: duplicate rule for {rule.source!r} ({rule.anchor}), "
                    f"first defined on line {seen[rule.key]}"
                )
            seen[rule.key] = rule.line
        self.groups = tuple(self._build_groups())

    def _build_groups(self):
        for precedence, name in enumerate(RULE_CLASSES):
            members = sorted(
                (r for r in self.rules if r.precedence == precedence),
                key=lambda r: (-len(r.source), r.line),
            )
            if not members:
                continue
            by_first = {}
            for rule in members:
                by_first.setdefault(rule.source[0], []).append(rule)
            yield RuleGroup(name, precedence, {k: tuple(v) for k, v in by_first.items()})

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


def _file_checksum(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _data_lines(path):
    version = None
    with open(path, "r", encoding="utf-8") as f:
        for number, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if line.startswith("#"):
                if line[1:].strip().startswith("version:"):
                    version = line.split(":", 1)[1].strip()
                continue
            if not line.strip():
                continue
            yield number, line.split("\t"), version


def parse_char_rule(number, fields):
    if len(fields) != 4:
        raise RuleTableError(f"line {number}: expected 4 tab-separated fields, got {len(fields)}")
    source_bw, anchor, target, rule_class = fields
    if anchor not in ANCHORS:
        raise RuleTableError(f"line {number}: unknown anchor {anchor!r}")
    if rule_class not in RULE_CLASSES:
        raise RuleTableError(f"line {number}: unknown rule class {rule_class!r}")
    source = from_buckwalter(source_bw)
    if not 1 <= len(source) <= 3:
        raise RuleTableError(f"line {number}: source {source_bw!r} must have 1 to 3 characters")
    target = "" if target == EMPTY_TARGET else target
    if FORBIDDEN_TARGET.search(target):
        raise RuleTableError(f"line {number}: target {target!r} uses a letter outside the Arabic-origin set")
    return MappingRule(source, anchor, target, rule_class, RULE_CLASSES.index(rule_class), number)


def load_char_rules(path=None):
    path = char_rules_path(path)
    rules = []
    version = None
    for number, fields, version in _data_lines(path):
        rules.append(parse_char_rule(number, fields))
    table = RuleTable(rules, version=version, checksum=_file_checksum(path))
    logger.info("Loaded %d character rules from %s (version %s)", len(table), path, version)
    return table


@lru_cache(maxsize=None)
def default_char_rules():
    return load_char_rules()


# --- morpheme rules ---

_BRACES = regex.compile(r"\{([^}]*)\}")


def expand_tag_pattern(pattern):
    """
    Expands {A,B} alternatives: "{PRON,POSS_PRON}_1S" -> ["PRON_1S", "POSS_PRON_1S"].
    """
    parts = _BRACES.split(pattern)
    # odd indices hold the alternatives captured inside braces
    choices = [p.split(",") if i % 2 else [p] for i, p in enumerate(parts)]
    return ["".join(combo) for combo in itertools.product(*choices)]


def compile_tag_pattern(pattern):
    alternatives = []
    for expanded in expand_tag_pattern(pattern):
        pieces = regex.split(r"(\*)", expanded)
        alternatives.append("".join(r"[^_:]+" if p == "*" else regex.escape(p) for p in pieces))
    return regex.compile("(?:" + "|".join(alternatives) + ")")


@dataclass(frozen=True)
class MorphemeRule:
    tag_pattern: str
    forms: tuple
    construct_only: bool
    target: str
    line: int = 0
    matcher: object = field(default=None, compare=False, repr=False)

    @property
    def is_specific(self):
        return bool(self.forms)

    @property
    def detached(self):
        return self.target.endswith(DETACH_MARKER)

    @property
    def output(self):
        return self.target[:-1] if self.detached else self.target

    def matches(self, tag, surface, construct=False):
        if self.construct_only and not construct:
            return False
        if not self.matcher.fullmatch(tag):
            return False
        if self.forms:
            return strip_diacritics(surface) in self.forms
        return True


def parse_morpheme_rule(number, fields):
    if len(fields) != 4:
        raise RuleTableError(f"line {number}: expected 4 tab-separated fields, got {len(fields)}")
    tag_pattern, source, state, target = fields
    if state not in ("any", "construct"):
        raise RuleTableError(f"line {number}: unknown state {state!r}")
    forms = ()
    if source != ANY_FORM:
        forms = tuple(strip_diacritics(from_buckwalter(form)) for form in source.split("/"))
    target = "" if target == EMPTY_TARGET else target
    return MorphemeRule(
        tag_pattern,
        forms,
        state == "construct",
        target,
        number,
        compile_tag_pattern(tag_pattern),
    )


class MorphemeRuleTable:
    """
    Morpheme rules in application order: rules restricted to a specific form
    come first, then the rules that apply to any form, each in file order.
    """

    def __init__(self, rules, version=None, checksum=None):
        self.rules = tuple(rules)
        self.version = version
        self.checksum = checksum
        self.ordered = tuple(r for r in self.rules if r.is_specific) + tuple(
            r for r in self.rules if not r.is_specific
        )

    def lookup(self, tag, surface, construct=False):
        for rule in self.ordered:
            if rule.matches(tag, surface, construct):
                return rule
        return None

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


def load_morpheme_rules(path=None):
    path = morpheme_rules_path(path)
    rules = []
    version = None
    for number, fields, version in _data_lines(path):
        rules.append(parse_morpheme_rule(number, fields))
    table = MorphemeRuleTable(rules, version=version, checksum=_file_checksum(path))
    logger.info("Loaded %d morpheme rules from %s (version %s)", len(table), path, version)
    return table


@lru_cache(maxsize=None)
def default_morpheme_rules():
    return load_morpheme_rules()


def tables_checksum(char_path=None, morpheme_path=None):
    digest = hashlib.sha256()
    for path in (char_rules_path(char_path), morpheme_rules_path(morpheme_path)):
        digest.update(path.read_bytes())
    return digest.hexdigest()
