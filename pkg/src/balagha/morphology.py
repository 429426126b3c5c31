# -*- coding: utf-8 -*-
"""Tokenizer and rule-based morpheme counter for Arabic text.

Counting unit is the morpheme, not the word: attached conjunctions,
prepositions, the future prefix and enclitic pronouns each count as one,
while the definite article al- marks definiteness and is never counted.
The segmenter is assistive; a document-level manual count, when present,
is authoritative for scoring (see scoring.effective_morphemes).

Clitic matching works on the diacritic-stripped letter skeleton and is
deliberately conservative: a proclitic is only stripped when the context
supports it (e.g. ب/ل/ك before the definite article, س before an
imperfect-prefix letter) and a stem of at least two letters must remain.
Words that inherently begin with clitic-shaped letters are handled by an
exception lexicon that can be extended from a config file.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

ARABIC_WORD = "arabic_word"
NUMBER = "number"
LATIN = "latin"
OTHER = "other"

PROCLITIC = "proclitic"
DEFINITE_ARTICLE = "definite_article"
STEM = "stem"
ENCLITIC_PRONOUN = "enclitic_pronoun"

RULE_BASED = "rule_based"
MANUAL_OVERRIDE = "manual_override"

CONJUNCTIONS = "وف"
FUTURE_PREFIX = "س"
PREPOSITIONS = "بلك"
IMPERFECT_PREFIXES = "يتنأ"
ARTICLE = "ال"

# Longest match first; at most one enclitic pronoun per word.
ENCLITICS = ("هما", "كما", "ها", "نا", "كم", "كن", "هم", "هن", "ي", "ك", "ه")

_MIN_STEM_LETTERS = 2


class LexiconError(Exception):
    """Raised for malformed exception-lexicon entries."""


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    kind: str


@dataclass(frozen=True)
class Segment:
    text: str
    kind: str
    counted: bool


@dataclass(frozen=True)
class MorphemeBreakdown:
    token: Token
    segments: tuple[Segment, ...]

    @property
    def token_count(self) -> int:
        return sum(1 for s in self.segments if s.counted)


@dataclass(frozen=True)
class MorphemeCount:
    total: int
    breakdowns: tuple[MorphemeBreakdown, ...]
    source: str = RULE_BASED


def _is_arabic_letter(ch: str) -> bool:
    o = ord(ch)
    return (
        0x0621 <= o <= 0x063A
        or 0x0641 <= o <= 0x064A
        or o in (0x0620, 0x066E, 0x066F, 0x06D5, 0x06EE, 0x06EF, 0x06FF)
        or 0x0671 <= o <= 0x06D3
        or 0x06FA <= o <= 0x06FC
    )


def _is_diacritic(ch: str) -> bool:
    # Harakat, tanween, superscript alef, Quranic marks; tatweel is kept
    # in the surface but ignored for matching, same as a diacritic.
    o = ord(ch)
    return (
        0x064B <= o <= 0x065F
        or o in (0x0640, 0x0670)
        or 0x06D6 <= o <= 0x06DC
        or 0x06DF <= o <= 0x06E4
        or o in (0x06E7, 0x06E8)
        or 0x06EA <= o <= 0x06ED
    )


def _is_digit(ch: str) -> bool:
    o = ord(ch)
    return ch.isascii() and ch.isdigit() or 0x0660 <= o <= 0x0669 or 0x06F0 <= o <= 0x06F9


def _is_latin(ch: str) -> bool:
    return ch.isascii() and ch.isalpha()


def tokenize(text: str) -> list[Token]:
    """Split text into word/number/latin/other tokens.

    Whitespace and punctuation separate tokens and are never emitted.
    A run of digits forms a single number token.
    """
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if _is_arabic_letter(ch):
            j = i + 1
            while j < n and (_is_arabic_letter(text[j]) or _is_diacritic(text[j])):
                j += 1
            tokens.append(Token(text[i:j], i, j, ARABIC_WORD))
            i = j
        elif _is_digit(ch):
            j = i + 1
            while j < n and _is_digit(text[j]):
                j += 1
            tokens.append(Token(text[i:j], i, j, NUMBER))
            i = j
        elif _is_latin(ch):
            j = i + 1
            while j < n and _is_latin(text[j]):
                j += 1
            tokens.append(Token(text[i:j], i, j, LATIN))
            i = j
        elif ch.isspace() or _is_separator(ch):
            i += 1
        else:
            j = i + 1
            while j < n and not (
                text[j].isspace()
                or _is_separator(text[j])
                or _is_arabic_letter(text[j])
                or _is_digit(text[j])
                or _is_latin(text[j])
            ):
                j += 1
            tokens.append(Token(text[i:j], i, j, OTHER))
            i = j
    return tokens


def _is_separator(ch: str) -> bool:
    if _is_diacritic(ch):
        return True  # stray mark outside a word
    return unicodedata.category(ch)[0] in ("P", "S", "Z", "C")


def _skeleton(surface: str) -> tuple[str, list[int]]:
    """Diacritic-free letters of an Arabic word plus their surface offsets.

    Alef wasla is folded to plain alef so Quranic spellings of the
    definite article still match.
    """
    letters = []
    positions = []
    for idx, ch in enumerate(surface):
        if _is_arabic_letter(ch):
            letters.append("ا" if ch == "ٱ" else ch)
            positions.append(idx)
    return "".join(letters), positions


class Lexicon:
    """Exception lexicon: diacritic-stripped surface -> forced segmentation.

    File format is one entry per line, `surface<TAB>seg+seg+...`, where
    segment kinds are inferred (leading single-letter clitics, the
    article, a trailing enclitic pronoun, one stem).
    """

    def __init__(self, entries: dict[str, tuple[Segment, ...]] | None = None):
        self._entries = dict(entries or {})

    @classmethod
    def from_lines(cls, lines) -> "Lexicon":
        entries = {}
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "\t" not in line:
                raise LexiconError(f"line {lineno}: expected surface<TAB>segmentation")
            surface, seg_text = line.split("\t", 1)
            key, _ = _skeleton(surface)
            parts = [p for p in seg_text.strip().split("+") if p]
            if "".join(parts) != key:
                raise LexiconError(
                    f"line {lineno}: segments do not concatenate to {surface!r}"
                )
            entries[key] = _infer_segment_kinds(parts, lineno)
        return cls(entries)

    @classmethod
    def from_file(cls, path: str | Path) -> "Lexicon":
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh)

    def merged_with(self, other: "Lexicon") -> "Lexicon":
        entries = dict(self._entries)
        entries.update(other._entries)
        return Lexicon(entries)

    def lookup(self, skeleton_key: str):
        return self._entries.get(skeleton_key)

    def __len__(self):
        return len(self._entries)


def _infer_segment_kinds(parts: list[str], lineno: int) -> tuple[Segment, ...]:
    segs: list[Segment] = []
    rest = list(parts)
    clitic_letters = CONJUNCTIONS + FUTURE_PREFIX + PREPOSITIONS
    while len(rest) > 1 and rest[0] in ("ال",) + tuple(clitic_letters):
        head = rest.pop(0)
        if head == "ال":
            segs.append(Segment(head, DEFINITE_ARTICLE, False))
        else:
            segs.append(Segment(head, PROCLITIC, True))
    enclitic = None
    if len(rest) > 1 and rest[-1] in ENCLITICS:
        enclitic = rest.pop()
    if len(rest) != 1:
        raise LexiconError(f"line {lineno}: exactly one stem segment required")
    segs.append(Segment(rest[0], STEM, True))
    if enclitic is not None:
        segs.append(Segment(enclitic, ENCLITIC_PRONOUN, True))
    return tuple(segs)


# Words the greedy matcher would mis-split: relative pronouns and other
# fused forms kept whole, common stems that begin with clitic-shaped
# letters, and preposition+pronoun fusions the length guard would block.
_DEFAULT_LEXICON_LINES = """\
التي\tالتي
الذي\tالذي
الذين\tالذين
اللذان\tاللذان
اللتان\tاللتان
اللاتي\tاللاتي
اللواتي\tاللواتي
الله\tالله
اللهم\tاللهم
ولد\tولد
وقت\tوقت
وجه\tوجه
وطن\tوطن
وضع\tوضع
وزن\tوزن
ورد\tورد
وعد\tوعد
وسط\tوسط
وحدة\tوحدة
سنة\tسنة
سنوات\tسنوات
سيأتي\tس+يأتي
ستة\tستة
ستين\tستين
سيارة\tسيارة
سيد\tسيد
سيدة\tسيدة
سينما\tسينما
ملك\tملك
ذلك\tذلك
تلك\tتلك
هناك\tهناك
هنالك\tهنالك
له\tل+ه
لها\tل+ها
لهم\tل+هم
لنا\tل+نا
لكم\tل+كم
لي\tل+ي
به\tب+ه
بها\tب+ها
بهم\tب+هم
بنا\tب+نا
بكم\tب+كم
بي\tب+ي
بك\tب+ك
لك\tل+ك
""".splitlines()


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    return Lexicon.from_lines(_DEFAULT_LEXICON_LINES)


def _rule_split(skeleton: str) -> list[tuple[int, int, str]]:
    """Split points on the skeleton: (start, end, segment_kind)."""
    n = len(skeleton)
    cursor = 0
    prefix: list[tuple[int, int, str]] = []

    def remaining_after(k: int) -> int:
        return n - k

    # [conjunction][future][preposition][article], each slot at most once
    if cursor < n and skeleton[cursor] in CONJUNCTIONS:
        if remaining_after(cursor + 1) >= _MIN_STEM_LETTERS:
            prefix.append((cursor, cursor + 1, PROCLITIC))
            cursor += 1
    if (
        cursor < n
        and skeleton[cursor] == FUTURE_PREFIX
        and cursor + 1 < n
        and skeleton[cursor + 1] in IMPERFECT_PREFIXES
        and remaining_after(cursor + 1) >= _MIN_STEM_LETTERS
    ):
        prefix.append((cursor, cursor + 1, PROCLITIC))
        cursor += 1
    stripped_lam = False
    if cursor < n and skeleton[cursor] in PREPOSITIONS:
        nxt = skeleton[cursor + 1 : cursor + 3]
        lam_elision = skeleton[cursor] == "ل" and nxt[:1] == "ل"
        if (nxt == ARTICLE or lam_elision) and remaining_after(cursor + 1) >= _MIN_STEM_LETTERS:
            prefix.append((cursor, cursor + 1, PROCLITIC))
            cursor += 1
            stripped_lam = lam_elision
    if stripped_lam:
        # li- + al- fuses to a doubled lam; the second lam is the article
        if remaining_after(cursor + 1) >= _MIN_STEM_LETTERS:
            prefix.append((cursor, cursor + 1, DEFINITE_ARTICLE))
            cursor += 1
    elif skeleton[cursor : cursor + 2] == ARTICLE:
        if remaining_after(cursor + 2) >= _MIN_STEM_LETTERS:
            prefix.append((cursor, cursor + 2, DEFINITE_ARTICLE))
            cursor += 2

    stem_end = n
    suffix: list[tuple[int, int, str]] = []
    for enc in ENCLITICS:
        if (
            skeleton.endswith(enc, cursor)
            and (n - len(enc)) - cursor >= _MIN_STEM_LETTERS
            and skeleton[cursor : n - len(enc)] != ARTICLE  # never leave a bare article as the stem
        ):
            stem_end = n - len(enc)
            suffix.append((stem_end, n, ENCLITIC_PRONOUN))
            break

    return prefix + [(cursor, stem_end, STEM)] + suffix


def segment_token(token: Token, lexicon: Lexicon | None = None) -> MorphemeBreakdown:
    """Segment one token; non-Arabic tokens are a single counted stem."""
    if token.kind != ARABIC_WORD:
        return MorphemeBreakdown(token, (Segment(token.surface, STEM, True),))

    lexicon = lexicon if lexicon is not None else default_lexicon()
    skeleton, positions = _skeleton(token.surface)
    if not skeleton:
        return MorphemeBreakdown(token, (Segment(token.surface, STEM, True),))

    forced = lexicon.lookup(skeleton)
    if forced is not None:
        bounds = []
        offset = 0
        for seg in forced:
            bounds.append((offset, offset + len(seg.text), seg.kind, seg.counted))
            offset += len(seg.text)
    else:
        bounds = [
            (s, e, kind, kind != DEFINITE_ARTICLE) for s, e, kind in _rule_split(skeleton)
        ]

    # Map skeleton letter spans back onto the surface; each letter keeps
    # the diacritics that follow it.
    segments = []
    for s, e, kind, counted in bounds:
        surf_start = positions[s]
        surf_end = positions[e] if e < len(positions) else len(token.surface)
        segments.append(Segment(token.surface[surf_start:surf_end], kind, counted))
    return MorphemeBreakdown(token, tuple(segments))


def count_morphemes(text: str, lexicon: Lexicon | None = None) -> MorphemeCount:
    """Rule-based morpheme count with a per-token trace."""
    breakdowns = tuple(segment_token(t, lexicon) for t in tokenize(text))
    return MorphemeCount(
        total=sum(b.token_count for b in breakdowns),
        breakdowns=breakdowns,
        source=RULE_BASED,
    )
