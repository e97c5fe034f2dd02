"""Normalization, sentence splitting, tokenization and POS tagging.

Everything downstream (lexicon lookups, idiom matching, cue detection)
assumes the canonical form produced here: alef variants unified, alef
maqsura mapped to ya, diacritics and tatweel stripped, and every
non-Arabic character dropped. Whitespace and the sentence delimiter set
survive normalization so that sentence splitting still works afterwards.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Mapping, Protocol, Sequence

from .errors import ParseError, TaggerFailure

# Idiom mask tokens are the only non-Arabic surfaces allowed in a Sentence.
PO_MASK = "PO_Phrase"
NG_MASK = "NG_Phrase"
MASK_TOKENS = frozenset({PO_MASK, NG_MASK})

# alef variants (hamza above/below, madda, wasla) -> bare alef; maqsura -> ya.
# Ta marbuta is deliberately left alone: folding it into ha would merge
# distinct lexicon surfaces.
_CHAR_MAP = str.maketrans({
    "أ": "ا",  # أ
    "إ": "ا",  # إ
    "آ": "ا",  # آ
    "ٱ": "ا",  # ٱ
    "ى": "ي",  # ى -> ي
})

# Harakat, Quranic marks, superscript alef and tatweel: deleted in place so
# that they never split a word.
_DIACRITICS_RE = re.compile(r"[ً-ٰٟۖ-ۭـ]")

_ARABIC_LETTERS = "ء-غف-ي"
_DELIMITERS = ".!?؟؛"  # . ! ? ؟ ؛  (newline counts as well)

# Anything that is not an Arabic letter, a delimiter or whitespace becomes a
# separator; runs collapse to a single space below.
_DROP_RE = re.compile(f"[^{_ARABIC_LETTERS}{re.escape(_DELIMITERS)}\\s]+")
_SPACE_RE = re.compile(r"[^\S\n]+")
_NEWLINE_RE = re.compile(r"\s*\n\s*")
_SENTENCE_RE = re.compile(f"[{re.escape(_DELIMITERS)}\n]")
_TOKEN_RE = re.compile(f"{NG_MASK}|{PO_MASK}|[{_ARABIC_LETTERS}]+")


class PosTag(Enum):
    JJ = "JJ"
    NN = "NN"
    VB = "VB"
    OTHER = "OTHER"


@dataclass(frozen=True)
class Token:
    surface: str
    position: int  # 1-based within its sentence
    tag: PosTag = PosTag.OTHER


@dataclass
class Sentence:
    tokens: list[Token] = field(default_factory=list)

    @property
    def word_count(self) -> int:
        return len(self.tokens)

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]


def normalize_text(raw: str) -> str:
    """Map Arabic text to its canonical form.

    Idempotent; total over arbitrary unicode input. Keeps Arabic letters,
    whitespace and sentence delimiters, drops everything else.
    """
    text = raw.translate(_CHAR_MAP)
    text = _DIACRITICS_RE.sub("", text)
    text = _DROP_RE.sub(" ", text)
    text = _SPACE_RE.sub(" ", text)
    text = _NEWLINE_RE.sub("\n", text)
    return text.strip()


def split_sentences(text: str) -> list[str]:
    """Split normalized text on { . ! ? ؟ ؛ newline }, dropping empties."""
    return [part for part in (p.strip() for p in _SENTENCE_RE.split(text)) if part]


def tokenize(sentence: str) -> Sentence:
    """Split a delimiter-free sentence into positioned tokens.

    Residual punctuation is discarded; the idiom mask tokens pass through
    unchanged.
    """
    words = _TOKEN_RE.findall(sentence)
    return Sentence([Token(w, i + 1) for i, w in enumerate(words)])


def remove_stopwords(s: Sentence, stoplist: Iterable[str]) -> Sentence:
    """Drop stopword tokens and renumber. Mask tokens are never removed."""
    stop = set(stoplist)
    kept = [t for t in s.tokens if t.surface in MASK_TOKENS or t.surface not in stop]
    return Sentence([replace(t, position=i + 1) for i, t in enumerate(kept)])


class PosTagger(Protocol):
    def tag(self, words: Sequence[str]) -> Sequence[PosTag]: ...


class TableTagger:
    """Word-to-tag lookup with an OTHER fallback for unknown words.

    The table is immutable after construction, so a single instance is safe
    to share across threads.
    """

    def __init__(self, table: Mapping[str, PosTag] | None = None):
        self._table = dict(table or {})

    @classmethod
    def from_file(cls, path) -> "TableTagger":
        """Load a TSV tag table: ``word<TAB>tag``, tag in {JJ, NN, VB, OTHER}."""
        return cls(load_tag_table(path))

    def tag(self, words: Sequence[str]) -> list[PosTag]:
        return [self._table.get(w, PosTag.OTHER) for w in words]


def load_tag_table(path) -> dict[str, PosTag]:
    table: dict[str, PosTag] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(path, line_no, "expected 2 tab-separated columns")
            word, tag = normalize_text(parts[0]), parts[1].strip()
            try:
                table[word] = PosTag(tag)
            except ValueError:
                raise ParseError(path, line_no, f"unknown tag {tag!r}") from None
    return table


def default_tagger(table: Mapping[str, PosTag] | None = None,
                   lexicon=None,
                   lexicon_tag: PosTag = PosTag.JJ) -> TableTagger:
    """Build the default tagger: explicit table entries win, any remaining
    sentiment-lexicon word defaults to ``lexicon_tag``.
    """
    merged: dict[str, PosTag] = {}
    if lexicon is not None:
        for word in lexicon.words():
            merged[word] = lexicon_tag
    if table:
        merged.update(table)
    return TableTagger(merged)


def pos_tag(s: Sentence, tagger: PosTagger) -> Sentence:
    """Assign one tag per token via the given tagger.

    Raises TaggerFailure when a pluggable tagger misbehaves and returns a
    tag count different from the token count.
    """
    tags = list(tagger.tag(s.surfaces()))
    if len(tags) != len(s.tokens):
        raise TaggerFailure(
            f"tagger returned {len(tags)} tags for {len(s.tokens)} tokens")
    return Sentence([replace(t, tag=tag) for t, tag in zip(s.tokens, tags)])


def load_stopwords(path) -> frozenset[str]:
    """One normalized word per line; ``#`` starts a comment."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.split("#", 1)[0].strip()
            if word:
                words.add(normalize_text(word))
    words.discard("")
    return frozenset(words)
