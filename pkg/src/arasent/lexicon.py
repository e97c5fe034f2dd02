"""Sentiment word lexicon and idiom phrase lexicon.

The word lexicon follows the five-column layout (word, English gloss,
Buckwalter transliteration, polarity, term frequency) stored as UTF-8 TSV
with one header line. Words confirmed to carry no sentiment live in a
prevent list persisted as a one-word-per-line sidecar next to the lexicon
file. A loaded lexicon is treated as immutable by readers; growing
operations copy first.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator

from .errors import DuplicatePhrase, DuplicateWord, ParseError
from .preprocess import normalize_text, split_sentences, tokenize

LEXICON_HEADER = "word\tgloss\ttranslit\tpolarity\ttf"


class Polarity(Enum):
    PO = "PO"
    NG = "NG"
    NU = "NU"

    def flipped(self) -> "Polarity":
        if self is Polarity.PO:
            return Polarity.NG
        if self is Polarity.NG:
            return Polarity.PO
        return Polarity.NU


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    polarity: Polarity
    gloss: str = ""
    translit: str = ""
    tf: int = 0

    def __post_init__(self):
        if self.tf < 0:
            raise ValueError(f"negative term frequency for {self.word!r}")


class SentimentLexicon:
    """Map of normalized word -> entry, plus the disjoint prevent list."""

    def __init__(self, entries: Iterable[LexiconEntry] = (),
                 prevent: Iterable[str] = ()):
        self._entries: dict[str, LexiconEntry] = {}
        self._prevent: set[str] = set()
        for entry in entries:
            self.add(entry)
        for word in prevent:
            self.add_prevent(word)

    def add(self, entry: LexiconEntry) -> None:
        word = normalize_text(entry.word)
        if not word:
            raise ValueError("lexicon word is empty after normalization")
        if word != entry.word:
            entry = replace(entry, word=word)
        if word in self._entries:
            raise DuplicateWord(word)
        if word in self._prevent:
            raise DuplicateWord(f"{word} is on the prevent list")
        self._entries[word] = entry

    def add_prevent(self, word: str) -> None:
        w = normalize_text(word)
        if not w:
            raise ValueError("prevent-list word is empty after normalization")
        if w in self._entries:
            raise DuplicateWord(f"{w} is already a lexicon entry")
        self._prevent.add(w)

    def lookup(self, word: str) -> LexiconEntry | None:
        """Entry for the normalized form of ``word``, or None."""
        return self._entries.get(normalize_text(word))

    def words(self) -> list[str]:
        return list(self._entries)

    @property
    def entries(self) -> dict[str, LexiconEntry]:
        return dict(self._entries)

    @property
    def prevent_list(self) -> frozenset[str]:
        return frozenset(self._prevent)

    def polarity_counts(self) -> dict[Polarity, int]:
        counts = {p: 0 for p in Polarity}
        for entry in self._entries.values():
            counts[entry.polarity] += 1
        return counts

    def copy(self) -> "SentimentLexicon":
        fresh = SentimentLexicon()
        fresh._entries = dict(self._entries)
        fresh._prevent = set(self._prevent)
        return fresh

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, word: str) -> bool:
        return normalize_text(word) in self._entries

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self._entries.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SentimentLexicon):
            return NotImplemented
        return self._entries == other._entries and self._prevent == other._prevent


def _prevent_path(path) -> Path:
    return Path(path).with_suffix(".prevent")


def load_sentiment_lexicon(path) -> SentimentLexicon:
    """Load a five-column TSV lexicon plus its prevent-list sidecar."""
    lex = SentimentLexicon()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if line_no == 1:
                if line != LEXICON_HEADER:
                    raise ParseError(path, 1, "missing lexicon header line")
                continue
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 5:
                raise ParseError(path, line_no,
                                 f"expected 5 columns, got {len(parts)}")
            word, gloss, translit, pol, tf = parts
            try:
                polarity = Polarity(pol.strip())
            except ValueError:
                raise ParseError(path, line_no,
                                 f"polarity must be PO, NG or NU, got {pol!r}") from None
            try:
                freq = int(tf)
                if freq < 0:
                    raise ValueError
            except ValueError:
                raise ParseError(path, line_no,
                                 f"term frequency must be a non-negative integer, got {tf!r}") from None
            try:
                lex.add(LexiconEntry(word, polarity, gloss, translit, freq))
            except ValueError as exc:
                raise ParseError(path, line_no, str(exc)) from None
    sidecar = _prevent_path(path)
    if sidecar.exists():
        with open(sidecar, encoding="utf-8") as fh:
            for line in fh:
                word = line.split("#", 1)[0].strip()
                if word:
                    lex.add_prevent(word)
    return lex


def save_sentiment_lexicon(lex: SentimentLexicon, path) -> None:
    """Write the lexicon TSV and its prevent-list sidecar.

    Tabs and newlines inside gloss/translit are replaced by spaces so the
    row stays parseable; load(save(lex)) is structurally equal otherwise.
    """
    def clean(text: str) -> str:
        return text.replace("\t", " ").replace("\n", " ")

    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(LEXICON_HEADER + "\n")
        for entry in lex:
            fh.write(f"{entry.word}\t{clean(entry.gloss)}\t{clean(entry.translit)}"
                     f"\t{entry.polarity.value}\t{entry.tf}\n")
    with open(_prevent_path(path), "w", encoding="utf-8", newline="\n") as fh:
        for word in sorted(lex.prevent_list):
            fh.write(word + "\n")


@dataclass(frozen=True)
class IdiomEntry:
    phrase: tuple[str, ...]
    polarity: Polarity
    gloss: str = ""

    def __post_init__(self):
        if len(self.phrase) < 2:
            raise ValueError("idiom phrases need at least 2 tokens")
        if self.polarity is Polarity.NU:
            raise ValueError("idiom polarity must be PO or NG")


class IdiomLexicon:
    """Idiom phrases indexed by first token for multi-token matching."""

    def __init__(self, entries: Iterable[IdiomEntry] = ()):
        self._entries: list[IdiomEntry] = []
        self._by_first: dict[str, list[IdiomEntry]] = {}
        self._seen: set[tuple[str, ...]] = set()
        for entry in entries:
            self.add(entry)

    def add(self, entry: IdiomEntry) -> None:
        if entry.phrase in self._seen:
            raise DuplicatePhrase(" ".join(entry.phrase))
        self._seen.add(entry.phrase)
        self._entries.append(entry)
        bucket = self._by_first.setdefault(entry.phrase[0], [])
        bucket.append(entry)
        bucket.sort(key=lambda e: -len(e.phrase))

    def match_at(self, surfaces: list[str], i: int) -> IdiomEntry | None:
        """Longest idiom whose tokens equal surfaces[i:i+len], if any."""
        for entry in self._by_first.get(surfaces[i], ()):
            n = len(entry.phrase)
            if tuple(surfaces[i:i + n]) == entry.phrase:
                return entry
        return None

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[IdiomEntry]:
        return iter(self._entries)


def load_idiom_lexicon(path) -> IdiomLexicon:
    """Load a 2-3 column TSV: ``phrase<TAB>polarity[<TAB>gloss]``."""
    idioms = IdiomLexicon()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) not in (2, 3):
                raise ParseError(path, line_no,
                                 f"expected 2 or 3 columns, got {len(parts)}")
            phrase = tuple(tokenize(normalize_text(parts[0])).surfaces())
            try:
                polarity = Polarity(parts[1].strip())
            except ValueError:
                raise ParseError(path, line_no,
                                 f"polarity must be PO or NG, got {parts[1]!r}") from None
            gloss = parts[2] if len(parts) == 3 else ""
            try:
                idioms.add(IdiomEntry(phrase, polarity, gloss))
            except ValueError as exc:
                raise ParseError(path, line_no, str(exc)) from None
    return idioms


def update_term_frequencies(lex: SentimentLexicon, corpus) -> SentimentLexicon:
    """Recount every entry's tf over the normalized, tokenized corpus.

    Entries absent from the corpus get tf 0. Returns a new lexicon; the
    input is untouched.
    """
    counts = count_corpus_tokens(corpus)
    fresh = [replace(e, tf=counts.get(word, 0)) for word, e in lex.entries.items()]
    return SentimentLexicon(fresh, lex.prevent_list)


def count_corpus_tokens(corpus) -> Counter:
    """Token occurrence counts over normalized corpus topics."""
    counts: Counter = Counter()
    for topic in corpus:
        for sent in split_sentences(normalize_text(topic.text)):
            counts.update(tokenize(sent).surfaces())
    return counts
