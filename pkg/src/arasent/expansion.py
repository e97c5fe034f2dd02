"""Automatic lexicon expansion with three-case orientation detection.

Candidates are the distinct adjective/noun/verb tokens not yet known to the
lexicon. Each is looked up through a synset provider; synonyms vote with
their lexicon polarity, antonyms vote flipped. A unanimous vote adopts the
word immediately (so later candidates see it as evidence), a split vote is
a conflict of synonyms and changes nothing, and an empty answer routes the
word to human review or, non-interactively, to a pending file.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable, Mapping, Protocol

from .errors import InvalidPolarity, ParseError, ProviderError
from .lexicon import (
    LexiconEntry,
    Polarity,
    SentimentLexicon,
    count_corpus_tokens,
)
from .preprocess import (
    MASK_TOKENS,
    PosTag,
    Sentence,
    TableTagger,
    normalize_text,
    pos_tag,
    remove_stopwords,
    split_sentences,
    tokenize,
)

CANDIDATE_TAGS = frozenset({PosTag.JJ, PosTag.NN, PosTag.VB})

PENDING = "PENDING"
ACCEPTED = "ACCEPTED"
REJECTED = "REJECTED"


@dataclass(frozen=True)
class SynsetResult:
    """Provider answer: optional translation plus (word, gloss) lists."""

    translation: str | None = None
    synonyms: tuple[tuple[str, str | None], ...] = ()
    antonyms: tuple[tuple[str, str | None], ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.translation is None and not self.synonyms


class SynsetProvider(Protocol):
    def fetch(self, word: str) -> SynsetResult: ...


class FixtureProvider:
    """Offline provider backed by a TSV table.

    Row format: ``word<TAB>translation<TAB>syn1,syn2,...<TAB>ant1,ant2,...``
    with empty fields allowed. Words absent from the table answer with an
    empty result (the out-of-vocabulary case), never an error.
    """

    def __init__(self, table: Mapping[str, SynsetResult] | None = None):
        self._table = dict(table or {})

    @classmethod
    def from_file(cls, path) -> "FixtureProvider":
        table: dict[str, SynsetResult] = {}
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                parts = line.split("\t")
                if not 1 <= len(parts) <= 4:
                    raise ParseError(path, line_no,
                                     f"expected 1-4 columns, got {len(parts)}")
                parts += [""] * (4 - len(parts))
                word = normalize_text(parts[0])
                if not word:
                    raise ParseError(path, line_no, "empty word")
                if word in table:
                    raise ParseError(path, line_no, f"duplicate word {word!r}")
                table[word] = SynsetResult(
                    translation=parts[1].strip() or None,
                    synonyms=_parse_word_list(parts[2]),
                    antonyms=_parse_word_list(parts[3]),
                )
        return cls(table)

    def fetch(self, word: str) -> SynsetResult:
        return self._table.get(normalize_text(word), SynsetResult())


def _parse_word_list(text: str) -> tuple[tuple[str, str | None], ...]:
    out = []
    for chunk in text.split(","):
        w = normalize_text(chunk)
        if w:
            out.append((w, None))
    return tuple(out)


class CachingProvider:
    """File-backed cache around a live provider.

    Answers already in the cache file never hit the inner provider, so an
    online thesaurus client can be plugged in without refetching across
    runs. Cache rows use the fixture TSV format (synonym glosses are not
    persisted).
    """

    def __init__(self, inner: SynsetProvider, cache_path):
        self._inner = inner
        self._path = Path(cache_path)
        self._cache: dict[str, SynsetResult] = {}
        if self._path.exists():
            self._cache = dict(FixtureProvider.from_file(self._path)._table)

    def fetch(self, word: str) -> SynsetResult:
        key = normalize_text(word)
        if key in self._cache:
            return self._cache[key]
        result = self._inner.fetch(key)
        self._cache[key] = result
        syns = ",".join(w for w, _ in result.synonyms)
        ants = ",".join(w for w, _ in result.antonyms)
        with open(self._path, "a", encoding="utf-8", newline="\n") as fh:
            fh.write(f"{key}\t{result.translation or ''}\t{syns}\t{ants}\n")
        return result


@dataclass(frozen=True)
class Candidate:
    word: str
    tag: PosTag
    source_topic_id: str = ""


class Outcome(Enum):
    ADOPT = "ADOPT"
    COS = "COS"
    OOV = "OOV"


@dataclass
class OrientationDecision:
    outcome: Outcome
    polarity: Polarity | None = None
    evidence: list[tuple[str, Polarity]] = field(default_factory=list)


@dataclass
class ReviewItem:
    word: str
    suggested: Polarity | None = None
    status: str = PENDING
    polarity: Polarity | None = None


@dataclass
class ExpansionReport:
    adopted: list[str] = field(default_factory=list)
    cos: list[str] = field(default_factory=list)
    oov_pending: list[str] = field(default_factory=list)
    oov_accepted: list[str] = field(default_factory=list)
    oov_rejected: list[str] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        return {
            "adopted": len(self.adopted),
            "cos": len(self.cos),
            "oov_pending": len(self.oov_pending),
            "oov_accepted": len(self.oov_accepted),
            "oov_rejected": len(self.oov_rejected),
            "errors": len(self.errors),
        }


def filter_candidates(tagged: Iterable[Sentence], lex: SentimentLexicon,
                      topic_id: str = "") -> list[Candidate]:
    """Distinct JJ/NN/VB tokens unknown to both the lexicon and the prevent
    list, in first-occurrence order.
    """
    seen: set[str] = set()
    out = []
    for s in tagged:
        for tok in s.tokens:
            if tok.tag not in CANDIDATE_TAGS:
                continue
            word = tok.surface
            if word in MASK_TOKENS or word in seen:
                continue
            if lex.lookup(word) is not None or word in lex.prevent_list:
                continue
            seen.add(word)
            out.append(Candidate(word, tok.tag, topic_id))
    return out


def detect_orientation(word: str, syn: SynsetResult,
                       lex: SentimentLexicon) -> OrientationDecision:
    """Classify a candidate by its synonym/antonym votes.

    Synonyms vote with their lexicon polarity, antonyms vote flipped;
    neutral or unknown words abstain. No translation and no synonyms is
    out-of-vocabulary outright; so is an all-abstain vote.
    """
    if syn.is_empty:
        return OrientationDecision(Outcome.OOV)
    evidence: list[tuple[str, Polarity]] = []
    for w, _ in syn.synonyms:
        entry = lex.lookup(w)
        if entry is not None and entry.polarity is not Polarity.NU:
            evidence.append((w, entry.polarity))
    for w, _ in syn.antonyms:
        entry = lex.lookup(w)
        if entry is not None and entry.polarity is not Polarity.NU:
            evidence.append((w, entry.polarity.flipped()))
    if not evidence:
        return OrientationDecision(Outcome.OOV)
    polarities = {p for _, p in evidence}
    if len(polarities) == 1:
        return OrientationDecision(Outcome.ADOPT, polarities.pop(), evidence)
    return OrientationDecision(Outcome.COS, None, evidence)


def resolve_oov(lex: SentimentLexicon, item: ReviewItem, answer: str,
                tf: int = 0) -> SentimentLexicon:
    """Apply an operator's verdict on a pending review item.

    ``p``/``po`` and ``n``/``ng`` insert the word with that polarity and an
    empty gloss; ``r``/``reject`` appends it to the prevent list. Returns a
    new lexicon and updates the item's status in place.
    """
    if item.status != PENDING:
        raise ValueError(f"review item {item.word!r} is already {item.status}")
    verdict = answer.strip().lower()
    fresh = lex.copy()
    if verdict in ("p", "po"):
        polarity = Polarity.PO
    elif verdict in ("n", "ng"):
        polarity = Polarity.NG
    elif verdict in ("r", "reject"):
        fresh.add_prevent(item.word)
        item.status = REJECTED
        return fresh
    else:
        raise InvalidPolarity(f"expected p, n or r, got {answer!r}")
    fresh.add(LexiconEntry(item.word, polarity, tf=tf))
    item.status = ACCEPTED
    item.polarity = polarity
    return fresh


def _load_pending_words(path) -> set[str]:
    words = set()
    p = Path(path)
    if not p.exists():
        return words
    with open(p, encoding="utf-8") as fh:
        for line in fh:
            parts = line.rstrip("\n").split("\t")
            if parts and parts[0].strip():
                words.add(parts[0].strip())
    return words


def _append_pending(path, item: ReviewItem) -> None:
    suggested = item.suggested.value if item.suggested else ""
    with open(path, "a", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{item.word}\t{suggested}\t{item.status}\n")


def expand_lexicon(corpus, lex: SentimentLexicon, provider: SynsetProvider,
                   mode: str = "batch", *,
                   tagger=None,
                   stopwords: Iterable[str] = frozenset(),
                   pending_path=None,
                   ask: Callable[[ReviewItem, SynsetResult], str] | None = None,
                   ) -> tuple[SentimentLexicon, ExpansionReport]:
    """Run the four expansion steps over a corpus.

    Adopted words are inserted immediately, so later candidates can use
    them as evidence; processing order is first occurrence in the corpus.
    Provider errors skip the candidate (they are transient, not evidence
    that the word carries no sentiment). In batch mode, out-of-vocabulary
    words go to ``pending_path``; in interactive mode the ``ask`` callback
    supplies the operator's answer (``s`` skips to pending).
    """
    if mode not in ("batch", "interactive"):
        raise ValueError(f"mode must be 'batch' or 'interactive', got {mode!r}")
    if mode == "interactive" and ask is None:
        raise ValueError("interactive mode needs an ask callback")
    tagger = tagger if tagger is not None else TableTagger()
    stop = set(stopwords)

    working = lex.copy()
    report = ExpansionReport()
    tf_counts = count_corpus_tokens(corpus)
    already_pending = _load_pending_words(pending_path) if pending_path else set()

    candidates: list[Candidate] = []
    seen: set[str] = set()
    for topic in corpus:
        sentences = []
        for raw_sentence in split_sentences(normalize_text(topic.text)):
            s = tokenize(raw_sentence)
            if stop:
                s = remove_stopwords(s, stop)
            sentences.append(pos_tag(s, tagger))
        for cand in filter_candidates(sentences, working, topic_id=topic.id):
            if cand.word not in seen:
                seen.add(cand.word)
                candidates.append(cand)

    def to_pending(item: ReviewItem) -> None:
        report.oov_pending.append(item.word)
        if pending_path and item.word not in already_pending:
            _append_pending(pending_path, item)
            already_pending.add(item.word)

    for cand in candidates:
        if working.lookup(cand.word) is not None or cand.word in working.prevent_list:
            continue
        try:
            syn = provider.fetch(cand.word)
        except ProviderError as exc:
            report.errors.append((cand.word, str(exc)))
            continue
        decision = detect_orientation(cand.word, syn, working)
        if decision.outcome is Outcome.ADOPT:
            working.add(LexiconEntry(cand.word, decision.polarity,
                                     gloss=syn.translation or "",
                                     tf=tf_counts.get(cand.word, 0)))
            report.adopted.append(cand.word)
        elif decision.outcome is Outcome.COS:
            report.cos.append(cand.word)
        else:
            item = ReviewItem(cand.word)
            if mode == "batch":
                to_pending(item)
                continue
            answer = ask(item, syn)
            if answer.strip().lower() in ("s", "skip"):
                to_pending(item)
                continue
            working = resolve_oov(working, item, answer,
                                  tf=tf_counts.get(cand.word, 0))
            if item.status == ACCEPTED:
                report.oov_accepted.append(cand.word)
            else:
                report.oov_rejected.append(cand.word)

    return working, report
