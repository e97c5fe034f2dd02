"""Feature extraction: idiom masking, valence shifting, position weighting,
cue detection, conflict phrases, and the rule-based net-score baseline.

The feature schema is fixed at 17 slots; slot indices are frozen for the
lifetime of any trained model. Only nonzero slots are stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from .lexicon import IdiomLexicon, Polarity, SentimentLexicon
from .preprocess import (
    MASK_TOKENS,
    NG_MASK,
    PO_MASK,
    PosTag,
    Sentence,
    TableTagger,
    Token,
    normalize_text,
    pos_tag,
    remove_stopwords,
    split_sentences,
    tokenize,
)

SCHEMA_VERSION = 1
N_SLOTS = 17

HAS_PO_SENTI = 1
HAS_NG_SENTI = 2
HAS_PO_PH = 3
HAS_NG_PH = 4
W_PO = 5
W_NG = 6
W_NU = 7
PO_W_POSITION = 8
NG_W_POSITION = 9
NO_OF_WORDS = 10
IS_NEGATION = 11
N_O_NEGATION = 12
IS_QUESTION = 13
N_O_QUESTION = 14
IS_WISHFUL = 15
N_O_WISHFUL = 16
N_O_CONFLICT = 17

SLOT_NAMES = {
    HAS_PO_SENTI: "has_PO_senti",
    HAS_NG_SENTI: "has_NG_senti",
    HAS_PO_PH: "has_PO_ph",
    HAS_NG_PH: "has_NG_ph",
    W_PO: "W_PO",
    W_NG: "W_NG",
    W_NU: "W_NU",
    PO_W_POSITION: "PO_W_Position",
    NG_W_POSITION: "NG_W_Position",
    NO_OF_WORDS: "No_of_words",
    IS_NEGATION: "Is_Negation",
    N_O_NEGATION: "N_O_Negation",
    IS_QUESTION: "Is_Question",
    N_O_QUESTION: "N_O_Question",
    IS_WISHFUL: "Is_wishful",
    N_O_WISHFUL: "N_O_wishful",
    N_O_CONFLICT: "N_O_Conflict",
}

DEFAULT_NEGATION_WINDOW = 3
DEFAULT_INTENSIFIER_WINDOW = 2


@dataclass
class FeatureVector:
    """Sparse slot-index -> value map over the fixed schema."""

    values: dict[int, float] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        pruned = {}
        for slot, value in self.values.items():
            if not 1 <= slot <= N_SLOTS:
                raise ValueError(f"slot {slot} outside schema 1..{N_SLOTS}")
            if value:
                pruned[slot] = float(value)
        self.values = pruned

    def get(self, slot: int) -> float:
        return self.values.get(slot, 0.0)

    def set(self, slot: int, value: float) -> None:
        if not 1 <= slot <= N_SLOTS:
            raise ValueError(f"slot {slot} outside schema 1..{N_SLOTS}")
        if value:
            self.values[slot] = float(value)
        else:
            self.values.pop(slot, None)

    def pairs(self) -> list[tuple[int, float]]:
        return sorted(self.values.items())


@dataclass(frozen=True)
class CueLists:
    """Valence shifter and cue term sets, normalized on load."""

    negators: frozenset[str] = frozenset()
    intensifiers: frozenset[str] = frozenset()
    question_terms: frozenset[str] = frozenset()
    wishful_terms: frozenset[str] = frozenset()

    @classmethod
    def load(cls, negators=None, intensifiers=None, questions=None,
             wishful=None) -> "CueLists":
        return cls(
            negators=_load_terms(negators),
            intensifiers=_load_terms(intensifiers),
            question_terms=_load_terms(questions),
            wishful_terms=_load_terms(wishful),
        )


def _load_terms(path) -> frozenset[str]:
    if path is None:
        return frozenset()
    terms = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            term = line.split("#", 1)[0].strip()
            if term:
                norm = normalize_text(term)
                if norm:
                    terms.add(norm)
    return frozenset(terms)


@dataclass
class ScoredToken:
    token: Token
    base: int        # -1, 0, +1 from lexicon polarity
    adjusted: int    # after negation flip and intensifier doubling
    neutral: bool = False  # True when the lexicon marks the word NU


def mask_idioms(sentences: Iterable[Sentence],
                idioms: IdiomLexicon) -> tuple[list[Sentence], tuple[int, int]]:
    """Replace every leftmost-longest idiom match with a single mask token.

    Matches never overlap; positions are renumbered. Returns the masked
    sentences and the (positive, negative) phrase counts.
    """
    po = ng = 0
    out = []
    for s in sentences:
        surfaces = s.surfaces()
        kept: list[Token | str] = []
        i = 0
        while i < len(surfaces):
            hit = idioms.match_at(surfaces, i)
            if hit is not None:
                if hit.polarity is Polarity.PO:
                    kept.append(PO_MASK)
                    po += 1
                else:
                    kept.append(NG_MASK)
                    ng += 1
                i += len(hit.phrase)
            else:
                kept.append(s.tokens[i])
                i += 1
        tokens = []
        for pos, item in enumerate(kept, start=1):
            if isinstance(item, str):
                tokens.append(Token(item, pos))
            else:
                tokens.append(replace(item, position=pos))
        out.append(Sentence(tokens))
    return out, (po, ng)


def score_tokens(s: Sentence, lex: SentimentLexicon, cues: CueLists, *,
                 negation_window: int = DEFAULT_NEGATION_WINDOW,
                 intensifier_window: int = DEFAULT_INTENSIFIER_WINDOW,
                 ) -> list[ScoredToken]:
    """Assign each token its lexicon base value and the shifted value.

    A negator within ``negation_window`` tokens before a sentiment word
    flips its sign (an even number of negators cancels out); an intensifier
    within ``intensifier_window`` tokens after it doubles the magnitude
    once. Mask tokens and unknown words score 0.
    """
    toks = s.tokens
    scored = []
    for i, tok in enumerate(toks):
        if tok.surface in MASK_TOKENS:
            scored.append(ScoredToken(tok, 0, 0))
            continue
        entry = lex.lookup(tok.surface)
        if entry is None:
            scored.append(ScoredToken(tok, 0, 0))
            continue
        if entry.polarity is Polarity.NU:
            scored.append(ScoredToken(tok, 0, 0, neutral=True))
            continue
        base = 1 if entry.polarity is Polarity.PO else -1
        lo = max(0, i - negation_window)
        flips = sum(1 for p in toks[lo:i] if p.surface in cues.negators)
        adjusted = -base if flips % 2 else base
        trailing = toks[i + 1:i + 1 + intensifier_window]
        if any(n.surface in cues.intensifiers for n in trailing):
            adjusted *= 2
        scored.append(ScoredToken(tok, base, adjusted))
    return scored


def detect_conflict_phrases(s: Sentence,
                            scored: list[ScoredToken],
                            ) -> tuple[int, list[ScoredToken]]:
    """Resolve adjacent noun/adjective pairs of opposite polarity.

    Each conflicting bigram zeroes both contributions and leaves one
    negative unit at the first token's position. The scan is left-to-right
    and non-overlapping. Returns the conflict count and a modified copy.
    """
    out = [replace(st) for st in scored]
    count = 0
    i = 0
    while i < len(out) - 1:
        a, b = out[i], out[i + 1]
        tags = {a.token.tag, b.token.tag}
        if tags == {PosTag.NN, PosTag.JJ} and a.adjusted * b.adjusted < 0:
            count += 1
            a.adjusted = -1
            b.adjusted = 0
            i += 2
        else:
            i += 1
    return count, out


@dataclass
class TopicAnalysis:
    """Everything the feature builder and the rule scorer need for a topic."""

    sentences: list[Sentence]            # post-stopword, post-mask
    raw_scores: list[list[ScoredToken]]  # shifted values, pre-conflict
    scores: list[list[ScoredToken]]      # after conflict resolution
    po_phrases: int
    ng_phrases: int
    conflicts: int
    negator_count: int
    question_count: int
    wishful_count: int

    @property
    def word_count(self) -> int:
        return sum(s.word_count for s in self.sentences)


def analyze_topic(text: str, lex: SentimentLexicon, idioms: IdiomLexicon,
                  cues: CueLists, *,
                  stopwords: Iterable[str] = frozenset(),
                  tagger=None,
                  negation_window: int = DEFAULT_NEGATION_WINDOW,
                  intensifier_window: int = DEFAULT_INTENSIFIER_WINDOW,
                  ) -> TopicAnalysis:
    """Run the full preprocessing and scoring pipeline over one topic."""
    tagger = tagger if tagger is not None else TableTagger()
    stop = set(stopwords)
    sentences = []
    for raw_sentence in split_sentences(normalize_text(text)):
        s = tokenize(raw_sentence)
        if stop:
            s = remove_stopwords(s, stop)
        sentences.append(pos_tag(s, tagger))
    sentences, (po_ph, ng_ph) = mask_idioms(sentences, idioms)

    raw_scores = []
    scores = []
    conflicts = 0
    for s in sentences:
        raw = score_tokens(s, lex, cues, negation_window=negation_window,
                           intensifier_window=intensifier_window)
        n, resolved = detect_conflict_phrases(s, raw)
        conflicts += n
        raw_scores.append(raw)
        scores.append(resolved)

    negators = questions = wishes = 0
    for s in sentences:
        for tok in s.tokens:
            if tok.surface in cues.negators:
                negators += 1
            if tok.surface in cues.question_terms:
                questions += 1
            if tok.surface in cues.wishful_terms:
                wishes += 1

    return TopicAnalysis(sentences, raw_scores, scores, po_ph, ng_ph,
                         conflicts, negators, questions, wishes)


def extract_features(topic, lex: SentimentLexicon, idioms: IdiomLexicon,
                     cues: CueLists, *,
                     stopwords: Iterable[str] = frozenset(),
                     tagger=None,
                     negation_window: int = DEFAULT_NEGATION_WINDOW,
                     intensifier_window: int = DEFAULT_INTENSIFIER_WINDOW,
                     ) -> FeatureVector:
    """Build the 17-slot sparse vector for one topic."""
    a = analyze_topic(topic.text, lex, idioms, cues, stopwords=stopwords,
                      tagger=tagger, negation_window=negation_window,
                      intensifier_window=intensifier_window)

    w_po = w_ng = w_nu = 0
    po_pos = ng_pos = 0.0
    for sentence, scored in zip(a.sentences, a.scores):
        words = sentence.word_count
        for st in scored:
            if st.adjusted > 0:
                w_po += st.adjusted
                po_pos += words / st.token.position
            elif st.adjusted < 0:
                w_ng += -st.adjusted
                ng_pos += words / st.token.position
            elif st.neutral:
                w_nu += 1

    v = FeatureVector()
    v.set(HAS_PO_SENTI, 1 if w_po > 0 else 0)
    v.set(HAS_NG_SENTI, 1 if w_ng > 0 else 0)
    v.set(HAS_PO_PH, 1 if a.po_phrases > 0 else 0)
    v.set(HAS_NG_PH, 1 if a.ng_phrases > 0 else 0)
    v.set(W_PO, w_po)
    v.set(W_NG, w_ng)
    v.set(W_NU, w_nu)
    v.set(PO_W_POSITION, po_pos)
    v.set(NG_W_POSITION, ng_pos)
    v.set(NO_OF_WORDS, a.word_count)
    v.set(IS_NEGATION, 1 if a.negator_count else 0)
    v.set(N_O_NEGATION, a.negator_count)
    v.set(IS_QUESTION, 1 if a.question_count else 0)
    v.set(N_O_QUESTION, a.question_count)
    v.set(IS_WISHFUL, 1 if a.wishful_count else 0)
    v.set(N_O_WISHFUL, a.wishful_count)
    v.set(N_O_CONFLICT, a.conflicts)
    return v


def lexicon_rule_score(topic, lex: SentimentLexicon, idioms: IdiomLexicon,
                       cues: CueLists, *,
                       stopwords: Iterable[str] = frozenset(),
                       tagger=None,
                       negation_window: int = DEFAULT_NEGATION_WINDOW,
                       intensifier_window: int = DEFAULT_INTENSIFIER_WINDOW,
                       ) -> tuple[float, Polarity]:
    """Rule-based net score: shifted word values in [-2, +2] plus +-3 per
    masked phrase. The label is the sign of the net score.
    """
    a = analyze_topic(topic.text, lex, idioms, cues, stopwords=stopwords,
                      tagger=tagger, negation_window=negation_window,
                      intensifier_window=intensifier_window)
    net = 0.0
    for scored in a.raw_scores:
        for st in scored:
            net += max(-2, min(2, st.adjusted))
    net += 3 * a.po_phrases - 3 * a.ng_phrases
    if net > 0:
        label = Polarity.PO
    elif net < 0:
        label = Polarity.NG
    else:
        label = Polarity.NU
    return net, label
