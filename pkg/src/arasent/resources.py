"""Access to the packaged default resources (lexicons, cue lists, corpus)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .features import CueLists
from .lexicon import (
    IdiomLexicon,
    SentimentLexicon,
    load_idiom_lexicon,
    load_sentiment_lexicon,
)
from .preprocess import TableTagger, default_tagger, load_stopwords, load_tag_table


def data_path(name: str) -> Path:
    return Path(str(resources.files("arasent").joinpath("data", name)))


def default_lexicon() -> SentimentLexicon:
    return load_sentiment_lexicon(data_path("lexicon.tsv"))


def seed_lexicon() -> SentimentLexicon:
    """The shipped lexicon minus the words recoverable through expansion."""
    return load_sentiment_lexicon(data_path("lexicon_seed.tsv"))


def default_idioms() -> IdiomLexicon:
    return load_idiom_lexicon(data_path("idioms.tsv"))


def default_cues() -> CueLists:
    return CueLists.load(
        negators=data_path("negators.txt"),
        intensifiers=data_path("intensifiers.txt"),
        questions=data_path("questions.txt"),
        wishful=data_path("wishful.txt"),
    )


def default_stopwords() -> frozenset[str]:
    return load_stopwords(data_path("stopwords.txt"))


def build_default_tagger(lexicon: SentimentLexicon | None = None) -> TableTagger:
    """Shipped tag table, with lexicon words defaulting to JJ."""
    return default_tagger(load_tag_table(data_path("tags.tsv")), lexicon)
