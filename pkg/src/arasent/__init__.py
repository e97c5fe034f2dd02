"""arasent: lexicon-based sentiment analysis for MSA and Egyptian Arabic."""

__version__ = "0.1.0"

from .lexicon import (  # noqa: F401
    IdiomEntry,
    IdiomLexicon,
    LexiconEntry,
    Polarity,
    SentimentLexicon,
    load_idiom_lexicon,
    load_sentiment_lexicon,
    save_sentiment_lexicon,
    update_term_frequencies,
)
from .preprocess import (  # noqa: F401
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
from .features import (  # noqa: F401
    CueLists,
    FeatureVector,
    extract_features,
    lexicon_rule_score,
    mask_idioms,
)
from .expansion import (  # noqa: F401
    FixtureProvider,
    SynsetResult,
    detect_orientation,
    expand_lexicon,
)
from .classifier import (  # noqa: F401
    LabeledVector,
    Model,
    TrainConfig,
    predict,
    read_svmlight,
    train,
    write_svmlight,
)
from .evaluation import (  # noqa: F401
    ConfusionCounts,
    SplitSpec,
    Topic,
    cohen_kappa,
    confusion_metrics,
    f_measure,
    split_corpus,
)
