"""Command-line entry point wiring the whole pipeline.

Subcommands: normalize, expand, extract, train, predict, evaluate, kappa,
score. Exit codes: 0 success, 1 usage error, 2 data or parse error.
Resource paths resolve as flags > config file > packaged defaults; the
config file is plain ``key = value`` text with ``#`` comments.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import classifier, expansion, features, resources
from .errors import ArasentError
from .evaluation import (
    SplitSpec,
    cohen_kappa,
    format_report,
    genre_report,
    load_corpus,
    load_ratings,
    split_corpus,
)
from .expansion import CachingProvider, FixtureProvider, ReviewItem, SynsetResult
from .lexicon import (
    Polarity,
    load_idiom_lexicon,
    load_sentiment_lexicon,
    save_sentiment_lexicon,
)
from .preprocess import default_tagger, load_stopwords, load_tag_table, normalize_text

_PATH_KEYS = ("lexicon", "idioms", "stopwords", "tagtable",
              "negators", "intensifiers", "questions", "wishful")

_DEFAULT_FILES = {
    "lexicon": "lexicon.tsv", "idioms": "idioms.tsv",
    "stopwords": "stopwords.txt", "tagtable": "tags.tsv",
    "negators": "negators.txt", "intensifiers": "intensifiers.txt",
    "questions": "questions.txt", "wishful": "wishful.txt",
}


@dataclass
class RunConfig:
    """Resolved resource paths and pipeline settings for one invocation."""

    lexicon: Path
    idioms: Path
    stopwords: Path
    tagtable: Path
    negators: Path
    intensifiers: Path
    questions: Path
    wishful: Path
    seed: int = 42
    train_frac: float = 0.8
    dev_frac: float = 0.1
    test_frac: float = 0.1
    regularization: float = 1e-2
    epochs: int = 200
    scale: bool = False
    stratify: bool = True
    negation_window: int = 3
    intensifier_window: int = 2

    def validate(self) -> None:
        for key in _PATH_KEYS:
            path = getattr(self, key)
            if not Path(path).exists():
                raise ArasentError(f"{key} file not found: {path}")


def load_config_file(path) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ArasentError(f"{path}:{line_no}: expected key = value")
            values[key.strip()] = value.strip()
    return values


def _resolve_config(args) -> RunConfig:
    file_values = load_config_file(args.config) if getattr(args, "config", None) else {}
    settings: dict = {}
    for key in _PATH_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            settings[key] = Path(flag)
        elif key in file_values:
            settings[key] = Path(file_values[key])
        else:
            settings[key] = resources.data_path(_DEFAULT_FILES[key])
    for key in ("seed", "epochs", "negation_window", "intensifier_window"):
        settings[key] = _pick(args, file_values, key, int)
    for key in ("train_frac", "dev_frac", "test_frac", "regularization"):
        settings[key] = _pick(args, file_values, key, float)
    for key in ("scale", "stratify"):
        settings[key] = _pick(args, file_values, key, _parse_bool)
    config = RunConfig(**{k: v for k, v in settings.items() if v is not None})
    config.validate()
    return config


def _pick(args, file_values, key, cast):
    flag = getattr(args, key, None)
    if flag is not None:
        return cast(flag) if not isinstance(flag, bool) else flag
    if key in file_values:
        return cast(file_values[key])
    return None


def _parse_bool(text) -> bool:
    if isinstance(text, bool):
        return text
    if text.lower() in ("1", "true", "yes", "on"):
        return True
    if text.lower() in ("0", "false", "no", "off"):
        return False
    raise ArasentError(f"expected a boolean, got {text!r}")


class _Pipeline:
    """Shared resource loading for the feature-based subcommands."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.lexicon = load_sentiment_lexicon(config.lexicon)
        self.idioms = load_idiom_lexicon(config.idioms)
        self.cues = features.CueLists.load(
            negators=config.negators, intensifiers=config.intensifiers,
            questions=config.questions, wishful=config.wishful)
        self.stopwords = load_stopwords(config.stopwords)
        self.tagger = default_tagger(load_tag_table(config.tagtable), self.lexicon)

    def vector(self, topic) -> features.FeatureVector:
        return features.extract_features(
            topic, self.lexicon, self.idioms, self.cues,
            stopwords=self.stopwords, tagger=self.tagger,
            negation_window=self.config.negation_window,
            intensifier_window=self.config.intensifier_window)

    def labeled_vectors(self, topics) -> tuple[list[classifier.LabeledVector], int]:
        out = []
        skipped = 0
        for t in topics:
            if t.label is None:
                skipped += 1
                continue
            label = 1 if t.label is Polarity.PO else -1
            out.append(classifier.LabeledVector(self.vector(t), label, t.id))
        return out, skipped


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _cmd_normalize(args) -> int:
    print(normalize_text(_read_text(args.input)))
    return 0


def _cmd_expand(args) -> int:
    config = _resolve_config(args)
    pipe = _Pipeline(config)
    corpus = load_corpus(args.corpus)
    provider = FixtureProvider.from_file(args.provider)
    if args.cache:
        provider = CachingProvider(provider, args.cache)
    out_path = Path(args.out) if args.out else Path(config.lexicon)
    pending = Path(args.pending) if args.pending else out_path.with_suffix(".pending.tsv")

    ask = None
    if args.interactive:
        def ask(item: ReviewItem, syn: SynsetResult) -> str:
            print(f"word: {item.word}")
            if syn.translation:
                print(f"  translation: {syn.translation}")
            if syn.synonyms:
                print(f"  synonyms: {', '.join(w for w, _ in syn.synonyms)}")
            while True:
                answer = input("  polarity? [p]ositive / [n]egative / [r]eject / [s]kip: ")
                if answer.strip().lower() in ("p", "po", "n", "ng", "r", "reject", "s", "skip"):
                    return answer
                print("  please answer p, n, r or s")

    grown, report = expansion.expand_lexicon(
        corpus, pipe.lexicon, provider,
        "interactive" if args.interactive else "batch",
        tagger=pipe.tagger, stopwords=pipe.stopwords,
        pending_path=pending, ask=ask)
    save_sentiment_lexicon(grown, out_path)
    for key, value in report.counts().items():
        print(f"{key}: {value}")
    if report.adopted:
        print("adopted words: " + " ".join(report.adopted))
    print(f"lexicon written to {out_path}")
    return 0


def _cmd_extract(args) -> int:
    config = _resolve_config(args)
    pipe = _Pipeline(config)
    corpus = load_corpus(args.corpus)
    data, skipped = pipe.labeled_vectors(corpus)
    classifier.write_svmlight(data, args.out)
    if skipped:
        print(f"skipped {skipped} unlabeled topics", file=sys.stderr)
    print(f"wrote {len(data)} vectors to {args.out}")
    return 0


def _train_config(config: RunConfig) -> classifier.TrainConfig:
    return classifier.TrainConfig(regularization=config.regularization,
                                  epochs=config.epochs, seed=config.seed,
                                  scale_max=config.scale)


def _cmd_train(args) -> int:
    config = _resolve_config(args)
    data = classifier.read_svmlight(args.features)
    model = classifier.train(data, _train_config(config))
    classifier.save_model(model, args.model)
    print(f"trained on {len(data)} vectors; model written to {args.model}")
    return 0


def _cmd_predict(args) -> int:
    config = _resolve_config(args)
    pipe = _Pipeline(config)
    model = classifier.load_model(args.model)
    corpus = load_corpus(args.corpus)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for topic in corpus:
            label, margin = classifier.predict(model, pipe.vector(topic))
            polarity = Polarity.PO if label > 0 else Polarity.NG
            out.write(f"{topic.id}\t{polarity.value}\t{margin:.6f}\n")
    finally:
        if args.out:
            out.close()
    return 0


def _cmd_evaluate(args) -> int:
    config = _resolve_config(args)
    pipe = _Pipeline(config)
    corpus = load_corpus(args.corpus)
    spec = SplitSpec(config.train_frac, config.dev_frac, config.test_frac,
                     seed=config.seed)
    train_t, dev_t, test_t = split_corpus(corpus, spec, stratify=config.stratify)
    train_data, skipped = pipe.labeled_vectors(train_t)
    if skipped:
        print(f"skipped {skipped} unlabeled training topics", file=sys.stderr)
    if args.grid:
        dev_data, _ = pipe.labeled_vectors(dev_t)
        train_cfg, model, dev_acc = classifier.grid_search(
            train_data, dev_data, seed=config.seed)
        print(f"grid pick: reg={train_cfg.regularization} epochs={train_cfg.epochs} "
              f"(dev accuracy {100 * dev_acc:.2f}%)")
    else:
        model = classifier.train(train_data, _train_config(config))
    if args.model_out:
        classifier.save_model(model, args.model_out)
    predictions = []
    for topic in test_t:
        label, _ = classifier.predict(model, pipe.vector(topic))
        predictions.append(Polarity.PO if label > 0 else Polarity.NG)
    rows = genre_report(test_t, predictions)
    if args.json:
        import json
        print(json.dumps(rows, ensure_ascii=False, indent=2))
    else:
        print(f"train/dev/test sizes: {len(train_t)}/{len(dev_t)}/{len(test_t)}")
        print(format_report(rows))
    return 0


def _cmd_kappa(args) -> int:
    ratings = load_ratings(args.ratings)
    value = cohen_kappa(ratings)
    print(f"kappa: {value:.6f}")
    return 0


def _cmd_score(args) -> int:
    config = _resolve_config(args)
    pipe = _Pipeline(config)
    corpus = load_corpus(args.corpus)
    agree = labeled = 0
    for topic in corpus:
        net, label = features.lexicon_rule_score(
            topic, pipe.lexicon, pipe.idioms, pipe.cues,
            stopwords=pipe.stopwords, tagger=pipe.tagger,
            negation_window=config.negation_window,
            intensifier_window=config.intensifier_window)
        print(f"{topic.id}\t{net:+g}\t{label.value}")
        if topic.label is not None:
            labeled += 1
            if label is topic.label:
                agree += 1
    if labeled:
        print(f"# agreement with gold: {agree}/{labeled} "
              f"({100 * agree / labeled:.2f}%)", file=sys.stderr)
    return 0


def _add_config_flags(parser, hyper=False):
    parser.add_argument("--config", help="key = value config file")
    for key in _PATH_KEYS:
        parser.add_argument(f"--{key}", help=f"{key} file (default: packaged)")
    parser.add_argument("--negation-window", dest="negation_window", type=int)
    parser.add_argument("--intensifier-window", dest="intensifier_window", type=int)
    if hyper:
        parser.add_argument("--seed", type=int, help="random seed (default 42)")
        parser.add_argument("--reg", dest="regularization", type=float,
                            help="L2 regularization strength (default 1e-2)")
        parser.add_argument("--epochs", type=int, help="training epochs (default 200)")
        parser.add_argument("--scale", action="store_const", const=True,
                            help="per-slot max scaling during training")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arasent",
        description="Lexicon-based sentiment analysis for MSA and Egyptian Arabic.")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("normalize", help="normalize Arabic text to canonical form")
    p.add_argument("input", help="input file, or - for stdin")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("expand", help="grow the lexicon from a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--provider", required=True, help="synset fixture TSV")
    p.add_argument("--cache", help="file-backed provider cache")
    p.add_argument("--out", help="output lexicon (default: overwrite input lexicon)")
    p.add_argument("--pending", help="pending-review file")
    p.add_argument("--interactive", action="store_true",
                   help="review out-of-vocabulary words on the terminal")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("extract", help="write SVM-light features for a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    _add_config_flags(p)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("train", help="train a linear model from SVM-light features")
    p.add_argument("--features", required=True)
    p.add_argument("--model", required=True)
    _add_config_flags(p, hyper=True)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("predict", help="label a corpus with a trained model")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", help="output file (default: stdout)")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("evaluate", help="split, train and report test metrics per genre")
    p.add_argument("--corpus", required=True)
    p.add_argument("--train-frac", dest="train_frac", type=float)
    p.add_argument("--dev-frac", dest="dev_frac", type=float)
    p.add_argument("--test-frac", dest="test_frac", type=float)
    p.add_argument("--no-stratify", dest="stratify", action="store_const", const=False)
    p.add_argument("--grid", action="store_true",
                   help="pick hyperparameters on the dev split")
    p.add_argument("--model-out", help="also save the trained model")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    _add_config_flags(p, hyper=True)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("kappa", help="inter-annotator agreement from a ratings file")
    p.add_argument("--ratings", required=True,
                   help="TSV, one item per line, one column per rater")
    p.set_defaults(func=_cmd_kappa)

    p = sub.add_parser("score", help="rule-based net score per topic")
    p.add_argument("--corpus", required=True)
    _add_config_flags(p)
    p.set_defaults(func=_cmd_score)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    if getattr(args, "func", None) is None:
        parser.print_usage()
        return 1
    try:
        return args.func(args)
    except ArasentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
