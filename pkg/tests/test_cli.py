import json

import pytest

from arasent.cli import run
from arasent.classifier import load_model
from arasent.evaluation import SplitSpec, Topic, load_corpus, save_corpus, split_corpus
from arasent.lexicon import Polarity
from arasent.resources import data_path


@pytest.fixture
def corpus_path():
    return str(data_path("corpus.jsonl"))


def test_no_arguments_prints_usage(capsys):
    assert run([]) == 1
    assert "usage" in capsys.readouterr().out.lower()


def test_help_snapshot(capsys):
    assert run(["--help"]) == 0
    out = capsys.readouterr().out
    for command in ("normalize", "expand", "extract", "train", "predict",
                    "evaluate", "kappa", "score"):
        assert command in out


def test_subcommand_help_exits_zero(capsys):
    assert run(["evaluate", "--help"]) == 0
    out = capsys.readouterr().out
    assert "--corpus" in out and "--seed" in out


def test_usage_error_exit_code_1(capsys):
    assert run(["evaluate"]) == 1  # missing required --corpus
    assert run(["unknowncmd"]) == 1


def test_normalize_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("أهلاً World 42"))
    assert run(["normalize", "-"]) == 0
    assert capsys.readouterr().out.strip() == "اهلا"


def test_normalize_file(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("هذا المكانُ رائِعٌ!", encoding="utf-8")
    assert run(["normalize", str(src)]) == 0
    assert capsys.readouterr().out.strip() == "هذا المكان رائع!"


def test_data_error_exit_code_2(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text("{not json}\n", encoding="utf-8")
    assert run(["evaluate", "--corpus", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "bad.jsonl" in err and "1" in err


def test_extract_train_predict_pipeline(tmp_path, corpus_path, capsys):
    features = tmp_path / "train.svml"
    model = tmp_path / "model.txt"
    assert run(["extract", "--corpus", corpus_path, "--out", str(features)]) == 0
    assert features.read_text(encoding="utf-8").startswith("# schema_version: 1")
    assert run(["train", "--features", str(features), "--model", str(model)]) == 0
    assert model.exists()
    out = tmp_path / "pred.tsv"
    assert run(["predict", "--model", str(model), "--corpus", corpus_path,
                "--out", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 200
    topic_id, label, margin = lines[0].split("\t")
    assert label in ("PO", "NG")
    float(margin)


def test_evaluate_reports_genres(corpus_path, capsys):
    assert run(["evaluate", "--corpus", corpus_path]) == 0
    out = capsys.readouterr().out
    for genre in ("tweet", "hotel", "product", "tv", "Total"):
        assert genre in out
    assert "Accuracy" in out and "F-Measure" in out


def test_evaluate_json_output(corpus_path, capsys):
    assert run(["evaluate", "--corpus", corpus_path, "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[-1]["data"] == "Total"
    assert rows[-1]["accuracy"] >= 0.9


def test_evaluate_reproducible_model_files(tmp_path, corpus_path, capsys):
    m1, m2 = tmp_path / "m1.txt", tmp_path / "m2.txt"
    assert run(["evaluate", "--corpus", corpus_path, "--model-out", str(m1)]) == 0
    assert run(["evaluate", "--corpus", corpus_path, "--model-out", str(m2)]) == 0
    assert m1.read_bytes() == m2.read_bytes()


def test_pipeline_composition_matches_evaluate(tmp_path, corpus_path, capsys):
    """extract | train | predict composed by hand equals evaluate's pipeline."""
    corpus = load_corpus(corpus_path)
    train_topics, _, test_topics = split_corpus(corpus, SplitSpec(seed=42))
    train_file = tmp_path / "train.jsonl"
    test_file = tmp_path / "test.jsonl"
    save_corpus(train_topics, train_file)
    save_corpus(test_topics, test_file)

    features = tmp_path / "train.svml"
    model = tmp_path / "model.txt"
    preds = tmp_path / "pred.tsv"
    assert run(["extract", "--corpus", str(train_file), "--out", str(features)]) == 0
    assert run(["train", "--features", str(features), "--model", str(model)]) == 0
    assert run(["predict", "--model", str(model), "--corpus", str(test_file),
                "--out", str(preds)]) == 0

    eval_model = tmp_path / "eval-model.txt"
    capsys.readouterr()  # drop the extract/train/predict chatter
    assert run(["evaluate", "--corpus", corpus_path, "--seed", "42",
                "--model-out", str(eval_model), "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)

    # the svmlight interchange rounds values at 6 significant digits, so the
    # two routes agree up to that rounding and exactly on predicted labels
    import numpy as np
    m1, m2 = load_model(model), load_model(eval_model)
    assert np.allclose(m1.weights, m2.weights, rtol=1e-5, atol=1e-8)
    assert m1.bias == pytest.approx(m2.bias, rel=1e-5, abs=1e-8)

    preds2 = tmp_path / "pred-eval.tsv"
    assert run(["predict", "--model", str(eval_model), "--corpus", str(test_file),
                "--out", str(preds2)]) == 0
    labels_manual = [line.split("\t")[1]
                     for line in preds.read_text(encoding="utf-8").splitlines()]
    labels_eval = [line.split("\t")[1]
                   for line in preds2.read_text(encoding="utf-8").splitlines()]
    assert labels_manual == labels_eval

    manual = {line.split("\t")[0]: line.split("\t")[1]
              for line in preds.read_text(encoding="utf-8").splitlines()}
    hits = sum(1 for t in test_topics if manual[t.id] == t.label.value)
    assert hits / len(test_topics) == pytest.approx(rows[-1]["accuracy"])


def test_evaluate_grid_search_path(corpus_path, capsys):
    assert run(["evaluate", "--corpus", corpus_path, "--grid"]) == 0
    out = capsys.readouterr().out
    assert "grid pick:" in out and "Total" in out


def test_predict_to_stdout(tmp_path, corpus_path, capsys):
    features = tmp_path / "f.svml"
    model = tmp_path / "m.txt"
    assert run(["extract", "--corpus", corpus_path, "--out", str(features)]) == 0
    assert run(["train", "--features", str(features), "--model", str(model)]) == 0
    capsys.readouterr()
    assert run(["predict", "--model", str(model), "--corpus", corpus_path]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 200 and lines[0].count("\t") == 2


def test_expand_twice_second_run_adopts_zero(tmp_path, capsys):
    lexicon = tmp_path / "lexicon.tsv"
    lexicon.write_bytes(data_path("lexicon_seed.tsv").read_bytes())
    args = ["expand",
            "--corpus", str(data_path("corpus.jsonl")),
            "--provider", str(data_path("synsets.tsv")),
            "--lexicon", str(lexicon)]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert "adopted: 10" in first
    assert run(args) == 0  # lexicon was grown in place
    second = capsys.readouterr().out
    assert "adopted: 0" in second
    assert (tmp_path / "lexicon.pending.tsv").exists() or "oov_pending: 0" in second


def test_expand_writes_to_out_path(tmp_path, capsys):
    out = tmp_path / "grown.tsv"
    assert run(["expand",
                "--corpus", str(data_path("corpus.jsonl")),
                "--provider", str(data_path("synsets.tsv")),
                "--lexicon", str(data_path("lexicon_seed.tsv")),
                "--out", str(out)]) == 0
    assert out.exists()
    from arasent.lexicon import load_sentiment_lexicon
    grown = load_sentiment_lexicon(out)
    assert grown.lookup("مدهش") is not None


def test_expand_interactive_prompt(tmp_path, capsys, monkeypatch):
    """The terminal review loop shows evidence and applies the verdict."""
    lexicon = tmp_path / "lex.tsv"
    lexicon.write_bytes(data_path("lexicon_seed.tsv").read_bytes())
    corpus = tmp_path / "corpus.jsonl"
    save_corpus([Topic("t1", "الفيلم هايف", None, "tv")], corpus)
    answers = iter(["x", "n"])  # first answer invalid, loop re-asks
    monkeypatch.setattr("builtins.input", lambda prompt="": next(answers))
    assert run(["expand", "--corpus", str(corpus),
                "--provider", str(data_path("synsets.tsv")),
                "--lexicon", str(lexicon), "--interactive"]) == 0
    out = capsys.readouterr().out
    assert "هايف" in out and "oov_accepted: 1" in out
    from arasent.lexicon import load_sentiment_lexicon
    assert load_sentiment_lexicon(lexicon).lookup("هايف").polarity is Polarity.NG


def test_extract_byte_identical_across_runs(tmp_path, corpus_path, capsys):
    f1, f2 = tmp_path / "a.svml", tmp_path / "b.svml"
    assert run(["extract", "--corpus", corpus_path, "--out", str(f1)]) == 0
    assert run(["extract", "--corpus", corpus_path, "--out", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_kappa_subcommand(tmp_path, capsys):
    ratings = tmp_path / "ratings.tsv"
    rows = ["PO\tPO"] * 4 + ["NG\tNG"] * 3 + ["PO\tNG"] * 2 + ["NG\tPO"]
    ratings.write_text("\n".join(rows) + "\n", encoding="utf-8")
    assert run(["kappa", "--ratings", str(ratings)]) == 0
    assert "0.400000" in capsys.readouterr().out


def test_score_subcommand(tmp_path, capsys):
    corpus = tmp_path / "corpus.jsonl"
    save_corpus([Topic("a", "المكان رائع", Polarity.PO, "hotel"),
                 Topic("b", "المكان مش نظيف", Polarity.NG, "hotel")], corpus)
    assert run(["score", "--corpus", str(corpus)]) == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert lines[0].startswith("a\t+1\tPO")
    assert lines[1].startswith("b\t-1\tNG")
    assert "agreement with gold: 2/2" in captured.err


def test_config_file_overridden_by_flags(tmp_path, capsys):
    config = tmp_path / "run.conf"
    config.write_text("seed = 7\nepochs = 5\n", encoding="utf-8")
    corpus = str(data_path("corpus.jsonl"))
    m1 = tmp_path / "m1.txt"
    assert run(["evaluate", "--corpus", corpus, "--config", str(config),
                "--model-out", str(m1)]) == 0
    model = load_model(m1)
    assert model.config.seed == 7 and model.config.epochs == 5
    m2 = tmp_path / "m2.txt"
    assert run(["evaluate", "--corpus", corpus, "--config", str(config),
                "--seed", "9", "--model-out", str(m2)]) == 0
    assert load_model(m2).config.seed == 9  # flag wins over config file


def test_config_missing_resource_is_data_error(tmp_path, capsys):
    assert run(["evaluate", "--corpus", str(data_path("corpus.jsonl")),
                "--lexicon", str(tmp_path / "nope.tsv")]) == 2
    assert "not found" in capsys.readouterr().err
