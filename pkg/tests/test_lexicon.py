import pytest
from hypothesis import given, strategies as st

from arasent.errors import DuplicatePhrase, DuplicateWord, ParseError
from arasent.evaluation import Topic
from arasent.lexicon import (
    IdiomEntry,
    IdiomLexicon,
    LEXICON_HEADER,
    LexiconEntry,
    Polarity,
    SentimentLexicon,
    load_idiom_lexicon,
    load_sentiment_lexicon,
    save_sentiment_lexicon,
    update_term_frequencies,
)

PO, NG, NU = Polarity.PO, Polarity.NG, Polarity.NU


def write_lexicon_file(path, rows):
    lines = [LEXICON_HEADER] + ["\t".join(str(c) for c in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def test_load_small_lexicon(tmp_path):
    path = tmp_path / "lex.tsv"
    write_lexicon_file(path, [
        ("رائع", "wonderful", "rA}E", "PO", 3),
        ("ملل", "boredom", "", "NG", 1),
        ("عادي", "ordinary", "", "NU", 0),
    ])
    lex = load_sentiment_lexicon(path)
    assert len(lex) == 3
    assert lex.lookup("رائع").polarity is PO
    assert lex.lookup("رائع").tf == 3


def test_load_class_counts_at_full_scale(tmp_path):
    # 5244 generated rows: 2003 PO, 2829 NG, 412 NU
    rows = []
    letters = "ابتثجحخدذرزسشصضطظعغفقكلمنهوي"

    def fake_word(i):
        out = []
        n = i
        for _ in range(4):
            out.append(letters[n % len(letters)])
            n //= len(letters)
        return "".join(out)

    for i in range(5244):
        pol = "PO" if i < 2003 else ("NG" if i < 2003 + 2829 else "NU")
        rows.append((fake_word(i), "", "", pol, 0))
    path = tmp_path / "big.tsv"
    write_lexicon_file(path, rows)
    lex = load_sentiment_lexicon(path)
    counts = lex.polarity_counts()
    assert len(lex) == 5244
    assert counts[PO] == 2003 and counts[NG] == 2829 and counts[NU] == 412
    assert sum(counts.values()) == len(lex)


def test_load_rejects_bad_polarity(tmp_path):
    path = tmp_path / "lex.tsv"
    write_lexicon_file(path, [("رائع", "", "", "XX", 0)])
    with pytest.raises(ParseError) as err:
        load_sentiment_lexicon(path)
    assert err.value.line_no == 2


def test_load_rejects_wrong_column_count(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text(LEXICON_HEADER + "\nرائع\tPO\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_sentiment_lexicon(path)


def test_load_rejects_duplicate_word(tmp_path):
    path = tmp_path / "lex.tsv"
    write_lexicon_file(path, [("رائع", "", "", "PO", 0), ("رائِع", "", "", "NG", 0)])
    with pytest.raises(DuplicateWord):
        load_sentiment_lexicon(path)  # duplicate after normalization too


def test_load_rejects_missing_header(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("رائع\t\t\tPO\t0\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_sentiment_lexicon(path)


def test_lookup_normalizes_before_lookup():
    lex = SentimentLexicon([LexiconEntry("رائع", PO)])
    assert lex.lookup("رائِع").word == "رائع"
    assert lex.lookup("مجهول") is None


def test_lookup_known_word_polarity():
    lex = SentimentLexicon([LexiconEntry("مسرور", PO, gloss="Delighted")])
    assert lex.lookup("مسرور").polarity is PO


@given(st.sampled_from(["رائع", "رائِع", "أحب", "مستشفى", "جمـيل"]))
def test_lookup_equals_lookup_of_normalized(word):
    from arasent.preprocess import normalize_text
    lex = SentimentLexicon([LexiconEntry("رائع", PO), LexiconEntry("احب", PO),
                            LexiconEntry("مستشفي", NU), LexiconEntry("جميل", PO)])
    assert lex.lookup(word) == lex.lookup(normalize_text(word))


def test_entries_normalized_on_add():
    lex = SentimentLexicon([LexiconEntry("أحب", PO)])
    assert "احب" in lex
    assert lex.lookup("احب").word == "احب"


def test_prevent_list_stays_disjoint():
    lex = SentimentLexicon([LexiconEntry("رائع", PO)], prevent=["كلام"])
    with pytest.raises(DuplicateWord):
        lex.add_prevent("رائع")
    with pytest.raises(DuplicateWord):
        lex.add(LexiconEntry("كلام", NG))
    assert lex.prevent_list & set(lex.words()) == set()


def test_save_load_round_trip(tmp_path):
    lex = SentimentLexicon(
        [LexiconEntry("رائع", PO, "wonderful", "rA}E", 5),
         LexiconEntry("ملل", NG, "boredom", "", 2),
         LexiconEntry("عادي", NU)],
        prevent=["كلام", "جدار"])
    path = tmp_path / "lex.tsv"
    save_sentiment_lexicon(lex, path)
    assert load_sentiment_lexicon(path) == lex
    assert (tmp_path / "lex.prevent").exists()


def test_save_empty_lexicon(tmp_path):
    path = tmp_path / "lex.tsv"
    save_sentiment_lexicon(SentimentLexicon(), path)
    loaded = load_sentiment_lexicon(path)
    assert len(loaded) == 0
    assert path.read_text(encoding="utf-8") == LEXICON_HEADER + "\n"


def test_save_escapes_tab_in_gloss(tmp_path):
    lex = SentimentLexicon([LexiconEntry("رائع", PO, gloss="with\ttab")])
    path = tmp_path / "lex.tsv"
    save_sentiment_lexicon(lex, path)
    loaded = load_sentiment_lexicon(path)
    assert loaded.lookup("رائع").gloss == "with tab"


_entry_strategy = st.builds(
    LexiconEntry,
    word=st.sampled_from(["رائع", "جميل", "ملل", "فساد", "عادي", "سعادة", "قذر"]),
    polarity=st.sampled_from([PO, NG, NU]),
    gloss=st.text(st.characters(min_codepoint=32, max_codepoint=126), max_size=10),
    translit=st.text(st.characters(min_codepoint=97, max_codepoint=122), max_size=8),
    tf=st.integers(min_value=0, max_value=99),
)


@given(st.lists(_entry_strategy, max_size=7, unique_by=lambda e: e.word))
def test_round_trip_property(tmp_path_factory, entries):
    lex = SentimentLexicon(entries)
    path = tmp_path_factory.mktemp("lex") / "lex.tsv"
    save_sentiment_lexicon(lex, path)
    assert load_sentiment_lexicon(path) == lex


def test_idiom_entry_validation():
    with pytest.raises(ValueError):
        IdiomEntry(("واحدة",), NG)
    with pytest.raises(ValueError):
        IdiomEntry(("كلمتين", "هنا"), NU)


def test_load_idiom_lexicon(tmp_path):
    path = tmp_path / "idioms.tsv"
    path.write_text("تسليم القط مفتاح الكرار\tNG\n"
                    "زي العسل\tPO\tlike honey\n", encoding="utf-8")
    idioms = load_idiom_lexicon(path)
    assert len(idioms) == 2
    entries = list(idioms)
    assert entries[0].phrase == ("تسليم", "القط", "مفتاح", "الكرار")
    assert entries[0].polarity is NG
    assert entries[1].gloss == "like honey"


def test_load_idiom_rejects_single_token(tmp_path):
    path = tmp_path / "idioms.tsv"
    path.write_text("رائع\tNG\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_idiom_lexicon(path)


def test_load_idiom_empty_file(tmp_path):
    path = tmp_path / "idioms.tsv"
    path.write_text("", encoding="utf-8")
    assert len(load_idiom_lexicon(path)) == 0


def test_idiom_duplicate_phrase():
    idioms = IdiomLexicon([IdiomEntry(("زي", "العسل"), PO)])
    with pytest.raises(DuplicatePhrase):
        idioms.add(IdiomEntry(("زي", "العسل"), NG))


def test_idiom_match_prefers_longest():
    idioms = IdiomLexicon([
        IdiomEntry(("زي", "العسل"), PO),
        IdiomEntry(("زي", "العسل", "الصافي"), PO),
    ])
    surfaces = ["زي", "العسل", "الصافي"]
    assert idioms.match_at(surfaces, 0).phrase == ("زي", "العسل", "الصافي")
    assert idioms.match_at(["زي", "الفل"], 0) is None


def oracle_flat_count(topics, word):
    """Independent tf oracle: flat count over normalized token stream."""
    from arasent.preprocess import normalize_text, split_sentences, tokenize
    count = 0
    for t in topics:
        for s in split_sentences(normalize_text(t.text)):
            count += sum(1 for w in tokenize(s).surfaces() if w == word)
    return count


def test_update_term_frequencies():
    lex = SentimentLexicon([LexiconEntry("رائع", PO, tf=99), LexiconEntry("ملل", NG, tf=7)])
    topics = [Topic("1", "المكان رائع رائع. رائع فعلا"),
              Topic("2", "رائع وممتع"), Topic("3", "كلام رائع")]
    updated = update_term_frequencies(lex, topics)
    assert oracle_flat_count(topics, "رائع") == 5
    assert updated.lookup("رائع").tf == 5
    assert updated.lookup("ملل").tf == 0
    assert lex.lookup("رائع").tf == 99  # input untouched


def test_update_term_frequencies_empty_corpus():
    lex = SentimentLexicon([LexiconEntry("رائع", PO, tf=4)])
    assert update_term_frequencies(lex, []).lookup("رائع").tf == 0


def test_update_term_frequencies_counts_diacritized_occurrences():
    lex = SentimentLexicon([LexiconEntry("رائع", PO)])
    updated = update_term_frequencies(lex, [Topic("1", "المكان رائِع")])
    assert updated.lookup("رائع").tf == 1


@given(st.permutations([Topic("1", "رائع ملل"), Topic("2", "رائع"),
                        Topic("3", "ملل ملل"), Topic("4", "كلام")]))
def test_update_term_frequencies_order_independent(topics):
    lex = SentimentLexicon([LexiconEntry("رائع", PO), LexiconEntry("ملل", NG)])
    updated = update_term_frequencies(lex, topics)
    assert updated.lookup("رائع").tf == 2
    assert updated.lookup("ملل").tf == 3


def test_polarity_flip():
    assert PO.flipped() is NG
    assert NG.flipped() is PO
    assert NU.flipped() is NU
