import pytest
from hypothesis import given, strategies as st

from textprep import classic
from textprep.classic import (
    LemmaTable,
    StopwordInventory,
    WordlistError,
    lemmatize,
    load_wordlists,
    remove_stopwords,
    stem_sequence,
)
from textprep.stemmers import StemmerId
from textprep.tokenize import tokenize, render_tokens


def inv_of(words, retained=()):
    return StopwordInventory("en", frozenset(words), frozenset(retained))


def test_remove_stopwords_example():
    seq = tokenize("the cat sat on the mat")
    out = remove_stopwords(seq, inv_of({"the", "on"}))
    assert out.surfaces() == ["cat", "sat", "mat"]


def test_remove_stopwords_empty():
    assert remove_stopwords(tokenize(""), inv_of({"the"})).tokens == ()


def test_negation_retained_for_sentiment():
    inv, _ = load_wordlists("en", "sentiment")
    out = remove_stopwords(tokenize("this is not good"), inv)
    assert out.surfaces() == ["not", "good"]


def test_retained_disjoint_from_effective():
    inv, _ = load_wordlists("en", "sentiment")
    assert not (inv.retained & inv.effective)
    assert all(w == w.lower() for w in inv.words)


def test_remove_stopwords_idempotent_and_order_preserving():
    inv, _ = load_wordlists("en", "news")
    seq = tokenize("the quick brown fox jumps over the lazy dog !")
    once = remove_stopwords(seq, inv)
    twice = remove_stopwords(once, inv)
    assert once == twice
    positions = [t.start for t in once]
    assert positions == sorted(positions)


def test_non_word_tokens_survive_stopword_removal():
    inv, _ = load_wordlists("en", "news")
    out = remove_stopwords(tokenize("the #the @the !"), inv)
    assert out.surfaces() == ["#the", "@the", "!"]


def test_lemmatize_examples():
    _, table = load_wordlists("en", "sentiment")
    assert table.lemma("is") == "be"
    assert table.lemma("cat") == "cat"  # no entry, no rule applies
    assert table.lemma("leaves") == "leaf"  # first candidate wins
    assert table.entries["leaves"] == ("leaf", "leave")


def test_lemmatize_sequence_preserves_non_words():
    _, table = load_wordlists("en", "sentiment")
    out = lemmatize(tokenize("is #is !"), table)
    assert out.surfaces() == ["be", "#is", "!"]


def test_lemma_suffix_rules_fallback():
    _, table = load_wordlists("en", "news")
    assert table.lemma("tables") == "table"
    assert table.lemma("cities") == "city"
    assert table.lemma("classes") == "class"
    # guarded: result must keep at least 3 characters
    assert table.lemma("bus") == "bus"


def test_lemma_pure_function_of_norm():
    _, table = load_wordlists("en", "news")
    assert table.lemma("running") == table.lemma("running")


def test_stem_sequence_passthrough():
    out = stem_sequence(tokenize("programs !"), StemmerId("porter"))
    assert out.surfaces() == ["program", "!"]
    assert stem_sequence(tokenize(""), StemmerId("porter")).tokens == ()


def test_stem_sequence_spec_sentence():
    out = stem_sequence(tokenize("argue argued arguing"), StemmerId("porter"))
    assert render_tokens(out) == "argu argu argu"


def test_load_wordlists_task_conditional():
    sentiment_inv, _ = load_wordlists("en", "sentiment")
    news_inv, _ = load_wordlists("en", "news")
    assert "not" not in sentiment_inv.effective
    assert "not" in news_inv.effective


def test_load_wordlists_unknown_language():
    with pytest.raises(WordlistError, match="unknown language"):
        load_wordlists("xx", "sentiment")


@pytest.mark.parametrize("language", ["en", "fr", "de", "it", "pt", "es"])
def test_wordlists_available_for_all_languages(language):
    inv, table = load_wordlists(language, "sentiment")
    assert len(inv.words) > 50
    assert table.entries


@given(st.lists(st.sampled_from(["the", "cat", "on", "sat", "not", "mat"]), max_size=12))
def test_remove_stopwords_never_reorders(words):
    inv, _ = load_wordlists("en", "news")
    seq = tokenize(" ".join(words))
    out = remove_stopwords(seq, inv)
    survivors = [t.norm for t in out]
    expected = [w for w in seq.norms() if w not in inv.effective]
    assert survivors == expected
