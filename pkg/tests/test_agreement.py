import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from textprep import classic
from textprep.agreement import (
    Alignment,
    align,
    aggregate,
    alignment_score,
    lemma_agreement,
    levenshtein,
    pair_score,
    stem_agreement,
    stopword_metrics,
)
from textprep.classic import StopwordInventory, lemmatize, remove_stopwords, stem_sequence
from textprep.stemmers import StemmerId
from textprep.tokenize import TokenSequence, Token, metric_word_tokens, tokenize


def seq(*norms):
    tokens = tuple(
        Token(surface=n, norm=n, start=i * 10, end=i * 10 + len(n), kind="word")
        for i, n in enumerate(norms)
    )
    return TokenSequence(tokens)


def brute_force_best(a: TokenSequence, b: TokenSequence) -> int:
    """Exhaustive search over monotone matchings."""
    norms_a, norms_b = a.norms(), b.norms()
    n, m = len(norms_a), len(norms_b)
    scores = [[pair_score(x, y) for y in norms_b] for x in norms_a]
    best = 0
    for k in range(0, min(n, m) + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(m), k):
                total = sum(scores[i][j] for i, j in zip(rows, cols))
                if total > best:
                    best = total
    return best


def test_align_removed():
    result = align(seq("the", "cat", "sat"), seq("cat", "sat"))
    assert result.pairs == ((1, 0), (2, 1))
    assert result.removed == (0,)
    assert result.inserted == ()


def test_align_lemma_like():
    result = align(seq("he", "is", "going"), seq("he", "be", "go"))
    assert result.pairs == ((0, 0), (1, 1), (2, 2))


def test_align_empty_vs_one():
    result = align(seq(), seq("x"))
    assert result.pairs == () and result.inserted == (0,)


def test_pair_score_rules():
    assert pair_score("cat", "cat") == 3
    assert pair_score("go", "going") == 2  # prefix with >= 2 shared chars
    assert pair_score("is", "be") == 1  # similarity exactly 0.5
    assert pair_score("x", "y") == 1  # single letters: lev 1 over length 2
    assert pair_score("the", "xyzk") == -1


def test_levenshtein():
    assert levenshtein("", "abc") == 3
    assert levenshtein("kitten", "sitting") == 3
    assert levenshtein("abc", "abc") == 0


def test_monotone_invariant():
    result = align(seq("a", "b", "c", "d"), seq("b", "c", "x"))
    for (i1, j1), (i2, j2) in zip(result.pairs, result.pairs[1:]):
        assert i1 < i2 and j1 < j2
    indexed = set(result.pairs)
    assert all(i in {p[0] for p in indexed} or i in result.removed for i in range(4))


WORDS = ["a", "b", "ab", "ba", "abc", "cab", "abcd", "dcba", "aa", "dd"]


@settings(max_examples=300, deadline=None)
@given(
    st.lists(st.sampled_from(WORDS), max_size=6),
    st.lists(st.sampled_from(WORDS), max_size=6),
)
def test_align_matches_brute_force(norms_a, norms_b):
    a, b = seq(*norms_a), seq(*norms_b)
    result = align(a, b)
    assert alignment_score(result, a, b) == brute_force_best(a, b)


def inv_of(words):
    return StopwordInventory("en", frozenset(words))


def test_stopword_metrics_hand_counts():
    inv = inv_of({"the", "on"})
    orig = seq("the", "cat", "sat", "on", "mat")
    assert stopword_metrics(orig, seq("cat", "sat", "mat"), inv) == (100.0, 0.0)
    sw, nsw = stopword_metrics(orig, seq("cat", "mat"), inv)
    assert sw == 100.0
    assert nsw == pytest.approx(100.0 / 3.0)


def test_stopword_metrics_undefined_cases():
    inv = inv_of({"the"})
    # no stopwords present, nothing removed -> SW defined as 100
    assert stopword_metrics(seq("cat"), seq("cat"), inv) == (100.0, 0.0)
    # no stopwords present, something removed -> SW undefined (None)
    sw, nsw = stopword_metrics(seq("cat", "dog"), seq("cat"), inv)
    assert sw is None and nsw == 50.0
    # all stopwords, all removed -> NSW undefined
    sw, nsw = stopword_metrics(seq("the", "the"), seq(), inv)
    assert sw == 100.0 and nsw is None


def test_lemma_agreement_examples(en_wordlists):
    _, table = en_wordlists
    assert lemma_agreement(seq("is", "happy"), seq("be", "happy"), table) == 100.0
    assert lemma_agreement(seq("is", "happy"), seq("being", "happy"), table) == 50.0


def test_stem_agreement_per_algo_and_any():
    algos = [StemmerId("porter"), StemmerId("lancaster"), StemmerId("snowball", "en")]
    orig = metric_word_tokens(tokenize("maximum loving programs"))
    porter_out = stem_sequence(orig, StemmerId("porter"))
    per_algo, any_pct = stem_agreement(orig, porter_out, algos)
    assert per_algo["porter"] == 100.0
    assert any_pct == 100.0
    # lancaster-only forms match lancaster but not porter
    out = seq("maxim", "lov", "program")
    per_algo, any_pct = stem_agreement(orig, out, algos)
    assert per_algo["lancaster"] == 100.0
    assert per_algo["lancaster"] > per_algo["porter"]
    assert any_pct >= max(per_algo.values())


def echo_pairs(texts, transform):
    pairs = []
    for text in texts:
        orig = metric_word_tokens(tokenize(text))
        pairs.append((orig, metric_word_tokens(transform(orig))))
    return pairs


def test_aggregate_echo_oracle(en_wordlists):
    inv, table = en_wordlists
    texts = [
        "the cat is happy and loving it",
        "programs crashed but users keep running tests",
        "a beautiful day for walking in the park",
    ]
    algos = [StemmerId("porter"), StemmerId("lancaster"), StemmerId("snowball", "en")]
    report = aggregate(
        "en",
        echo_pairs(texts, lambda s: remove_stopwords(s, inv)),
        echo_pairs(texts, lambda s: lemmatize(s, table)),
        echo_pairs(texts, lambda s: stem_sequence(s, StemmerId("porter"))),
        inv,
        table,
        algos,
    )
    assert report.sw_pct == 100.0
    assert report.nsw_pct == 0.0
    assert report.l_pct == 100.0
    assert report.s_pct["porter"] == 100.0
    assert report.s_any_pct == 100.0
    assert report.stem_consistency == 1.0


def test_diagnostics_top_removed(en_wordlists):
    inv, table = en_wordlists
    texts = [f"user number {i} says the service is fine" for i in range(5)]
    def drop_user_and_stopwords(s):
        kept = [t for t in remove_stopwords(s, inv) if t.norm != "user"]
        return TokenSequence(tuple(kept))
    report = aggregate(
        "en",
        echo_pairs(texts, drop_user_and_stopwords),
        [],
        [],
        inv,
        table,
        [StemmerId("porter")],
    )
    assert report.top_removed_non_stopwords[0][0] == "user"
    assert report.top_removed_non_stopwords[0][1] == 5


def test_stem_consistency_vacuous(en_wordlists):
    inv, table = en_wordlists
    report = aggregate(
        "en",
        [],
        [],
        echo_pairs(["every word appears once"], lambda s: stem_sequence(s, StemmerId("porter"))),
        inv,
        table,
        [StemmerId("porter")],
    )
    assert report.stem_consistency == 1.0
    assert report.stem_consistency_vacuous


def test_stem_consistency_detects_inconsistency(en_wordlists):
    inv, table = en_wordlists
    orig = seq("loving", "loving")
    out = seq("love", "lov")  # same type stemmed two ways
    report = aggregate("en", [], [], [(orig, out)], inv, table, [StemmerId("porter")])
    assert report.stem_consistency == 0.0
    assert not report.stem_consistency_vacuous
