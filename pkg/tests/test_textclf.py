import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import sparse

from textprep.textclf import (
    GridPoint,
    Hyperparams,
    TextclfError,
    VectorizerConfig,
    fit_vectorizer,
    logreg_loss_grad,
    micro_f1,
    train_and_eval,
    train_logreg,
    train_nb,
    train_tree,
    transform,
    tune,
)


# ----------------------------------------------------------------- vectorizer


def test_idf_worked_example():
    vocab = fit_vectorizer([["a", "b"]], VectorizerConfig())
    assert sorted(vocab.index) == ["a", "b"]
    assert vocab.idf == pytest.approx([math.log(2 / 2) + 1, 1.0], abs=1e-12)


def test_transform_two_equal_tokens():
    vocab = fit_vectorizer([["a", "b"]], VectorizerConfig())
    row = transform([["a", "b"]], vocab).toarray()[0]
    assert row == pytest.approx([1 / math.sqrt(2)] * 2, abs=1e-12)


def test_max_features_by_document_frequency():
    docs = [["a"]] * 5 + [["b"]] * 2
    vocab = fit_vectorizer(docs, VectorizerConfig(max_features=1))
    assert list(vocab.index) == ["a"]


def test_bigram_features():
    vocab = fit_vectorizer([["a", "b"]], VectorizerConfig(1, 2, 100))
    assert sorted(vocab.index) == ["a", "a_b", "b"]


def test_oov_gives_zero_vector():
    vocab = fit_vectorizer([["a"]], VectorizerConfig())
    row = transform([["zzz", "qqq"]], vocab).toarray()[0]
    assert not row.any()


def test_single_token_unit_vector():
    vocab = fit_vectorizer([["a", "b"], ["b"]], VectorizerConfig())
    row = transform([["a"]], vocab).toarray()[0]
    assert np.linalg.norm(row) == pytest.approx(1.0, abs=1e-12)


def test_l2_norm_always_one_or_zero():
    vocab = fit_vectorizer([["a", "b", "c"], ["b", "c"], ["c"]], VectorizerConfig(1, 2, 50))
    X = transform([["a", "b", "b"], ["zzz"], [], ["c", "c", "c", "a"]], vocab)
    norms = np.sqrt(np.asarray(X.multiply(X).sum(axis=1))).ravel()
    for value in norms:
        assert value == pytest.approx(1.0, abs=1e-12) or value == 0.0


def test_count_scaling_invariance():
    vocab = fit_vectorizer([["a", "b"], ["b"]], VectorizerConfig())
    once = transform([["a", "b"]], vocab).toarray()
    thrice = transform([["a", "a", "a", "b", "b", "b"]], vocab).toarray()
    assert once == pytest.approx(thrice, abs=1e-12)


def test_empty_corpus_rejected():
    with pytest.raises(TextclfError):
        fit_vectorizer([], VectorizerConfig())
    with pytest.raises(TextclfError):
        fit_vectorizer([[], []], VectorizerConfig())


def test_vectorizer_config_invariants():
    with pytest.raises(TextclfError):
        VectorizerConfig(2, 1)
    with pytest.raises(TextclfError):
        VectorizerConfig(max_features=0)


# ---------------------------------------------------------------- classifiers


def test_nb_separable():
    X = sparse.csr_matrix(np.array([[1.0, 0.0], [0.0, 1.0]]))
    model = train_nb(X, ["A", "B"])
    assert model.predict(sparse.csr_matrix(np.array([[1.0, 0.0]]))) == ["A"]


def test_logreg_linearly_separable_reaches_full_accuracy():
    rng = np.random.default_rng(0)
    pos = rng.normal(loc=[2, 2], size=(20, 2))
    neg = rng.normal(loc=[-2, -2], size=(20, 2))
    X = sparse.csr_matrix(np.vstack([pos, neg]))
    y = ["A"] * 20 + ["B"] * 20
    model = train_logreg(X, y, l2=0.0, max_iter=400)
    assert micro_f1(y, model.predict(X)) == 1.0


def test_tree_fits_xor_with_depth_two():
    X = sparse.csr_matrix(np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [1.0, 1.0]]))
    y = ["A", "B", "B", "A"]
    model = train_tree(X, y, max_depth=2)
    assert model.predict(X) == y


def test_single_class_rejected():
    X = sparse.csr_matrix(np.eye(3))
    for trainer in (train_nb, train_logreg, train_tree):
        with pytest.raises(TextclfError):
            trainer(X, ["A", "A", "A"])


def test_training_deterministic():
    rng = np.random.default_rng(5)
    X = sparse.csr_matrix(rng.random((30, 8)))
    y = ["A" if i % 2 else "B" for i in range(30)]
    a = train_logreg(X, y).weights
    b = train_logreg(X, y).weights
    assert np.array_equal(a, b)
    t1 = train_tree(X, y, max_depth=4)
    t2 = train_tree(X, y, max_depth=4)
    assert t1.predict(X) == t2.predict(X)


# -------------------------------------------------------------------- metric


def test_micro_f1_examples():
    assert micro_f1(["A", "B"], ["A", "B"]) == 1.0
    assert micro_f1(["A", "A", "B"], ["A", "B", "B"]) == pytest.approx(2 / 3)
    assert micro_f1(["A", "B"], ["B", "A"]) == 0.0
    with pytest.raises(TextclfError):
        micro_f1(["A"], ["A", "B"])


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.sampled_from("ABCD"), min_size=1, max_size=30).flatmap(
        lambda y: st.tuples(
            st.just(y),
            st.lists(st.sampled_from("ABCD"), min_size=len(y), max_size=len(y)),
        )
    )
)
def test_micro_f1_equals_accuracy(pair):
    y_true, y_pred = pair
    accuracy = sum(t == p for t, p in zip(y_true, y_pred)) / len(y_true)
    assert micro_f1(y_true, y_pred) == pytest.approx(accuracy)


# ------------------------------------------------------------------ gradient


def test_logreg_gradient_matches_finite_differences():
    rng = np.random.default_rng(1)
    for _ in range(10):
        n, d, k = 5, 4, 3
        X = sparse.csr_matrix(rng.random((n, d)))
        y_onehot = np.zeros((n, k))
        y_onehot[np.arange(n), rng.integers(0, k, n)] = 1
        W = rng.normal(size=(d, k))
        b = rng.normal(size=k)
        _, grad_w, grad_b = logreg_loss_grad(X, y_onehot, W, b, 0.05)
        eps = 1e-6
        for idx in [(0, 0), (2, 1), (3, 2)]:
            Wp, Wm = W.copy(), W.copy()
            Wp[idx] += eps
            Wm[idx] -= eps
            lp, _, _ = logreg_loss_grad(X, y_onehot, Wp, b, 0.05)
            lm, _, _ = logreg_loss_grad(X, y_onehot, Wm, b, 0.05)
            fd = (lp - lm) / (2 * eps)
            assert grad_w[idx] == pytest.approx(fd, rel=1e-5)


# ---------------------------------------------------------------------- tune


def toy_docs(n=40):
    docs, labels = [], []
    for i in range(n):
        if i % 2:
            docs.append(["alpha", "common", f"w{i % 5}"])
            labels.append("A")
        else:
            docs.append(["beta", "common", f"w{i % 5}"])
            labels.append("B")
    return docs, labels


def test_tune_grid_of_one():
    docs, labels = toy_docs()
    point = GridPoint(VectorizerConfig(), Hyperparams())
    best, score = tune(docs, labels, docs, labels, [point])
    assert best is point
    assert score == 1.0


def test_tune_empty_grid_rejected():
    docs, labels = toy_docs()
    with pytest.raises(TextclfError):
        tune(docs, labels, docs, labels, [])


def test_tune_tie_break_prefers_smaller():
    docs, labels = toy_docs()
    big = GridPoint(VectorizerConfig(1, 2, 50000), Hyperparams())
    small = GridPoint(VectorizerConfig(1, 1, 5000), Hyperparams())
    best, _ = tune(docs, labels, docs, labels, [big, small])
    assert best is small


def test_tune_prefers_strictly_dominant():
    docs, labels = toy_docs()
    # max_features=1 keeps only the shared token: useless features
    weak = GridPoint(VectorizerConfig(1, 1, 1), Hyperparams())
    strong = GridPoint(VectorizerConfig(1, 1, 1000), Hyperparams())
    best, _ = tune(docs, labels, docs, labels, [weak, strong])
    assert best is strong


def test_train_and_eval_returns_three_models():
    docs, labels = toy_docs()
    vocab = fit_vectorizer(docs, VectorizerConfig())
    X = transform(docs, vocab)
    result = train_and_eval(X, labels, X, labels, Hyperparams())
    assert set(result.per_model) == {"naive_bayes", "logreg", "tree"}
    assert result.averaged == pytest.approx(sum(result.per_model.values()) / 3)
