"""Bag-of-words TF-IDF and three from-scratch classifiers.

The vectorizer uses the smooth idf variant ``ln((1+N)/(1+df)) + 1`` with
raw term counts and L2 normalization. Classifiers: multinomial Naive Bayes
with additive smoothing, multinomial softmax regression trained by
full-batch gradient descent with L2 penalty, and a CART decision tree on
Gini impurity. All training is deterministic given the inputs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse


class TextclfError(ValueError):
    pass


@dataclass(frozen=True)
class VectorizerConfig:
    ngram_min: int = 1
    ngram_max: int = 1
    max_features: int = 20000

    def __post_init__(self):
        if not (1 <= self.ngram_min <= self.ngram_max <= 3):
            raise TextclfError("ngram range must satisfy 1 <= min <= max <= 3")
        if self.max_features < 1:
            raise TextclfError("max_features must be >= 1")


@dataclass
class Vocabulary:
    config: VectorizerConfig
    index: dict[str, int]
    doc_freq: np.ndarray
    idf: np.ndarray
    n_docs: int

    def as_dict(self) -> dict:
        return {
            "version": 1,
            "config": {
                "ngram_min": self.config.ngram_min,
                "ngram_max": self.config.ngram_max,
                "max_features": self.config.max_features,
            },
            "n_docs": self.n_docs,
            "terms": sorted(self.index, key=self.index.get),
            "doc_freq": self.doc_freq.tolist(),
            "idf": self.idf.tolist(),
        }


def _ngrams(tokens: list[str], lo: int, hi: int) -> list[str]:
    grams = []
    for n in range(lo, hi + 1):
        for i in range(len(tokens) - n + 1):
            grams.append("_".join(tokens[i : i + n]))
    return grams


def fit_vectorizer(docs: list[list[str]], config: VectorizerConfig) -> Vocabulary:
    """Build the vocabulary from tokenized documents.

    Keeps the ``max_features`` n-grams with the highest document frequency
    (ties broken lexicographically) and fits smooth idf weights.
    """
    if not docs or all(len(d) == 0 for d in docs):
        raise TextclfError("cannot fit a vectorizer on an empty corpus")
    df: dict[str, int] = {}
    for tokens in docs:
        for gram in set(_ngrams(tokens, config.ngram_min, config.ngram_max)):
            df[gram] = df.get(gram, 0) + 1
    ranked = sorted(df.items(), key=lambda kv: (-kv[1], kv[0]))[: config.max_features]
    terms = sorted(gram for gram, _ in ranked)
    index = {gram: i for i, gram in enumerate(terms)}
    n = len(docs)
    doc_freq = np.array([df[g] for g in terms], dtype=np.int64)
    idf = np.log((1.0 + n) / (1.0 + doc_freq)) + 1.0
    return Vocabulary(config=config, index=index, doc_freq=doc_freq, idf=idf, n_docs=n)


def transform(docs: list[list[str]], vocab: Vocabulary) -> sparse.csr_matrix:
    """TF-IDF transform with L2 normalization; OOV n-grams are ignored."""
    cfg = vocab.config
    indptr = [0]
    indices: list[int] = []
    data: list[float] = []
    for tokens in docs:
        counts: dict[int, int] = {}
        for gram in _ngrams(tokens, cfg.ngram_min, cfg.ngram_max):
            col = vocab.index.get(gram)
            if col is not None:
                counts[col] = counts.get(col, 0) + 1
        cols = sorted(counts)
        weights = [counts[c] * vocab.idf[c] for c in cols]
        norm = math.sqrt(sum(w * w for w in weights))
        if norm > 0:
            weights = [w / norm for w in weights]
        indices.extend(cols)
        data.extend(weights)
        indptr.append(len(indices))
    matrix = sparse.csr_matrix(
        (np.array(data), np.array(indices, dtype=np.int32), np.array(indptr, dtype=np.int32)),
        shape=(len(docs), len(vocab.index)),
    )
    return matrix


# --------------------------------------------------------------- classifiers


@dataclass
class NaiveBayesModel:
    classes: list[str]
    log_prior: np.ndarray
    log_likelihood: np.ndarray  # (n_classes, n_features)

    def predict(self, X: sparse.csr_matrix) -> list[str]:
        scores = X @ self.log_likelihood.T + self.log_prior
        return [self.classes[i] for i in np.asarray(scores).argmax(axis=1)]


def train_nb(X: sparse.csr_matrix, y: list[str], alpha: float = 1.0) -> NaiveBayesModel:
    classes = sorted(set(y))
    if len(classes) < 2:
        raise TextclfError("training requires at least 2 classes")
    y_idx = np.array([classes.index(label) for label in y])
    n_classes = len(classes)
    n_features = X.shape[1]
    log_prior = np.log(np.bincount(y_idx, minlength=n_classes) / len(y))
    likelihood = np.zeros((n_classes, n_features))
    for c in range(n_classes):
        counts = np.asarray(X[y_idx == c].sum(axis=0)).ravel()
        smoothed = counts + alpha
        likelihood[c] = np.log(smoothed / smoothed.sum())
    return NaiveBayesModel(classes=classes, log_prior=log_prior, log_likelihood=likelihood)


@dataclass
class LogisticModel:
    classes: list[str]
    weights: np.ndarray  # (n_features, n_classes)
    bias: np.ndarray
    iterations: int = 0

    def predict(self, X: sparse.csr_matrix) -> list[str]:
        scores = np.asarray(X @ self.weights) + self.bias
        return [self.classes[i] for i in scores.argmax(axis=1)]


def _softmax(z: np.ndarray) -> np.ndarray:
    z = z - z.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def logreg_loss_grad(
    X: sparse.csr_matrix,
    y_onehot: np.ndarray,
    weights: np.ndarray,
    bias: np.ndarray,
    l2: float,
) -> tuple[float, np.ndarray, np.ndarray]:
    """Mean cross-entropy with L2 penalty on weights (not bias), and grads."""
    n = X.shape[0]
    probs = _softmax(np.asarray(X @ weights) + bias)
    eps = 1e-12
    loss = -np.sum(y_onehot * np.log(probs + eps)) / n + 0.5 * l2 * float(np.sum(weights**2))
    delta = (probs - y_onehot) / n
    grad_w = np.asarray(X.T @ delta) + l2 * weights
    grad_b = delta.sum(axis=0)
    return float(loss), grad_w, grad_b


def train_logreg(
    X: sparse.csr_matrix,
    y: list[str],
    l2: float = 0.01,
    learning_rate: float = 1.0,
    max_iter: int = 500,
    tol: float = 1e-6,
) -> LogisticModel:
    """Full-batch gradient descent to a gradient-norm tolerance."""
    classes = sorted(set(y))
    if len(classes) < 2:
        raise TextclfError("training requires at least 2 classes")
    y_idx = np.array([classes.index(label) for label in y])
    n_classes = len(classes)
    y_onehot = np.zeros((len(y), n_classes))
    y_onehot[np.arange(len(y)), y_idx] = 1.0
    weights = np.zeros((X.shape[1], n_classes))
    bias = np.zeros(n_classes)
    iterations = 0
    for iterations in range(1, max_iter + 1):
        _, grad_w, grad_b = logreg_loss_grad(X, y_onehot, weights, bias, l2)
        gnorm = math.sqrt(float(np.sum(grad_w**2)) + float(np.sum(grad_b**2)))
        if gnorm < tol:
            break
        weights -= learning_rate * grad_w
        bias -= learning_rate * grad_b
    return LogisticModel(classes=classes, weights=weights, bias=bias, iterations=iterations)


@dataclass
class _TreeNode:
    feature: int = -1
    threshold: float = 0.0
    left: "_TreeNode | None" = None
    right: "_TreeNode | None" = None
    prediction: int = 0

    @property
    def is_leaf(self) -> bool:
        return self.left is None


@dataclass
class DecisionTreeModel:
    classes: list[str]
    root: _TreeNode
    max_depth: int | None
    min_leaf: int

    def predict(self, X: sparse.csr_matrix) -> list[str]:
        dense = np.asarray(X.todense())
        out = []
        for row in dense:
            node = self.root
            while not node.is_leaf:
                node = node.left if row[node.feature] <= node.threshold else node.right
            out.append(self.classes[node.prediction])
        return out


def _gini(counts: np.ndarray) -> float:
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts / total
    return 1.0 - float(np.sum(p * p))


def _best_split(X: np.ndarray, y_idx: np.ndarray, n_classes: int, min_leaf: int):
    """Best (feature, threshold) by weighted Gini; None when no split helps.

    Thresholds are midpoints between consecutive distinct sorted values.
    Ties prefer the lowest feature index, then the lowest threshold.
    """
    n, m = X.shape
    parent_counts = np.bincount(y_idx, minlength=n_classes)
    best = None
    best_score = math.inf  # children never exceed parent impurity, so any
    # valid split is acceptable; pure nodes are filtered by the caller
    for feature in range(m):
        values = X[:, feature]
        order = np.argsort(values, kind="stable")
        sorted_vals = values[order]
        sorted_y = y_idx[order]
        left_counts = np.zeros(n_classes)
        right_counts = parent_counts.astype(float).copy()
        for i in range(n - 1):
            c = sorted_y[i]
            left_counts[c] += 1
            right_counts[c] -= 1
            if sorted_vals[i] == sorted_vals[i + 1]:
                continue
            n_left = i + 1
            n_right = n - n_left
            if n_left < min_leaf or n_right < min_leaf:
                continue
            score = (n_left * _gini(left_counts) + n_right * _gini(right_counts)) / n
            if score < best_score - 1e-12:
                best_score = score
                threshold = (sorted_vals[i] + sorted_vals[i + 1]) / 2.0
                best = (feature, float(threshold))
    return best


def _grow(X, y_idx, n_classes, depth, max_depth, min_leaf) -> _TreeNode:
    counts = np.bincount(y_idx, minlength=n_classes)
    prediction = int(counts.argmax())
    node = _TreeNode(prediction=prediction)
    if (
        len(y_idx) < 2 * min_leaf
        or (max_depth is not None and depth >= max_depth)
        or _gini(counts) == 0.0
    ):
        return node
    split = _best_split(X, y_idx, n_classes, min_leaf)
    if split is None:
        return node
    feature, threshold = split
    mask = X[:, feature] <= threshold
    node.feature = feature
    node.threshold = threshold
    node.left = _grow(X[mask], y_idx[mask], n_classes, depth + 1, max_depth, min_leaf)
    node.right = _grow(X[~mask], y_idx[~mask], n_classes, depth + 1, max_depth, min_leaf)
    return node


def train_tree(
    X: sparse.csr_matrix,
    y: list[str],
    max_depth: int | None = 25,
    min_leaf: int = 1,
) -> DecisionTreeModel:
    classes = sorted(set(y))
    if len(classes) < 2:
        raise TextclfError("training requires at least 2 classes")
    y_idx = np.array([classes.index(label) for label in y])
    dense = np.asarray(X.todense())
    root = _grow(dense, y_idx, len(classes), 0, max_depth, min_leaf)
    return DecisionTreeModel(classes=classes, root=root, max_depth=max_depth, min_leaf=min_leaf)


# ------------------------------------------------------------------- metrics


def micro_f1(y_true: list[str], y_pred: list[str]) -> float:
    """Micro-averaged F1 over classes (pooled TP/FP/FN)."""
    if len(y_true) != len(y_pred):
        raise TextclfError("prediction length mismatch")
    if not y_true:
        raise TextclfError("empty evaluation set")
    classes = sorted(set(y_true) | set(y_pred))
    tp = fp = fn = 0
    for c in classes:
        for t, p in zip(y_true, y_pred):
            if p == c and t == c:
                tp += 1
            elif p == c and t != c:
                fp += 1
            elif p != c and t == c:
                fn += 1
    if tp == 0:
        return 0.0
    precision = tp / (tp + fp)
    recall = tp / (tp + fn)
    return 2 * precision * recall / (precision + recall)


@dataclass
class Hyperparams:
    nb_alpha: float = 1.0
    logreg_l2: float = 0.01
    tree_depth: int | None = 25

    def as_dict(self) -> dict:
        return {"nb_alpha": self.nb_alpha, "logreg_l2": self.logreg_l2,
                "tree_depth": self.tree_depth}


@dataclass
class EvalResult:
    per_model: dict[str, float]
    averaged: float
    confusion: dict[str, dict[str, int]] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"per_model": dict(self.per_model), "averaged": self.averaged,
                "confusion": self.confusion}


def train_and_eval(
    X_train: sparse.csr_matrix,
    y_train: list[str],
    X_test: sparse.csr_matrix,
    y_test: list[str],
    params: Hyperparams,
) -> EvalResult:
    """Train the three models and micro-F1 them on the test split."""
    nb = train_nb(X_train, y_train, alpha=params.nb_alpha)
    lr = train_logreg(X_train, y_train, l2=params.logreg_l2)
    tree = train_tree(X_train, y_train, max_depth=params.tree_depth)
    per_model = {
        "naive_bayes": micro_f1(y_test, nb.predict(X_test)),
        "logreg": micro_f1(y_test, lr.predict(X_test)),
        "tree": micro_f1(y_test, tree.predict(X_test)),
    }
    confusion: dict[str, dict[str, int]] = {}
    for t, p in zip(y_test, nb.predict(X_test)):
        confusion.setdefault(t, {}).setdefault(p, 0)
        confusion[t][p] += 1
    return EvalResult(
        per_model=per_model,
        averaged=sum(per_model.values()) / len(per_model),
        confusion=confusion,
    )


@dataclass(frozen=True)
class GridPoint:
    vectorizer: VectorizerConfig
    params: Hyperparams


def default_grid() -> list[GridPoint]:
    points = []
    for ngram_max in (1, 2):
        for max_features in (5000, 20000, 50000):
            for alpha in (0.5, 1.0):
                for l2 in (0.01, 0.1):
                    for depth in (10, 25, None):
                        points.append(
                            GridPoint(
                                VectorizerConfig(1, ngram_max, max_features),
                                Hyperparams(alpha, l2, depth),
                            )
                        )
    return points


def tune(
    train_docs: list[list[str]],
    y_train: list[str],
    val_docs: list[list[str]],
    y_val: list[str],
    grid: list[GridPoint],
) -> tuple[GridPoint, float]:
    """Grid search maximizing averaged micro-F1 on the validation split.

    Ties prefer the lowest max_features, then the smallest n-gram range,
    then the grid order.
    """
    if not grid:
        raise TextclfError("empty hyperparameter grid")
    best: tuple[float, int, int, int] | None = None
    best_point = None
    for order, point in enumerate(grid):
        vocab = fit_vectorizer(train_docs, point.vectorizer)
        X_train = transform(train_docs, vocab)
        X_val = transform(val_docs, vocab)
        result = train_and_eval(X_train, y_train, X_val, y_val, point.params)
        ngram_span = point.vectorizer.ngram_max - point.vectorizer.ngram_min
        key = (-result.averaged, point.vectorizer.max_features, ngram_span, order)
        if best is None or key < best:
            best = key
            best_point = point
    return best_point, -best[0]


def save_model_json(path, vocab: Vocabulary, result: EvalResult) -> None:
    """Versioned JSON artifact for inspection (not a stability contract)."""
    payload = {"vocabulary": vocab.as_dict(), "eval": result.as_dict()}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
