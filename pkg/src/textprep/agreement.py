"""Token alignment and agreement metrics between two preprocessing outputs.

The alignment is a global monotone matching maximizing the summed pair
scores, with gaps free:

* 3 if the two norms are equal
* 2 if one norm is a prefix of the other and they share >= 2 characters
* 1 if normalized edit similarity >= 0.5, where similarity is
  ``1 - levenshtein(a, b) / (len(a) + len(b))``
* otherwise the pair is left unmatched (a pair would score -1, which an
  optimal alignment never takes since skipping costs 0)

Metrics: SW (share of in-inventory stopwords removed), NSW (share of
non-stopwords removed), L and S (share of original word tokens transformed
exactly like the classic lemmatizer / a given stemmer; dropped tokens count
as mismatches). Corpus values average document scores with equal weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from textprep.classic import LemmaTable, StopwordInventory
from textprep.stemmers import StemmerId, stem as stem_word
from textprep.tokenize import KIND_WORD, TokenSequence

PAIR_EQUAL = 3
PAIR_PREFIX = 2
PAIR_SIMILAR = 1
SIMILARITY_THRESHOLD = 0.5


@dataclass(frozen=True)
class Alignment:
    pairs: tuple[tuple[int, int], ...]
    removed: tuple[int, ...]
    inserted: tuple[int, ...]


def levenshtein(a: str, b: str) -> int:
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (ca != cb),
                )
            )
        previous = current
    return previous[-1]


def pair_score(a: str, b: str) -> int:
    """Score for aligning two token norms; -1 means "leave unmatched"."""
    if a == b:
        return PAIR_EQUAL
    shorter, longer = (a, b) if len(a) <= len(b) else (b, a)
    if len(shorter) >= 2 and longer.startswith(shorter):
        return PAIR_PREFIX
    total = len(a) + len(b)
    if total and 1 - levenshtein(a, b) / total >= SIMILARITY_THRESHOLD:
        return PAIR_SIMILAR
    return -1


def align(orig: TokenSequence, out: TokenSequence) -> Alignment:
    """Optimal monotone alignment of two word-token sequences.

    Ties prefer pairs that occur earlier in both sequences.
    """
    a = orig.norms()
    b = out.norms()
    n, m = len(a), len(b)
    scores = [[pair_score(a[i], b[j]) for j in range(m)] for i in range(n)]

    # dp[i][j]: best score aligning a[i:] with b[j:]
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        row = dp[i]
        below = dp[i + 1]
        for j in range(m - 1, -1, -1):
            best = max(below[j], row[j + 1])
            s = scores[i][j]
            if s > 0:
                cand = s + below[j + 1]
                if cand > best:
                    best = cand
            row[j] = best

    pairs: list[tuple[int, int]] = []
    i = j = 0
    while i < n and j < m:
        s = scores[i][j]
        if s > 0 and dp[i][j] == s + dp[i + 1][j + 1]:
            pairs.append((i, j))
            i += 1
            j += 1
        elif dp[i][j] == dp[i + 1][j]:
            i += 1
        else:
            j += 1
    matched_a = {i for i, _ in pairs}
    matched_b = {j for _, j in pairs}
    return Alignment(
        pairs=tuple(pairs),
        removed=tuple(i for i in range(n) if i not in matched_a),
        inserted=tuple(j for j in range(m) if j not in matched_b),
    )


def alignment_score(alignment: Alignment, orig: TokenSequence, out: TokenSequence) -> int:
    a = orig.norms()
    b = out.norms()
    return sum(pair_score(a[i], b[j]) for i, j in alignment.pairs)


@dataclass
class DocumentAgreement:
    """Per-document agreement values; None marks an undefined rate."""

    sw_pct: float | None = None
    nsw_pct: float | None = None
    l_pct: float | None = None
    s_pct: dict[str, float] = field(default_factory=dict)
    s_any_pct: float | None = None


def stopword_metrics(
    orig: TokenSequence, out: TokenSequence, inv: StopwordInventory
) -> tuple[float | None, float | None]:
    """(sw_pct, nsw_pct) for one document; None when the rate is undefined.

    A document with no in-inventory words scores SW=100 only when nothing
    was removed at all; otherwise the rate is undefined and skipped from
    averaging (symmetrically for NSW).
    """
    alignment = align(orig, out)
    norms = orig.norms()
    removed = [norms[i] for i in alignment.removed]
    in_inv = [w for w in norms if w in inv]
    out_inv = [w for w in norms if w not in inv]
    removed_in = sum(1 for w in removed if w in inv)
    removed_out = len(removed) - removed_in

    if in_inv:
        sw = 100.0 * removed_in / len(in_inv)
    else:
        sw = 100.0 if not removed else None
    if out_inv:
        nsw = 100.0 * removed_out / len(out_inv)
    else:
        nsw = 0.0 if not removed else None
    return sw, nsw


def _transform_agreement(
    orig: TokenSequence, out: TokenSequence, expected: list[str]
) -> float:
    """Share of original tokens aligned to exactly the expected transform."""
    if len(orig) == 0:
        return 100.0
    alignment = align(orig, out)
    out_norms = out.norms()
    matched = dict(alignment.pairs)
    hits = 0
    for i in range(len(orig)):
        j = matched.get(i)
        if j is not None and out_norms[j] == expected[i]:
            hits += 1
    return 100.0 * hits / len(orig)


def _expected_transform(orig: TokenSequence, fn) -> list[str]:
    """Apply a word transform the way the classic operations do: word
    tokens are transformed, hashtags and other metric tokens pass through."""
    return [fn(t.norm) if t.kind == KIND_WORD else t.norm for t in orig]


def lemma_agreement(orig: TokenSequence, out: TokenSequence, table: LemmaTable) -> float:
    expected = _expected_transform(orig, table.lemma)
    return _transform_agreement(orig, out, expected)


def stem_agreement(
    orig: TokenSequence, out: TokenSequence, algos: list[StemmerId]
) -> tuple[dict[str, float], float]:
    """Per-algorithm agreement plus the share matching any algorithm."""
    per_algo: dict[str, float] = {}
    expected_by_algo = {}
    for algo in algos:
        expected = _expected_transform(orig, lambda w, a=algo: stem_word(w, a))
        expected_by_algo[str(algo)] = expected
        per_algo[str(algo)] = _transform_agreement(orig, out, expected)

    if len(orig) == 0:
        return per_algo, 100.0
    alignment = align(orig, out)
    out_norms = out.norms()
    matched = dict(alignment.pairs)
    hits = 0
    for i in range(len(orig)):
        j = matched.get(i)
        if j is None:
            continue
        if any(expected_by_algo[key][i] == out_norms[j] for key in expected_by_algo):
            hits += 1
    any_pct = 100.0 * hits / len(orig)
    return per_algo, any_pct


@dataclass
class AgreementReport:
    language: str
    documents: int
    sw_pct: float | None
    nsw_pct: float | None
    l_pct: float | None
    s_pct: dict[str, float]
    s_any_pct: float | None
    top_removed_non_stopwords: list[tuple[str, int]]
    stem_consistency: float
    stem_consistency_vacuous: bool
    per_document: list[DocumentAgreement] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "language": self.language,
            "documents": self.documents,
            "sw_pct": self.sw_pct,
            "nsw_pct": self.nsw_pct,
            "l_pct": self.l_pct,
            "s_pct": dict(self.s_pct),
            "s_any_pct": self.s_any_pct,
            "top_removed_non_stopwords": [list(x) for x in self.top_removed_non_stopwords],
            "stem_consistency": self.stem_consistency,
            "stem_consistency_vacuous": self.stem_consistency_vacuous,
        }


def _mean(values: list[float]) -> float | None:
    defined = [v for v in values if v is not None]
    if not defined:
        return None
    return sum(defined) / len(defined)


def aggregate(
    language: str,
    sw_docs: list[tuple[TokenSequence, TokenSequence]],
    lemma_docs: list[tuple[TokenSequence, TokenSequence]],
    stem_docs: list[tuple[TokenSequence, TokenSequence]],
    inv: StopwordInventory,
    table: LemmaTable,
    algos: list[StemmerId],
    top_k: int = 20,
) -> AgreementReport:
    """Compute the full agreement report over per-operation document pairs.

    Every metric averages over documents with equal weight; documents with
    an undefined rate are skipped for that metric only.
    """
    per_document: list[DocumentAgreement] = []
    sw_values: list[float | None] = []
    nsw_values: list[float | None] = []
    removal_counts: dict[str, int] = {}
    for orig, out in sw_docs:
        sw, nsw = stopword_metrics(orig, out, inv)
        sw_values.append(sw)
        nsw_values.append(nsw)
        alignment = align(orig, out)
        norms = orig.norms()
        for i in alignment.removed:
            if norms[i] not in inv:
                removal_counts[norms[i]] = removal_counts.get(norms[i], 0) + 1
        per_document.append(DocumentAgreement(sw_pct=sw, nsw_pct=nsw))

    l_values = [lemma_agreement(orig, out, table) for orig, out in lemma_docs]

    s_values: dict[str, list[float]] = {str(a): [] for a in algos}
    any_values: list[float] = []
    stem_outputs: dict[str, list[str]] = {}
    for orig, out in stem_docs:
        per_algo, any_pct = stem_agreement(orig, out, algos)
        for key, value in per_algo.items():
            s_values[key].append(value)
        any_values.append(any_pct)
        alignment = align(orig, out)
        out_norms = out.norms()
        norms = orig.norms()
        for i, j in alignment.pairs:
            stem_outputs.setdefault(norms[i], []).append(out_norms[j])

    repeated = {w: outs for w, outs in stem_outputs.items() if len(outs) >= 2}
    vacuous = not repeated
    if vacuous:
        consistency = 1.0
    else:
        consistent = sum(1 for outs in repeated.values() if len(set(outs)) == 1)
        consistency = consistent / len(repeated)

    top = sorted(removal_counts.items(), key=lambda kv: (-kv[1], kv[0]))[:top_k]

    n_docs = max(len(sw_docs), len(lemma_docs), len(stem_docs))
    return AgreementReport(
        language=language,
        documents=n_docs,
        sw_pct=_mean(sw_values),
        nsw_pct=_mean(nsw_values),
        l_pct=_mean(l_values),
        s_pct={key: _mean(vals) for key, vals in s_values.items()},
        s_any_pct=_mean(any_values),
        top_removed_non_stopwords=top,
        stem_consistency=consistency,
        stem_consistency_vacuous=vacuous,
        per_document=per_document,
    )
