"""Preprocessing chains: the five operation combos over both backends.

A combo names which operations apply: stopword removal (SW), lemmatization
(L), stemming (S), or a combination. The classic backend applies the
operations sequentially; the LLM backend sends a single combined
instruction per combo. For SW+L the classic chain lemmatizes first and
removes stopwords last (lemma output such as "be" is itself a stopword);
for SW+S it removes stopwords first because stemmed forms no longer match
the inventory. Both orders are configurable and the applied order is
recorded in run reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from textprep.classic import (
    LemmaTable,
    StopwordInventory,
    lemmatize,
    remove_stopwords,
    stem_sequence,
)
from textprep.corpus import Document
from textprep.llmproc import (
    LlmConfig,
    PreprocessedText,
    PromptTemplate,
    ResponseCache,
    preprocess_llm,
)
from textprep.stemmers import StemmerId
from textprep.tokenize import TokenSequence, render_tokens, tokenize

COMBOS = ("SW", "SW+L", "L", "SW+S", "S")

# single-instruction prompt per combo for the LLM backend
LLM_OPERATION = {
    "SW": "stopword_removal",
    "L": "lemmatization",
    "S": "stemming",
    "SW+L": "stopword_removal_lemmatization",
    "SW+S": "stopword_removal_stemming",
}

DEFAULT_STOPWORDS_POSITION = {"SW+L": "last", "SW+S": "first"}


@dataclass(frozen=True)
class PreprocessSpec:
    """What to apply and through which backend."""

    combo: str
    backend: str  # classic | llm | echo
    language: str
    task: str = ""
    task_context: str = ""
    stemmer: StemmerId | None = None
    prompt_language: str = "en"
    stopwords_position: str | None = None  # first | last (classic chains)

    def __post_init__(self):
        if self.combo not in COMBOS:
            raise ValueError(f"unknown combo: {self.combo!r}")
        if self.backend not in ("classic", "llm", "echo"):
            raise ValueError(f"unknown backend: {self.backend!r}")
        if self.stopwords_position not in (None, "first", "last"):
            raise ValueError("stopwords_position must be 'first' or 'last'")

    @property
    def needs_stemmer(self) -> bool:
        return "S" in self.combo.replace("SW", "")  # SW+S and S

    def chain(self) -> tuple[str, ...]:
        """Classic operation order for this combo."""
        if self.combo == "SW":
            return ("stopword_removal",)
        if self.combo == "L":
            return ("lemmatization",)
        if self.combo == "S":
            return ("stemming",)
        op = "lemmatization" if self.combo == "SW+L" else "stemming"
        position = self.stopwords_position or DEFAULT_STOPWORDS_POSITION[self.combo]
        if position == "first":
            return ("stopword_removal", op)
        return (op, "stopword_removal")


def combo_stemmer(spec: PreprocessSpec) -> StemmerId:
    if spec.stemmer is not None:
        return spec.stemmer
    return StemmerId("snowball", spec.language)


def apply_classic_chain(
    tokens: TokenSequence,
    spec: PreprocessSpec,
    inv: StopwordInventory,
    table: LemmaTable,
) -> TokenSequence:
    out = tokens
    for op in spec.chain():
        if op == "stopword_removal":
            out = remove_stopwords(out, inv)
        elif op == "lemmatization":
            out = lemmatize(out, table)
        else:
            out = stem_sequence(out, combo_stemmer(spec))
    return out


def classic_text_transform(
    spec: PreprocessSpec, inv: StopwordInventory, table: LemmaTable
):
    """Text-to-text classic preprocessing (used by the echo backend)."""

    def transform(text: str) -> str:
        return render_tokens(apply_classic_chain(tokenize(text), spec, inv, table))

    return transform


def preprocess_document(
    doc: Document,
    spec: PreprocessSpec,
    inv: StopwordInventory,
    table: LemmaTable,
    config: LlmConfig | None = None,
    template: PromptTemplate | None = None,
    cache: ResponseCache | None = None,
    backend=None,
) -> PreprocessedText:
    """Preprocess one document according to the spec.

    The classic backend transforms tokens directly; llm and echo backends
    go through the prompt/caching path of ``preprocess_llm``.
    """
    if spec.backend == "classic":
        tokens = apply_classic_chain(tokenize(doc.text), spec, inv, table)
        return PreprocessedText(text=render_tokens(tokens), tokens=tokens)
    if config is None or template is None or cache is None or backend is None:
        raise ValueError("llm preprocessing needs config, template, cache and backend")
    if template.operation != LLM_OPERATION[spec.combo]:
        raise ValueError(
            f"template operation {template.operation!r} does not match combo {spec.combo!r}"
        )
    return preprocess_llm(doc, config, template, cache, backend)
