"""Text preprocessing toolkit: classic algorithms, LLM-backed preprocessing,
agreement metrics between the two, and downstream classification benchmarks.
"""

__version__ = "0.1.0"

from textprep.corpus import Document, SplitSpec, load_corpus, stratified_split
from textprep.tokenize import TokenSequence, tokenize, word_tokens
from textprep.classic import (
    LemmaTable,
    StopwordInventory,
    lemmatize,
    load_wordlists,
    remove_stopwords,
    stem_sequence,
)
from textprep.stemmers import StemmerId, stem

__all__ = [
    "Document",
    "SplitSpec",
    "load_corpus",
    "stratified_split",
    "TokenSequence",
    "tokenize",
    "word_tokens",
    "LemmaTable",
    "StopwordInventory",
    "lemmatize",
    "load_wordlists",
    "remove_stopwords",
    "stem_sequence",
    "StemmerId",
    "stem",
]
