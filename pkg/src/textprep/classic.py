"""Traditional preprocessing: stopword removal, stemming, lemmatization.

Wordlists ship with the package as versioned data files: one stopword list
and negation lexicon per language, a lemma lookup table (surface -> ordered
candidate lemmas) and ordered suffix fallback rules. Sentiment-style tasks
retain the negation lexicon during stopword removal.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from textprep.corpus import LANGUAGES
from textprep.stemmers import StemmerId, stem as stem_word
from textprep.tokenize import (
    KIND_WORD,
    TokenSequence,
    replace_surface,
)

# task kinds whose stopword handling retains the negation lexicon
# (the social-media classification tasks; news-style tasks do not)
SENTIMENT_TASKS = frozenset(
    {"sentiment", "sentiment_analysis", "emotion", "emoji", "irony", "hate", "offensive"}
)

_MIN_RULE_RESULT = 3  # suffix rules must leave at least this many characters


class WordlistError(FileNotFoundError):
    """Raised when a bundled wordlist is missing."""


@dataclass(frozen=True)
class StopwordInventory:
    language: str
    words: frozenset[str]
    retained: frozenset[str] = frozenset()

    @property
    def effective(self) -> frozenset[str]:
        return self.words - self.retained

    def __contains__(self, norm: str) -> bool:
        return norm in self.effective


@dataclass(frozen=True)
class LemmaTable:
    language: str
    entries: dict[str, tuple[str, ...]]
    suffix_rules: tuple[tuple[str, str], ...]

    def lemma(self, norm: str) -> str:
        candidates = self.entries.get(norm)
        if candidates:
            return candidates[0]
        for pattern, replacement in self.suffix_rules:
            if norm.endswith(pattern) and len(norm) > len(pattern):
                result = norm[: -len(pattern)] + replacement
                if len(result) >= _MIN_RULE_RESULT and result != norm:
                    return result
        return norm


def _data_root() -> Path:
    return Path(str(resources.files("textprep").joinpath("data")))


def _read_lines(relative: str) -> list[str]:
    path = _data_root() / relative
    if not path.is_file():
        raise WordlistError(f"missing bundled wordlist: {path}")
    lines = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def load_stopwords(language: str, task: str = "") -> StopwordInventory:
    """Load the stopword inventory; sentiment tasks retain negation words."""
    if language not in LANGUAGES:
        raise WordlistError(f"unknown language code: {language!r}")
    words = frozenset(w.lower() for w in _read_lines(f"stopwords/{language}.txt"))
    retained: frozenset[str] = frozenset()
    if task.lower() in SENTIMENT_TASKS:
        negations = frozenset(w.lower() for w in _read_lines(f"negation/{language}.txt"))
        retained = words & negations
    return StopwordInventory(language=language, words=words, retained=retained)


def load_lemma_table(language: str) -> LemmaTable:
    if language not in LANGUAGES:
        raise WordlistError(f"unknown language code: {language!r}")
    entries: dict[str, list[str]] = {}
    for line in _read_lines(f"lemmas/{language}.tsv"):
        surface, _, lemmas = line.partition("\t")
        if not lemmas:
            continue
        bucket = entries.setdefault(surface.lower(), [])
        for lemma in lemmas.split(","):
            lemma = lemma.strip().lower()
            if lemma and lemma not in bucket:
                bucket.append(lemma)
    rules: list[tuple[str, str]] = []
    for line in _read_lines(f"lemma_rules/{language}.tsv"):
        pattern, _, replacement = line.partition("\t")
        rules.append((pattern.strip(), replacement.strip()))
    rules.sort(key=lambda pr: -len(pr[0]))  # longest pattern first, stable
    return LemmaTable(
        language=language,
        entries={k: tuple(v) for k, v in entries.items()},
        suffix_rules=tuple(rules),
    )


def load_wordlists(language: str, task: str = "") -> tuple[StopwordInventory, LemmaTable]:
    """Load the stopword inventory and lemma table for a language/task."""
    return load_stopwords(language, task), load_lemma_table(language)


def remove_stopwords(seq: TokenSequence, inv: StopwordInventory) -> TokenSequence:
    """Drop word tokens whose norm is in the effective inventory."""
    kept = tuple(
        t for t in seq if not (t.kind == KIND_WORD and t.norm in inv.effective)
    )
    return TokenSequence(kept)


def stem(word: str, algo: StemmerId) -> str:
    """Stem one lowercase word with the requested algorithm."""
    return stem_word(word, algo)


def stem_sequence(seq: TokenSequence, algo: StemmerId) -> TokenSequence:
    """Map the stemmer over word tokens; other tokens pass through."""
    out = []
    for t in seq:
        if t.kind == KIND_WORD:
            out.append(replace_surface(t, stem_word(t.norm, algo)))
        else:
            out.append(t)
    return TokenSequence(tuple(out))


def lemmatize(seq: TokenSequence, table: LemmaTable) -> TokenSequence:
    """Replace word tokens by their first candidate lemma (or rule output)."""
    out = []
    for t in seq:
        if t.kind == KIND_WORD:
            out.append(replace_surface(t, table.lemma(t.norm)))
        else:
            out.append(t)
    return TokenSequence(tuple(out))
