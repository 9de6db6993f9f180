"""Stemming algorithms: Porter, Lancaster, and Snowball for six languages.

Each algorithm module exposes a pure ``stem(word) -> str`` over lowercase
words. The dispatch layer adds the identifier type used in configuration
and guards non-word input (anything with digits or punctuation passes
through unchanged; the English Snowball additionally accepts apostrophes,
which it strips itself).
"""

from __future__ import annotations

from dataclasses import dataclass

from textprep.stemmers import (
    lancaster,
    porter,
    snowball_de,
    snowball_en,
    snowball_es,
    snowball_fr,
    snowball_it,
    snowball_pt,
)

SNOWBALL_LANGUAGES = {
    "en": snowball_en.stem,
    "fr": snowball_fr.stem,
    "de": snowball_de.stem,
    "it": snowball_it.stem,
    "pt": snowball_pt.stem,
    "es": snowball_es.stem,
}

_APOSTROPHES = "'’‘‛"


@dataclass(frozen=True)
class StemmerId:
    """Identifies a stemming algorithm, with a language for Snowball."""

    name: str  # porter | lancaster | snowball
    language: str = "en"

    def __post_init__(self):
        if self.name not in ("porter", "lancaster", "snowball"):
            raise ValueError(f"unknown stemmer: {self.name!r}")
        if self.name == "snowball" and self.language not in SNOWBALL_LANGUAGES:
            raise ValueError(f"no snowball variant for language {self.language!r}")

    @classmethod
    def parse(cls, text: str, language: str = "en") -> "StemmerId":
        """Parse identifiers like ``porter`` or ``snowball:fr``."""
        name, _, lang = text.partition(":")
        return cls(name.strip(), lang.strip() or language)

    def __str__(self) -> str:
        if self.name == "snowball":
            return f"snowball:{self.language}"
        return self.name


def _is_stemmable(word: str, allow_apostrophe: bool) -> bool:
    if not word:
        return False
    for ch in word:
        if ch.isalpha():
            continue
        if allow_apostrophe and ch in _APOSTROPHES:
            continue
        return False
    return True


def stem(word: str, algo: StemmerId) -> str:
    """Apply a stemming algorithm to one lowercase word.

    Non-word input (containing digits or punctuation) is returned
    unchanged.
    """
    if algo.name == "porter":
        return porter.stem(word) if _is_stemmable(word, False) else word
    if algo.name == "lancaster":
        return lancaster.stem(word) if _is_stemmable(word, False) else word
    fn = SNOWBALL_LANGUAGES[algo.language]
    allow = algo.language == "en"
    return fn(word) if _is_stemmable(word, allow) else word


def english_stemmers() -> tuple[StemmerId, ...]:
    """The three algorithms reported for English."""
    return (
        StemmerId("porter"),
        StemmerId("lancaster"),
        StemmerId("snowball", "en"),
    )


def stemmers_for_language(language: str) -> tuple[StemmerId, ...]:
    """English gets all three algorithms, other languages Snowball only."""
    if language == "en":
        return english_stemmers()
    return (StemmerId("snowball", language),)
