"""Deterministic unicode tokenizer shared by all preprocessing backends.

Splits on whitespace, keeps URLs, hashtags and mentions whole, separates
punctuation runs, and splits apostrophe clitics ("he's" -> "he", "'s").
Offsets are byte positions into the UTF-8 encoding of the source text, so
``text.encode()[start:end]`` always reproduces the token surface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

KIND_WORD = "word"
KIND_NUMBER = "number"
KIND_PUNCT = "punct"
KIND_HASHTAG = "hashtag"
KIND_MENTION = "mention"
KIND_URL = "url"

_URL_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*://\S+$")
_NUMBER_RE = re.compile(r"^[0-9][0-9.,]*$")
_APOSTROPHES = "'’‘‛"


@dataclass(frozen=True)
class Token:
    surface: str
    norm: str
    start: int  # byte offset into the UTF-8 source
    end: int
    kind: str


@dataclass(frozen=True)
class TokenSequence:
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]

    def norms(self) -> list[str]:
        return [t.norm for t in self.tokens]


def _is_word_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_" or ch == "-"


def _classify(surface: str) -> str:
    if _URL_RE.match(surface):
        return KIND_URL
    if surface.startswith("#") and len(surface) > 1:
        return KIND_HASHTAG
    if surface.startswith("@") and len(surface) > 1:
        return KIND_MENTION
    if _NUMBER_RE.match(surface):
        return KIND_NUMBER
    if any(ch.isalnum() for ch in surface):
        return KIND_WORD
    return KIND_PUNCT


def _split_chunk(chunk: str) -> Iterable[str]:
    """Split one whitespace-delimited chunk into token pieces (tiling it)."""
    if _URL_RE.match(chunk):
        yield chunk
        return
    i = 0
    n = len(chunk)
    while i < n:
        ch = chunk[i]
        if ch in "#@" and i + 1 < n and _is_word_char(chunk[i + 1]):
            j = i + 1
            while j < n and _is_word_char(chunk[j]):
                j += 1
        elif _is_word_char(ch):
            j = i
            while j < n and (
                _is_word_char(chunk[j])
                or (
                    chunk[j] in ".,"
                    and j > i
                    and chunk[j - 1].isdigit()
                    and j + 1 < n
                    and chunk[j + 1].isdigit()
                )
            ):
                j += 1
        elif ch in _APOSTROPHES and i + 1 < n and chunk[i + 1].isalpha():
            # clitic piece: apostrophe plus the letters that follow
            j = i + 1
            while j < n and _is_word_char(chunk[j]):
                j += 1
        else:
            j = i
            while j < n and not _is_word_char(chunk[j]) and chunk[j] not in "#@":
                if chunk[j] in _APOSTROPHES and j + 1 < n and chunk[j + 1].isalpha():
                    break
                j += 1
            if j == i:
                j = i + 1
        yield chunk[i:j]
        i = j


def tokenize(text: str) -> TokenSequence:
    """Tokenize text into a TokenSequence with byte offsets."""
    tokens: list[Token] = []
    byte_pos = 0
    char_pos = 0
    for match in re.finditer(r"\S+", text):
        byte_pos += len(text[char_pos : match.start()].encode("utf-8"))
        for piece in _split_chunk(match.group()):
            nbytes = len(piece.encode("utf-8"))
            tokens.append(
                Token(
                    surface=piece,
                    norm=piece.lower(),
                    start=byte_pos,
                    end=byte_pos + nbytes,
                    kind=_classify(piece),
                )
            )
            byte_pos += nbytes
        char_pos = match.end()
    return TokenSequence(tuple(tokens))


def word_tokens(seq: TokenSequence) -> TokenSequence:
    """Keep only kind=word tokens."""
    return TokenSequence(tuple(t for t in seq if t.kind == KIND_WORD))


def metric_word_tokens(
    seq: TokenSequence,
    include_hashtags: bool = True,
    include_mentions: bool = False,
) -> TokenSequence:
    """Token filter used by the agreement metrics.

    Hashtags count as words by default (they carry content in tweets);
    mentions, URLs, numbers and punctuation do not.
    """
    kinds = {KIND_WORD}
    if include_hashtags:
        kinds.add(KIND_HASHTAG)
    if include_mentions:
        kinds.add(KIND_MENTION)
    return TokenSequence(tuple(t for t in seq if t.kind in kinds))


def render_tokens(seq: TokenSequence) -> str:
    """Render a (possibly transformed) token sequence as plain text."""
    return " ".join(t.surface for t in seq.tokens)


def replace_surface(token: Token, new_surface: str) -> Token:
    """Copy a token with a new surface, keeping provenance offsets."""
    return Token(
        surface=new_surface,
        norm=new_surface.lower(),
        start=token.start,
        end=token.end,
        kind=token.kind,
    )
