"""Lancaster (Paice/Husk) stemmer.

An iterative stemmer driven by the published rule table. Each rule is
written back-to-front as ``<reversed ending><intact?><remove><append><cont>``:
``"dei3y>"`` means "if the word ends in *ied*, remove three letters, append
*y*, and keep iterating". ``*`` restricts a rule to words that are still
intact (no rule applied yet), ``.`` terminates instead of ``>``.

A rule fires only if the result stays pronounceable: words starting with a
vowel must keep at least two letters, words starting with a consonant at
least three, of which the second or third must be a vowel (``y`` counts).
"""

from __future__ import annotations

import re

RULES = (
    "ai*2.", "a*1.",
    "bb1.",
    "city3s.", "ci2>", "cn1t>",
    "dd1.", "dei3y>", "deec2ss.", "dee1.", "de2>", "dooh4>",
    "e1>",
    "feil1v.", "fi2>",
    "gni3>", "gai3y.", "ga2>", "gg1.",
    "ht*2.", "hsiug5ct.", "hsi3>",
    "i*1.", "i1y>",
    "ji1d.", "juf1s.", "ju1d.", "jo1d.", "jeh1r.", "jrev1t.", "jsim2t.",
    "jn1d.", "j1s.",
    "lbaifi6.", "lbai4y.", "lba3>", "lbi3.", "lib2l>", "lc1.", "lufi4y.",
    "luf3>", "lu2.", "lai3>", "lau3>", "la2>", "ll1.",
    "mui3.", "mu*2.", "msi3>", "mm1.",
    "nois4j>", "noix4ct.", "noi3>", "nai3>", "na2>", "nee0.", "ne2>", "nn1.",
    "pihs4>", "pp1.",
    "re2>", "rae0.", "ra2.", "ro2>", "ru2>", "rr1.", "rt1>", "rei3y>",
    "sei3y>", "sis2.", "si2>", "ssen4>", "ss0.", "suo3>", "su*2.", "s*1>",
    "s0.",
    "tacilp4y.", "ta2>", "tnem4>", "tne3>", "tna3>", "tpir2b.", "tpro2b.",
    "tcud1.", "tpmus2.", "tpec2iv.", "tulo2v.", "tsis0.", "tsi3>", "tt1.",
    "uqi3.", "ugo1.",
    "vis3j>", "vie0.", "vi2>",
    "ylb1>", "yli3y>", "ylp0.", "yl2>", "ygo1.", "yhp1.", "ymo1.", "ypo1.",
    "yti3>", "yte3>", "ytl2.", "yrtsi5.", "yra3>", "yro3>", "yfi3.", "ycn2t>",
    "yca3>",
    "zi2>", "zy1s.",
)

_RULE_RE = re.compile(r"^([a-z]+)(\*?)(\d)([a-z]*)([>.]?)$")


def _parse_rules():
    table: dict[str, list[tuple[str, bool, int, str, bool]]] = {}
    for raw in RULES:
        m = _RULE_RE.match(raw)
        if m is None:
            raise ValueError(f"malformed stemming rule: {raw!r}")
        reversed_ending, intact, remove, append, cont = m.groups()
        ending = reversed_ending[::-1]
        table.setdefault(reversed_ending[0], []).append(
            (ending, bool(intact), int(remove), append, cont == ">")
        )
    return table


_TABLE = _parse_rules()
_VOWELS = "aeiouy"


def _acceptable(word: str, remove: int) -> bool:
    if word[0] in _VOWELS:
        return len(word) - remove >= 2
    if len(word) - remove < 3:
        return False
    return word[1] in _VOWELS or word[2] in _VOWELS


def stem(word: str) -> str:
    """Stem a single lowercase word."""
    word = word.lower()
    intact_word = word
    while word:
        bucket = _TABLE.get(word[-1])
        if bucket is None:
            break
        applied = False
        for ending, intact_only, remove, append, keep_going in bucket:
            if not word.endswith(ending):
                continue
            if intact_only and word != intact_word:
                continue
            if not _acceptable(word, remove):
                continue
            word = word[: len(word) - remove] + append
            applied = True
            if not keep_going:
                return word
            break
        if not applied:
            break
    return word
