"""Porter stemmer (1980), in the variant distributed by its author.

This follows the widely ported reference version of the algorithm, which
differs from the original journal text in three documented points:

* step 2 uses ``bli -> ble`` instead of ``abli -> able``
* step 2 gains the extra rule ``logi -> log``
* words of length 1 or 2 are returned unchanged

The measure ``m`` of a stem counts vowel-consonant alternations as defined
by the algorithm: a word has the form ``[C](VC){m}[V]`` where ``y`` counts
as a consonant only when not preceded by a consonant.
"""

from __future__ import annotations

_VOWELS = "aeiou"


class _Buffer:
    """Working word with the suffix-rule helpers the algorithm is built on."""

    def __init__(self, word: str):
        self.b = word
        self.k = len(word) - 1  # index of last letter under consideration
        self.j = 0  # index of last letter of the stem for a matched suffix

    def cons(self, i: int) -> bool:
        ch = self.b[i]
        if ch in _VOWELS:
            return False
        if ch == "y":
            return True if i == 0 else not self.cons(i - 1)
        return True

    def m(self) -> int:
        """Number of VC sequences in b[0..j]."""
        n = 0
        i = 0
        while True:
            if i > self.j:
                return n
            if not self.cons(i):
                break
            i += 1
        i += 1
        while True:
            while True:
                if i > self.j:
                    return n
                if self.cons(i):
                    break
                i += 1
            i += 1
            n += 1
            while True:
                if i > self.j:
                    return n
                if not self.cons(i):
                    break
                i += 1
            i += 1

    def vowel_in_stem(self) -> bool:
        return any(not self.cons(i) for i in range(self.j + 1))

    def double_cons(self, i: int) -> bool:
        if i < 1:
            return False
        return self.b[i] == self.b[i - 1] and self.cons(i)

    def cvc(self, i: int) -> bool:
        """consonant-vowel-consonant ending at i, last consonant not w/x/y."""
        if i < 2 or not self.cons(i) or self.cons(i - 1) or not self.cons(i - 2):
            return False
        return self.b[i] not in "wxy"

    def ends(self, suffix: str) -> bool:
        length = len(suffix)
        if length > self.k + 1 or self.b[self.k - length + 1 : self.k + 1] != suffix:
            return False
        self.j = self.k - length
        return True

    def set_to(self, text: str) -> None:
        self.b = self.b[: self.j + 1] + text
        self.k = self.j + len(text)

    def replace_if_m(self, text: str) -> None:
        if self.m() > 0:
            self.set_to(text)

    def word(self) -> str:
        return self.b[: self.k + 1]


def _step1ab(s: _Buffer) -> None:
    if s.b[s.k] == "s":
        if s.ends("sses"):
            s.k -= 2
        elif s.ends("ies"):
            s.set_to("i")
        elif s.b[s.k - 1] != "s":
            s.k -= 1
    if s.ends("eed"):
        if s.m() > 0:
            s.k -= 1
    elif (s.ends("ed") or s.ends("ing")) and s.vowel_in_stem():
        s.k = s.j
        if s.ends("at"):
            s.set_to("ate")
        elif s.ends("bl"):
            s.set_to("ble")
        elif s.ends("iz"):
            s.set_to("ize")
        elif s.double_cons(s.k):
            s.k -= 1
            if s.b[s.k] in "lsz":
                s.k += 1
        elif s.m() == 1 and s.cvc(s.k):
            s.j = s.k
            s.set_to("e")


def _step1c(s: _Buffer) -> None:
    if s.ends("y") and s.vowel_in_stem():
        s.b = s.b[: s.k] + "i" + s.b[s.k + 1 :]


_STEP2 = (
    ("ational", "ate"), ("tional", "tion"),
    ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"),
    ("bli", "ble"),
    ("alli", "al"), ("entli", "ent"), ("eli", "e"), ("ousli", "ous"),
    ("ization", "ize"), ("ation", "ate"), ("ator", "ate"),
    ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"), ("ousness", "ous"),
    ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    ("logi", "log"),
)

_STEP3 = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"),
    ("iciti", "ic"), ("ical", "ic"), ("ful", ""), ("ness", ""),
)


def _apply_pairs(s: _Buffer, pairs) -> None:
    for suffix, repl in pairs:
        if s.ends(suffix):
            s.replace_if_m(repl)
            return


_STEP4 = (
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant",
    "ement", "ment", "ent", "ion", "ou", "ism", "ate", "iti",
    "ous", "ive", "ize",
)


def _step4(s: _Buffer) -> None:
    for suffix in _STEP4:
        if s.ends(suffix):
            if suffix == "ion" and (s.j < 0 or s.b[s.j] not in "st"):
                continue
            if s.m() > 1:
                s.k = s.j
            return


def _step5(s: _Buffer) -> None:
    s.j = s.k
    if s.b[s.k] == "e":
        a = s.m()
        if a > 1 or (a == 1 and not s.cvc(s.k - 1)):
            s.k -= 1
    if s.b[s.k] == "l" and s.double_cons(s.k) and s.m() > 1:
        s.k -= 1


def stem(word: str) -> str:
    """Stem a single lowercase word."""
    word = word.lower()
    if len(word) <= 2:
        return word
    s = _Buffer(word)
    _step1ab(s)
    _step1c(s)
    _apply_pairs(s, _STEP2)
    _apply_pairs(s, _STEP3)
    _step4(s)
    _step5(s)
    return s.word()
