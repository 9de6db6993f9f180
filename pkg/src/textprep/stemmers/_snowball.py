"""Shared region machinery for the Snowball stemmer family.

The algorithms operate on three regions of the word:

* R1: everything after the first non-vowel that follows a vowel
* R2: the same definition applied again, inside R1
* RV: a language-tuned region used by the Romance-language algorithms

Regions are carried along as suffix strings of the word and trimmed in
lock-step with it, so ``r.endswith(suffix)`` answers "does the suffix lie
inside that region".
"""

from __future__ import annotations


def r1r2_standard(word: str, vowels: str) -> tuple[str, str]:
    r1 = ""
    r2 = ""
    for i in range(1, len(word)):
        if word[i] not in vowels and word[i - 1] in vowels:
            r1 = word[i + 1 :]
            break
    for i in range(1, len(r1)):
        if r1[i] not in vowels and r1[i - 1] in vowels:
            r2 = r1[i + 1 :]
            break
    return r1, r2


def rv_standard(word: str, vowels: str) -> str:
    rv = ""
    if len(word) >= 2:
        if word[1] not in vowels:
            for i in range(2, len(word)):
                if word[i] in vowels:
                    rv = word[i + 1 :]
                    break
        elif word[0] in vowels and word[1] in vowels:
            for i in range(2, len(word)):
                if word[i] not in vowels:
                    rv = word[i + 1 :]
                    break
        else:
            rv = word[3:]
    return rv
