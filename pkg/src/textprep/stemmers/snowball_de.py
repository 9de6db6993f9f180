"""German Snowball stemmer.

Folds ``ß`` to ``ss`` and marks intervocalic ``u``/``y`` as consonants,
then strips declensional endings, verb endings, and derivational suffixes
(``ung``, ``heit``, ``keit``, ...). Umlauts are removed at the end.
"""

from __future__ import annotations

from textprep.stemmers._snowball import r1r2_standard

_VOWELS = "aeiouyäöü"
_S_ENDING = "bdfghklmnrt"
_ST_ENDING = "bdfghklmnt"

_STEP1 = ("ern", "em", "er", "en", "es", "e", "s")
_STEP2 = ("est", "en", "er", "st")
_STEP3 = ("isch", "lich", "heit", "keit", "end", "ung", "ig", "ik")


def stem(word: str) -> str:
    """Stem a single lowercase German word."""
    word = word.lower()
    word = word.replace("ß", "ss")

    for i in range(1, len(word) - 1):
        if word[i - 1] in _VOWELS and word[i + 1] in _VOWELS:
            if word[i] == "u":
                word = word[:i] + "U" + word[i + 1 :]
            elif word[i] == "y":
                word = word[:i] + "Y" + word[i + 1 :]

    r1, r2 = r1r2_standard(word, _VOWELS)

    # region before R1 must hold at least 3 letters
    for i in range(1, len(word)):
        if word[i] not in _VOWELS and word[i - 1] in _VOWELS:
            if 0 < len(word[: i + 1]) < 3:
                r1 = word[3:]
            break

    for suffix in _STEP1:
        if r1.endswith(suffix):
            if suffix in ("en", "es", "e") and word[-len(suffix) - 4 : -len(suffix)] == "niss":
                word = word[: -len(suffix) - 1]
                r1 = r1[: -len(suffix) - 1]
                r2 = r2[: -len(suffix) - 1]
            elif suffix == "s":
                if word[-2] in _S_ENDING:
                    word = word[:-1]
                    r1 = r1[:-1]
                    r2 = r2[:-1]
            else:
                word = word[: -len(suffix)]
                r1 = r1[: -len(suffix)]
                r2 = r2[: -len(suffix)]
            break

    for suffix in _STEP2:
        if r1.endswith(suffix):
            if suffix == "st":
                if word[-3] in _ST_ENDING and len(word[:-3]) >= 3:
                    word = word[:-2]
                    r1 = r1[:-2]
                    r2 = r2[:-2]
            else:
                word = word[: -len(suffix)]
                r1 = r1[: -len(suffix)]
                r2 = r2[: -len(suffix)]
            break

    for suffix in _STEP3:
        if r2.endswith(suffix):
            if suffix in ("end", "ung"):
                if (
                    "ig" in r2[-len(suffix) - 2 : -len(suffix)]
                    and "e" not in r2[-len(suffix) - 3 : -len(suffix) - 2]
                ):
                    word = word[: -len(suffix) - 2]
                else:
                    word = word[: -len(suffix)]
            elif suffix in ("ig", "ik", "isch"):
                if "e" not in r2[-len(suffix) - 1 : -len(suffix)]:
                    word = word[: -len(suffix)]
            elif suffix in ("lich", "heit"):
                if (
                    "er" in r1[-len(suffix) - 2 : -len(suffix)]
                    or "en" in r1[-len(suffix) - 2 : -len(suffix)]
                ):
                    word = word[: -len(suffix) - 2]
                else:
                    word = word[: -len(suffix)]
            elif suffix == "keit":
                if "lich" in r2[-len(suffix) - 4 : -len(suffix)]:
                    word = word[: -len(suffix) - 4]
                elif "ig" in r2[-len(suffix) - 2 : -len(suffix)]:
                    word = word[: -len(suffix) - 2]
                else:
                    word = word[: -len(suffix)]
            break

    return (
        word.replace("ä", "a")
        .replace("ö", "o")
        .replace("ü", "u")
        .replace("U", "u")
        .replace("Y", "y")
    )
