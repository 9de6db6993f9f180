"""English Snowball stemmer (Porter2).

A successor to the original Porter algorithm with explicit R1/R2 regions,
apostrophe handling, a list of irregular or invariant word forms, and a
``y``/``Y`` marking pass that distinguishes consonant from vowel use.
"""

from __future__ import annotations

from textprep.stemmers._snowball import r1r2_standard

_VOWELS = "aeiouy"
_DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
_LI_ENDING = "cdeghkmnrt"

_STEP0 = ("'s'", "'s", "'")
_STEP1A = ("sses", "ied", "ies", "us", "ss", "s")
_STEP1B = ("eedly", "ingly", "edly", "eed", "ing", "ed")
_STEP2 = (
    "ization", "ational", "fulness", "ousness", "iveness", "tional",
    "biliti", "lessli", "entli", "ation", "alism", "aliti", "ousli",
    "iviti", "fulli", "enci", "anci", "abli", "izer", "ator", "alli",
    "bli", "ogi", "li",
)
_STEP3 = ("ational", "tional", "alize", "icate", "iciti", "ative", "ical", "ness", "ful")
_STEP4 = (
    "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent",
    "ism", "ate", "iti", "ous", "ive", "ize", "ion", "al", "er", "ic",
)

_SPECIAL = {
    "skis": "ski", "skies": "sky",
    "dying": "die", "lying": "lie", "tying": "tie",
    "idly": "idl", "gently": "gentl", "ugly": "ugli", "early": "earli",
    "only": "onli", "singly": "singl",
    "sky": "sky", "news": "news", "howe": "howe",
    "atlas": "atlas", "cosmos": "cosmos", "bias": "bias", "andes": "andes",
    "inning": "inning", "innings": "inning",
    "outing": "outing", "outings": "outing",
    "canning": "canning", "cannings": "canning",
    "herring": "herring", "herrings": "herring",
    "earring": "earring", "earrings": "earring",
    "proceed": "proceed", "proceeds": "proceed",
    "proceeded": "proceed", "proceeding": "proceed",
    "exceed": "exceed", "exceeds": "exceed",
    "exceeded": "exceed", "exceeding": "exceed",
    "succeed": "succeed", "succeeds": "succeed",
    "succeeded": "succeed", "succeeding": "succeed",
}


def _delete(word, r1, r2, n):
    return word[:-n], r1[:-n], r2[:-n]


def _replace(word, r1, r2, suffix, new, r2_default=""):
    n = len(suffix)
    word = word[:-n] + new
    r1 = r1[:-n] + new if len(r1) >= n else ""
    r2 = r2[:-n] + new if len(r2) >= n else r2_default
    return word, r1, r2


def stem(word: str) -> str:
    """Stem a single lowercase English word."""
    word = word.lower()
    if len(word) <= 2:
        return word
    if word in _SPECIAL:
        return _SPECIAL[word]

    word = word.replace("’", "'").replace("‘", "'").replace("‛", "'")
    if word.startswith("'"):
        word = word[1:]
    if word.startswith("y"):
        word = "Y" + word[1:]
    for i in range(1, len(word)):
        if word[i] == "y" and word[i - 1] in _VOWELS:
            word = word[:i] + "Y" + word[i + 1 :]

    # words with these openings get a fixed R1
    if word.startswith(("gener", "commun", "arsen")):
        r1 = word[6:] if word.startswith("commun") else word[5:]
        r2 = ""
        for i in range(1, len(r1)):
            if r1[i] not in _VOWELS and r1[i - 1] in _VOWELS:
                r2 = r1[i + 1 :]
                break
    else:
        r1, r2 = r1r2_standard(word, _VOWELS)

    for suffix in _STEP0:
        if word.endswith(suffix):
            word, r1, r2 = _delete(word, r1, r2, len(suffix))
            break

    for suffix in _STEP1A:
        if word.endswith(suffix):
            if suffix == "sses":
                word, r1, r2 = _delete(word, r1, r2, 2)
            elif suffix in ("ied", "ies"):
                cut = 2 if len(word[:-3]) > 1 else 1
                word, r1, r2 = _delete(word, r1, r2, cut)
            elif suffix == "s":
                if any(ch in _VOWELS for ch in word[:-2]):
                    word, r1, r2 = _delete(word, r1, r2, 1)
            break

    for suffix in _STEP1B:
        if word.endswith(suffix):
            if suffix in ("eed", "eedly"):
                if r1.endswith(suffix):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ee")
            elif any(ch in _VOWELS for ch in word[: -len(suffix)]):
                word, r1, r2 = _delete(word, r1, r2, len(suffix))
                if word.endswith(("at", "bl", "iz")):
                    word += "e"
                    r1 += "e"
                    if len(word) > 5 or len(r1) >= 3:
                        r2 += "e"
                elif word.endswith(_DOUBLES):
                    word, r1, r2 = _delete(word, r1, r2, 1)
                elif r1 == "" and (
                    (
                        len(word) >= 3
                        and word[-1] not in _VOWELS
                        and word[-1] not in "wxY"
                        and word[-2] in _VOWELS
                        and word[-3] not in _VOWELS
                    )
                    or (len(word) == 2 and word[0] in _VOWELS and word[1] not in _VOWELS)
                ):
                    word += "e"
            break

    if len(word) > 2 and word[-1] in "yY" and word[-2] not in _VOWELS:
        word = word[:-1] + "i"
        r1 = r1[:-1] + "i" if r1 else ""
        r2 = r2[:-1] + "i" if r2 else ""

    for suffix in _STEP2:
        if word.endswith(suffix):
            if r1.endswith(suffix):
                if suffix == "tional":
                    word, r1, r2 = _delete(word, r1, r2, 2)
                elif suffix in ("enci", "anci", "abli"):
                    word = word[:-1] + "e"
                    r1 = r1[:-1] + "e" if r1 else ""
                    r2 = r2[:-1] + "e" if r2 else ""
                elif suffix == "entli":
                    word, r1, r2 = _delete(word, r1, r2, 2)
                elif suffix in ("izer", "ization"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ize")
                elif suffix in ("ational", "ation", "ator"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ate", r2_default="e")
                elif suffix in ("alism", "aliti", "alli"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "al")
                elif suffix == "fulness":
                    word, r1, r2 = _delete(word, r1, r2, 4)
                elif suffix in ("ousli", "ousness"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ous")
                elif suffix in ("iveness", "iviti"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ive", r2_default="e")
                elif suffix in ("biliti", "bli"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ble")
                elif suffix == "ogi" and word[-4] == "l":
                    word, r1, r2 = _delete(word, r1, r2, 1)
                elif suffix in ("fulli", "lessli"):
                    word, r1, r2 = _delete(word, r1, r2, 2)
                elif suffix == "li" and word[-3] in _LI_ENDING:
                    word, r1, r2 = _delete(word, r1, r2, 2)
            break

    for suffix in _STEP3:
        if word.endswith(suffix):
            if r1.endswith(suffix):
                if suffix == "tional":
                    word, r1, r2 = _delete(word, r1, r2, 2)
                elif suffix == "ational":
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ate")
                elif suffix == "alize":
                    word, r1, r2 = _delete(word, r1, r2, 3)
                elif suffix in ("icate", "iciti", "ical"):
                    word, r1, r2 = _replace(word, r1, r2, suffix, "ic")
                elif suffix in ("ful", "ness"):
                    word, r1, r2 = _delete(word, r1, r2, len(suffix))
                elif suffix == "ative" and r2.endswith(suffix):
                    word, r1, r2 = _delete(word, r1, r2, 5)
            break

    for suffix in _STEP4:
        if word.endswith(suffix):
            if r2.endswith(suffix):
                if suffix == "ion":
                    if word[-4] in "st":
                        word, r1, r2 = _delete(word, r1, r2, 3)
                else:
                    word, r1, r2 = _delete(word, r1, r2, len(suffix))
            break

    if r2.endswith("l") and word[-2] == "l":
        word = word[:-1]
    elif r2.endswith("e"):
        word = word[:-1]
    elif r1.endswith("e"):
        if len(word) >= 4 and (
            word[-2] in _VOWELS
            or word[-2] in "wxY"
            or word[-3] not in _VOWELS
            or word[-4] in _VOWELS
        ):
            word = word[:-1]

    return word.replace("Y", "y")
