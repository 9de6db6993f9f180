"""French Snowball stemmer.

Marks ``u``/``i`` between vowels, ``u`` after ``q``, and vowel-adjacent
``y`` as consonants (upper case) before region computation; strips standard
suffixes, then verb suffixes, then residual endings; finally undoubles and
un-accents the stem.
"""

from __future__ import annotations

from textprep.stemmers._snowball import r1r2_standard

_VOWELS = "aeiouyâàëéêèïîôûù"

_STEP1 = (
    "issements", "issement", "atrices", "atrice", "ateurs", "ations",
    "logies", "usions", "utions", "ements", "amment", "emment",
    "ances", "iqUes", "ismes", "ables", "istes",
    "ateur", "ation", "logie", "usion", "ution", "ences", "ement",
    "euses", "ments",
    "ance", "iqUe", "isme", "able", "iste", "ence", "ités", "ives",
    "eaux", "euse", "ment",
    "eux", "ité", "ive", "ifs", "aux", "if",
)
_STEP2A = (
    "issaIent", "issantes", "iraIent", "issante", "issants", "issions",
    "irions", "issais", "issait", "issant", "issent", "issiez", "issons",
    "irais", "irait", "irent", "iriez", "irons", "iront", "isses", "issez",
    "îmes", "îtes", "irai", "iras", "irez", "isse",
    "ies", "ira", "ît", "ie", "ir", "is", "it", "i",
)
_STEP2B = (
    "eraIent", "assions", "erions", "assent", "assiez", "èrent",
    "erais", "erait", "eriez", "erons", "eront", "aIent", "antes", "asses",
    "ions", "erai", "eras", "erez", "âmes", "âtes", "ante",
    "ants", "asse", "ées", "era", "iez", "ais", "ait", "ant",
    "ée", "és", "er", "ez", "ât", "ai", "as", "é", "a",
)
_STEP2B_ER = frozenset(
    ("eraIent", "erions", "èrent", "erais", "erait", "eriez", "erons",
     "eront", "erai", "eras", "erez", "ées", "era", "iez", "ée",
     "és", "er", "ez", "é")
)
_STEP2B_A = frozenset(
    ("assions", "assent", "assiez", "aIent", "antes", "asses", "âmes",
     "âtes", "ante", "ants", "asse", "ais", "ait", "ant", "ât",
     "ai", "as", "a")
)
_STEP4 = ("ière", "Ière", "ion", "ier", "Ier", "e", "ë")


def _rv_french(word: str) -> str:
    if len(word) < 2:
        return ""
    if word.startswith(("par", "col", "tap")) or (
        word[0] in _VOWELS and word[1] in _VOWELS
    ):
        return word[3:]
    for i in range(1, len(word)):
        if word[i] in _VOWELS:
            return word[i + 1 :]
    return ""


def _replace(text: str, suffix: str, new: str) -> str:
    return text[: -len(suffix)] + new


def stem(word: str) -> str:
    """Stem a single lowercase French word."""
    word = word.lower()

    for i in range(1, len(word)):
        if word[i - 1] == "q" and word[i] == "u":
            word = word[:i] + "U" + word[i + 1 :]
    for i in range(1, len(word) - 1):
        if word[i - 1] in _VOWELS and word[i + 1] in _VOWELS:
            if word[i] == "u":
                word = word[:i] + "U" + word[i + 1 :]
            elif word[i] == "i":
                word = word[:i] + "I" + word[i + 1 :]
        if word[i] == "y" and (word[i - 1] in _VOWELS or word[i + 1] in _VOWELS):
            word = word[:i] + "Y" + word[i + 1 :]

    r1, r2 = r1r2_standard(word, _VOWELS)
    rv = _rv_french(word)

    step1_success = False
    rv_ending_found = False
    step2a_success = False
    step2b_success = False

    for suffix in _STEP1:
        if not word.endswith(suffix):
            continue
        if suffix == "eaux":
            word = word[:-1]
            step1_success = True
        elif suffix in ("euse", "euses"):
            if suffix in r2:
                word = word[: -len(suffix)]
                step1_success = True
            elif suffix in r1:
                word = _replace(word, suffix, "eux")
                step1_success = True
        elif suffix in ("ement", "ements") and suffix in rv:
            word = word[: -len(suffix)]
            step1_success = True
            if word[-2:] == "iv" and "iv" in r2:
                word = word[:-2]
                if word[-2:] == "at" and "at" in r2:
                    word = word[:-2]
            elif word[-3:] == "eus":
                if "eus" in r2:
                    word = word[:-3]
                elif "eus" in r1:
                    word = word[:-1] + "x"
            elif word[-3:] in ("abl", "iqU"):
                if "abl" in r2 or "iqU" in r2:
                    word = word[:-3]
            elif word[-3:] in ("ièr", "Ièr"):
                if "ièr" in rv or "Ièr" in rv:
                    word = word[:-3] + "i"
        elif suffix == "amment" and suffix in rv:
            word = _replace(word, "amment", "ant")
            rv = _replace(rv, "amment", "ant")
            rv_ending_found = True
        elif suffix == "emment" and suffix in rv:
            word = _replace(word, "emment", "ent")
            rv_ending_found = True
        elif (
            suffix in ("ment", "ments")
            and suffix in rv
            and not rv.startswith(suffix)
            and rv[rv.rindex(suffix) - 1] in _VOWELS
        ):
            word = word[: -len(suffix)]
            rv = rv[: -len(suffix)]
            rv_ending_found = True
        elif suffix == "aux" and suffix in r1:
            word = word[:-2] + "l"
            step1_success = True
        elif (
            suffix in ("issement", "issements")
            and suffix in r1
            and word[-len(suffix) - 1] not in _VOWELS
        ):
            word = word[: -len(suffix)]
            step1_success = True
        elif (
            suffix in ("ance", "iqUe", "isme", "able", "iste", "eux",
                       "ances", "iqUes", "ismes", "ables", "istes")
            and suffix in r2
        ):
            word = word[: -len(suffix)]
            step1_success = True
        elif (
            suffix in ("atrice", "ateur", "ation", "atrices", "ateurs", "ations")
            and suffix in r2
        ):
            word = word[: -len(suffix)]
            step1_success = True
            if word[-2:] == "ic":
                if "ic" in r2:
                    word = word[:-2]
                else:
                    word = word[:-2] + "iqU"
        elif suffix in ("logie", "logies") and suffix in r2:
            word = _replace(word, suffix, "log")
            step1_success = True
        elif suffix in ("usion", "ution", "usions", "utions") and suffix in r2:
            word = _replace(word, suffix, "u")
            step1_success = True
        elif suffix in ("ence", "ences") and suffix in r2:
            word = _replace(word, suffix, "ent")
            step1_success = True
        elif suffix in ("ité", "ités") and suffix in r2:
            word = word[: -len(suffix)]
            step1_success = True
            if word[-4:] == "abil":
                if "abil" in r2:
                    word = word[:-4]
                else:
                    word = word[:-2] + "l"
            elif word[-2:] == "ic":
                if "ic" in r2:
                    word = word[:-2]
                else:
                    word = word[:-2] + "iqU"
            elif word[-2:] == "iv":
                if "iv" in r2:
                    word = word[:-2]
        elif suffix in ("if", "ive", "ifs", "ives") and suffix in r2:
            word = word[: -len(suffix)]
            step1_success = True
            if word[-2:] == "at" and "at" in r2:
                word = word[:-2]
                if word[-2:] == "ic":
                    if "ic" in r2:
                        word = word[:-2]
                    else:
                        word = word[:-2] + "iqU"
        break

    if not step1_success or rv_ending_found:
        for suffix in _STEP2A:
            if word.endswith(suffix):
                if (
                    suffix in rv
                    and len(rv) > len(suffix)
                    and rv[rv.rindex(suffix) - 1] not in _VOWELS
                ):
                    word = word[: -len(suffix)]
                    step2a_success = True
                break

        if not step2a_success:
            for suffix in _STEP2B:
                if rv.endswith(suffix):
                    if suffix == "ions" and "ions" in r2:
                        word = word[:-4]
                        step2b_success = True
                    elif suffix in _STEP2B_ER:
                        word = word[: -len(suffix)]
                        step2b_success = True
                    elif suffix in _STEP2B_A:
                        word = word[: -len(suffix)]
                        rv = rv[: -len(suffix)]
                        step2b_success = True
                        if rv.endswith("e"):
                            word = word[:-1]
                    break

    if step1_success or step2a_success or step2b_success:
        if word[-1] == "Y":
            word = word[:-1] + "i"
        elif word[-1] == "ç":
            word = word[:-1] + "c"
    else:
        if len(word) >= 2 and word[-1] == "s" and word[-2] not in "aiouès":
            word = word[:-1]
        for suffix in _STEP4:
            if word.endswith(suffix) and suffix in rv:
                if suffix == "ion" and suffix in r2 and len(rv) >= 4 and rv[-4] in "st":
                    word = word[:-3]
                elif suffix in ("ier", "ière", "Ier", "Ière"):
                    word = _replace(word, suffix, "i")
                elif suffix == "e":
                    word = word[:-1]
                elif suffix == "ë" and word[-3:-1] == "gu":
                    word = word[:-1]
                break

    if word.endswith(("enn", "onn", "ett", "ell", "eill")):
        word = word[:-1]

    for i in range(1, len(word)):
        if word[-i] in _VOWELS:
            if i != 1 and word[-i] in ("é", "è"):
                word = word[:-i] + "e" + word[len(word) - i + 1 :]
            break

    return word.replace("I", "i").replace("U", "u").replace("Y", "y")
