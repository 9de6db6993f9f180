"""Italian Snowball stemmer.

Normalizes acute accents to grave, marks ``u`` after ``q`` and
intervocalic ``u``/``i`` as consonants, strips attached pronouns, then
standard and verb suffixes, and finally trims residual vowels and
``ch``/``gh`` endings.
"""

from __future__ import annotations

from textprep.stemmers._snowball import r1r2_standard, rv_standard

_VOWELS = "aeiouàèìòù"

_STEP0 = (
    "gliela", "gliele", "glieli", "glielo", "gliene",
    "sene", "mela", "mele", "meli", "melo", "mene",
    "tela", "tele", "teli", "telo", "tene",
    "cela", "cele", "celi", "celo", "cene",
    "vela", "vele", "veli", "velo", "vene",
    "gli", "ci", "la", "le", "li", "lo", "mi", "ne", "si", "ti", "vi",
)
_STEP1 = (
    "atrice", "atrici", "azione", "azioni", "uzione", "uzioni",
    "usione", "usioni", "amento", "amenti", "imento", "imenti",
    "amente", "abile", "abili", "ibile", "ibili", "mente",
    "atore", "atori", "logia", "logie",
    "anza", "anze", "iche", "ichi", "ismo", "ismi", "ista", "iste", "isti",
    "istà", "istè", "istì", "ante", "anti", "enza", "enze",
    "ico", "ici", "ica", "ice", "oso", "osi", "osa", "ose",
    "ità", "ivo", "ivi", "iva", "ive",
)
_STEP2 = (
    "erebbero", "irebbero", "assero", "assimo", "eranno", "erebbe",
    "eremmo", "ereste", "eresti", "essero", "iranno", "irebbe", "iremmo",
    "ireste", "iresti", "iscano", "iscono", "issero",
    "arono", "avamo", "avano", "avate", "eremo", "erete", "erono",
    "evamo", "evano", "evate", "iremo", "irete", "irono",
    "ivamo", "ivano", "ivate",
    "ammo", "ando", "asse", "assi", "emmo", "enda", "ende", "endi",
    "endo", "erai", "erei", "Yamo", "iamo", "immo", "irai", "irei",
    "isca", "isce", "isci", "isco",
    "ano", "are", "ata", "ate", "ati", "ato", "ava", "avi", "avo",
    "erà", "ere", "erò", "ete", "eva", "evi", "evo",
    "irà", "ire", "irò", "ita", "ite", "iti", "ito",
    "iva", "ivi", "ivo", "ono", "uta", "ute", "uti", "uto", "ar", "ir",
)


def _replace(text: str, suffix: str, new: str) -> str:
    return text[: -len(suffix)] + new


def stem(word: str) -> str:
    """Stem a single lowercase Italian word."""
    word = word.lower()
    word = (
        word.replace("á", "à")
        .replace("é", "è")
        .replace("í", "ì")
        .replace("ó", "ò")
        .replace("ú", "ù")
    )

    for i in range(1, len(word)):
        if word[i - 1] == "q" and word[i] == "u":
            word = word[:i] + "U" + word[i + 1 :]
    for i in range(1, len(word) - 1):
        if word[i - 1] in _VOWELS and word[i + 1] in _VOWELS:
            if word[i] == "u":
                word = word[:i] + "U" + word[i + 1 :]
            elif word[i] == "i":
                word = word[:i] + "I" + word[i + 1 :]

    r1, r2 = r1r2_standard(word, _VOWELS)
    rv = rv_standard(word, _VOWELS)

    step1_success = False

    for suffix in _STEP0:
        if rv.endswith(suffix):
            if rv[-len(suffix) - 4 : -len(suffix)] in ("ando", "endo"):
                word = word[: -len(suffix)]
                r1 = r1[: -len(suffix)]
                r2 = r2[: -len(suffix)]
                rv = rv[: -len(suffix)]
            elif rv[-len(suffix) - 2 : -len(suffix)] in ("ar", "er", "ir"):
                word = _replace(word, suffix, "e")
                r1 = _replace(r1, suffix, "e")
                r2 = _replace(r2, suffix, "e")
                rv = _replace(rv, suffix, "e")
            break

    for suffix in _STEP1:
        if word.endswith(suffix):
            if suffix == "amente" and r1.endswith(suffix):
                step1_success = True
                word = word[:-6]
                r2 = r2[:-6]
                rv = rv[:-6]
                if r2.endswith("iv"):
                    word = word[:-2]
                    r2 = r2[:-2]
                    rv = rv[:-2]
                    if r2.endswith("at"):
                        word = word[:-2]
                        rv = rv[:-2]
                elif r2.endswith(("os", "ic")):
                    word = word[:-2]
                    rv = rv[:-2]
                elif r2.endswith("abil"):
                    word = word[:-4]
                    rv = rv[:-4]
            elif suffix in ("amento", "amenti", "imento", "imenti") and rv.endswith(suffix):
                step1_success = True
                word = word[:-6]
                rv = rv[:-6]
            elif r2.endswith(suffix):
                step1_success = True
                if suffix in ("azione", "azioni", "atore", "atori"):
                    word = word[: -len(suffix)]
                    r2 = r2[: -len(suffix)]
                    rv = rv[: -len(suffix)]
                    if r2.endswith("ic"):
                        word = word[:-2]
                        rv = rv[:-2]
                elif suffix in ("logia", "logie"):
                    word = word[:-2]
                    rv = word[:-2]
                elif suffix in ("uzione", "uzioni", "usione", "usioni"):
                    word = word[:-5]
                    rv = rv[:-5]
                elif suffix in ("enza", "enze"):
                    word = _replace(word, suffix, "te")
                    rv = _replace(rv, suffix, "te")
                elif suffix == "ità":
                    word = word[:-3]
                    r2 = r2[:-3]
                    rv = rv[:-3]
                    if r2.endswith(("ic", "iv")):
                        word = word[:-2]
                        rv = rv[:-2]
                    elif r2.endswith("abil"):
                        word = word[:-4]
                        rv = rv[:-4]
                elif suffix in ("ivo", "ivi", "iva", "ive"):
                    word = word[:-3]
                    r2 = r2[:-3]
                    rv = rv[:-3]
                    if r2.endswith("at"):
                        word = word[:-2]
                        r2 = r2[:-2]
                        rv = rv[:-2]
                        if r2.endswith("ic"):
                            word = word[:-2]
                            rv = rv[:-2]
                else:
                    word = word[: -len(suffix)]
                    rv = rv[: -len(suffix)]
            break

    if not step1_success:
        for suffix in _STEP2:
            if rv.endswith(suffix):
                word = word[: -len(suffix)]
                rv = rv[: -len(suffix)]
                break

    if rv.endswith(("a", "e", "i", "o", "à", "è", "ì", "ò")):
        word = word[:-1]
        rv = rv[:-1]
        if rv.endswith("i"):
            word = word[:-1]
            rv = rv[:-1]

    if rv.endswith(("ch", "gh")):
        word = word[:-1]

    return word.replace("I", "i").replace("U", "u")
