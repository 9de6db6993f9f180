"""Portuguese Snowball stemmer.

Rewrites the nasal vowels ``ã``/``õ`` to the working forms ``a~``/``o~``
before region computation, strips standard then verb suffixes, handles the
``ção``-family endings, and restores the nasal vowels at the end.
"""

from __future__ import annotations

from textprep.stemmers._snowball import r1r2_standard, rv_standard

_VOWELS = "aeiouáéíóúâêô"

_STEP1 = (
    "amentos", "imentos", "uço~es", "amento", "imento",
    "adoras", "adores", "aço~es", "logias", "ências", "amente",
    "idades", "anças", "ismos", "istas", "adora", "aça~o",
    "antes", "ância", "logia", "uça~o", "ência", "mente",
    "idade", "ança", "ezas", "icos", "icas", "ismo", "ável",
    "ível", "ista", "osos", "osas", "ador", "ante", "ivas", "ivos",
    "iras", "eza", "ico", "ica", "oso", "osa", "iva", "ivo", "ira",
)
_STEP2 = (
    "aríamos", "eríamos", "iríamos",
    "ássemos", "êssemos", "íssemos",
    "aríeis", "eríeis", "iríeis",
    "ásseis", "ésseis", "ísseis",
    "áramos", "éramos", "íramos", "ávamos",
    "aremos", "eremos", "iremos",
    "ariam", "eriam", "iriam", "assem", "essem", "issem",
    "ara~o", "era~o", "ira~o", "arias", "erias", "irias",
    "ardes", "erdes", "irdes", "asses", "esses", "isses",
    "astes", "estes", "istes",
    "áreis", "areis", "éreis", "ereis", "íreis", "ireis",
    "áveis", "íamos",
    "armos", "ermos", "irmos",
    "aria", "eria", "iria", "asse", "esse", "isse", "aste", "este", "iste",
    "arei", "erei", "irei", "aram", "eram", "iram", "avam",
    "arem", "erem", "irem", "ando", "endo", "indo",
    "adas", "idas", "arás", "aras", "erás", "eras", "irás",
    "avas", "ares", "eres", "ires", "íeis", "ados", "idos",
    "ámos", "amos", "emos", "imos", "iras",
    "ada", "ida", "ará", "ara", "erá", "era", "irá",
    "ava", "iam", "ado", "ido", "ias", "ais", "eis", "ira",
    "ia", "ei", "am", "em", "ar", "er", "ir", "as", "es", "is",
    "eu", "iu", "ou",
)
_STEP4 = ("os", "a", "i", "o", "á", "í", "ó")


def _replace(text: str, suffix: str, new: str) -> str:
    return text[: -len(suffix)] + new


def stem(word: str) -> str:
    """Stem a single lowercase Portuguese word."""
    word = word.lower()
    word = (
        word.replace("ã", "a~")
        .replace("õ", "o~")
        .replace("qü", "qu")
        .replace("gü", "gu")
    )

    r1, r2 = r1r2_standard(word, _VOWELS)
    rv = rv_standard(word, _VOWELS)

    step1_success = False
    step2_success = False

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
                elif r2.endswith(("os", "ic", "ad")):
                    word = word[:-2]
                    rv = rv[:-2]
            elif (
                suffix in ("ira", "iras")
                and rv.endswith(suffix)
                and word[-len(suffix) - 1 : -len(suffix)] == "e"
            ):
                step1_success = True
                word = _replace(word, suffix, "ir")
                rv = _replace(rv, suffix, "ir")
            elif r2.endswith(suffix):
                step1_success = True
                if suffix in ("logia", "logias"):
                    word = _replace(word, suffix, "log")
                    rv = _replace(rv, suffix, "log")
                elif suffix in ("uça~o", "uço~es"):
                    word = _replace(word, suffix, "u")
                    rv = _replace(rv, suffix, "u")
                elif suffix in ("ência", "ências"):
                    word = _replace(word, suffix, "ente")
                    rv = _replace(rv, suffix, "ente")
                elif suffix == "mente":
                    word = word[:-5]
                    r2 = r2[:-5]
                    rv = rv[:-5]
                    if r2.endswith(("ante", "avel", "ivel")):
                        word = word[:-4]
                        rv = rv[:-4]
                elif suffix in ("idade", "idades"):
                    word = word[: -len(suffix)]
                    r2 = r2[: -len(suffix)]
                    rv = rv[: -len(suffix)]
                    if r2.endswith(("ic", "iv")):
                        word = word[:-2]
                        rv = rv[:-2]
                    elif r2.endswith("abil"):
                        word = word[:-4]
                        rv = rv[:-4]
                elif suffix in ("iva", "ivo", "ivas", "ivos"):
                    word = word[: -len(suffix)]
                    r2 = r2[: -len(suffix)]
                    rv = rv[: -len(suffix)]
                    if r2.endswith("at"):
                        word = word[:-2]
                        rv = rv[:-2]
                else:
                    word = word[: -len(suffix)]
                    rv = rv[: -len(suffix)]
            break

    if not step1_success:
        for suffix in _STEP2:
            if rv.endswith(suffix):
                step2_success = True
                word = word[: -len(suffix)]
                rv = rv[: -len(suffix)]
                break

    if step1_success or step2_success:
        if rv.endswith("i") and word[-2] == "c":
            word = word[:-1]
            rv = rv[:-1]

    if not step1_success and not step2_success:
        for suffix in _STEP4:
            if rv.endswith(suffix):
                word = word[: -len(suffix)]
                rv = rv[: -len(suffix)]
                break

    if rv.endswith(("e", "é", "ê")):
        word = word[:-1]
        rv = rv[:-1]
        if (word.endswith("gu") and rv.endswith("u")) or (
            word.endswith("ci") and rv.endswith("i")
        ):
            word = word[:-1]
    elif word.endswith("ç"):
        word = word[:-1] + "c"

    return word.replace("a~", "ã").replace("o~", "õ")
