"""Spanish Snowball stemmer.

Strips attached pronouns after gerund/infinitive endings, then standard
suffixes (``ación``, ``idad``, ``mente``, ...), then verb suffixes in two
waves (``y``-initial forms after ``u``, then the general conjugation
table), and finally residual vowels. Acute accents are removed as stems
are produced.
"""

from __future__ import annotations

from textprep.stemmers._snowball import r1r2_standard, rv_standard

_VOWELS = "aeiouáéíóúü"

_STEP0 = (
    "selas", "selos", "sela", "selo",
    "las", "les", "los", "nos",
    "me", "se", "la", "le", "lo",
)
_STEP0_PRECEDING = (
    "ando", "ándo", "ar", "ár", "er", "ér",
    "iendo", "iéndo", "ir", "ír",
)
_STEP1 = (
    "amientos", "imientos", "amiento", "imiento",
    "acion", "aciones", "uciones", "adoras", "adores", "ancias",
    "logías", "encias", "amente", "idades", "anzas", "ismos",
    "ables", "ibles", "istas", "adora", "ación", "antes",
    "ancia", "logía", "ución", "encia", "mente", "anza",
    "icos", "icas", "ismo", "able", "ible", "ista", "osos", "osas",
    "ador", "ante", "idad", "ivas", "ivos", "ico", "ica", "oso",
    "osa", "iva", "ivo",
)
_STEP2A = (
    "yeron", "yendo", "yamos", "yais", "yan", "yen", "yas", "yes",
    "ya", "ye", "yo", "yó",
)
_STEP2B = (
    "aríamos", "eríamos", "iríamos",
    "iéramos", "iésemos",
    "aríais", "aremos", "eríais", "eremos", "iríais",
    "iremos", "ierais", "ieseis", "asteis", "isteis",
    "ábamos", "áramos", "ásemos",
    "arían", "arías", "aréis",
    "erían", "erías", "eréis",
    "irían", "irías", "iréis",
    "ieran", "iesen", "ieron", "iendo", "ieras", "ieses",
    "abais", "arais", "aseis", "éamos",
    "arán", "arás", "aría",
    "erán", "erás", "ería",
    "irán", "irás", "iría",
    "iera", "iese", "aste", "iste", "aban", "aran", "asen", "aron",
    "ando", "abas", "adas", "idas", "aras", "ases", "íais",
    "ados", "idos", "amos", "imos", "emos",
    "ará", "aré", "erá", "eré", "irá", "iré",
    "aba", "ada", "ida", "ara", "ase", "ían", "ado", "ido",
    "ías", "áis", "éis", "ía",
    "ad", "ed", "id", "an", "ió", "ar", "er", "ir", "as",
    "ís", "en", "es",
)
_STEP3 = ("os", "a", "e", "o", "á", "é", "í", "ó")


def _unaccent(text: str) -> str:
    return (
        text.replace("á", "a")
        .replace("é", "e")
        .replace("í", "i")
        .replace("ó", "o")
        .replace("ú", "u")
    )


def stem(word: str) -> str:
    """Stem a single lowercase Spanish word."""
    word = word.lower()

    r1, r2 = r1r2_standard(word, _VOWELS)
    rv = rv_standard(word, _VOWELS)

    step1_success = False

    for suffix in _STEP0:
        if not (word.endswith(suffix) and rv.endswith(suffix)):
            continue
        if rv[: -len(suffix)].endswith(_STEP0_PRECEDING) or (
            rv[: -len(suffix)].endswith("yendo")
            and word[: -len(suffix)].endswith("uyendo")
        ):
            word = _unaccent(word[: -len(suffix)])
            r1 = _unaccent(r1[: -len(suffix)])
            r2 = _unaccent(r2[: -len(suffix)])
            rv = _unaccent(rv[: -len(suffix)])
        break

    for suffix in _STEP1:
        if not word.endswith(suffix):
            continue
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
        elif r2.endswith(suffix):
            step1_success = True
            if suffix in (
                "adora", "ador", "ación", "adoras", "adores",
                "acion", "aciones", "ante", "antes", "ancia", "ancias",
            ):
                word = word[: -len(suffix)]
                r2 = r2[: -len(suffix)]
                rv = rv[: -len(suffix)]
                if r2.endswith("ic"):
                    word = word[:-2]
                    rv = rv[:-2]
            elif suffix in ("logía", "logías"):
                word = word[: -len(suffix)] + "log"
                rv = rv[: -len(suffix)] + "log"
            elif suffix in ("ución", "uciones"):
                word = word[: -len(suffix)] + "u"
                rv = rv[: -len(suffix)] + "u"
            elif suffix in ("encia", "encias"):
                word = word[: -len(suffix)] + "ente"
                rv = rv[: -len(suffix)] + "ente"
            elif suffix == "mente":
                word = word[:-5]
                r2 = r2[:-5]
                rv = rv[:-5]
                if r2.endswith(("ante", "able", "ible")):
                    word = word[:-4]
                    rv = rv[:-4]
            elif suffix in ("idad", "idades"):
                word = word[: -len(suffix)]
                r2 = r2[: -len(suffix)]
                rv = rv[: -len(suffix)]
                for pre_suff in ("abil", "ic", "iv"):
                    if r2.endswith(pre_suff):
                        word = word[: -len(pre_suff)]
                        rv = rv[: -len(pre_suff)]
            elif suffix in ("ivo", "iva", "ivos", "ivas"):
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
        for suffix in _STEP2A:
            if rv.endswith(suffix) and word[-len(suffix) - 1 : -len(suffix)] == "u":
                word = word[: -len(suffix)]
                rv = rv[: -len(suffix)]
                break

        for suffix in _STEP2B:
            if rv.endswith(suffix):
                word = word[: -len(suffix)]
                rv = rv[: -len(suffix)]
                if suffix in ("en", "es", "éis", "emos"):
                    if word.endswith("gu"):
                        word = word[:-1]
                    if rv.endswith("gu"):
                        rv = rv[:-1]
                break

    for suffix in _STEP3:
        if rv.endswith(suffix):
            word = word[: -len(suffix)]
            if suffix in ("e", "é"):
                rv = rv[: -len(suffix)]
                if word[-2:] == "gu" and rv.endswith("u"):
                    word = word[:-1]
            break

    return _unaccent(word)
