"""Regenerate the bundled fixture pack.

Writes the two small labeled tweet corpora, the larger live-probe corpus,
the simulated-LLM response cache used by replay runs, and audits that every
fixture word's classic transforms stay above the alignment similarity
floor (so echo runs produce exact agreement values).

Run from the repository root: python tools/make_fixtures.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from textprep import classic
from textprep.agreement import pair_score
from textprep.llmproc import cache_key, load_template
from textprep.pipeline import PreprocessSpec, apply_classic_chain
from textprep.stemmers import StemmerId
from textprep.tokenize import KIND_WORD, render_tokens, tokenize

FIXTURES = ROOT / "src/textprep/data/fixtures"
MODEL = "sim-llm-1"
TEMPERATURE = 0.7
CREATED = "2026-01-01T00:00:00Z"

EN_TWEETS = [
    ("positive", "I love this new phone, the camera is amazing! #tech"),
    ("positive", "This movie made my day, such a lovely story and great acting"),
    ("negative", "I hate waiting for the bus in the rain, so annoying"),
    ("negative", "The update broke my favorite app and I am not happy about it"),
    ("positive", "What a beautiful morning for running in the park #fitness"),
    ("positive", "The concert tonight is going to be incredible, I love this band"),
    ("negative", "My laptop crashed again and I lost all the files"),
    ("negative", "This restaurant is not worth the price, the food tasted awful"),
    ("positive", "Loving the sunshine today, perfect weather for a picnic with friends"),
    ("positive", "The new album from this artist is pure joy, I loved every song"),
    ("negative", "Customer service kept me waiting for hours, not impressed at all"),
    ("negative", "The hotel room smelled bad and the staff ignored every user complaint"),
    ("positive", "Finally finished my project and the results look fantastic #winning"),
    ("positive", "My friends surprised me with tickets to the game, I am so excited"),
    ("negative", "Traffic this morning ruined my mood, honking everywhere and no patience"),
    ("negative", "The airline lost my luggage again, this is not acceptable"),
    ("positive", "Reading a wonderful book by the fire, cozy evening at home"),
    ("positive", "The team played brilliantly tonight and the fans loved it"),
    ("negative", "Every user hates the new interface, it keeps crashing on launch"),
    ("negative", "The coffee here tastes burnt and the service is painfully slow"),
]

IT_TWEETS = [
    ("positive", "Adoro questa canzone, la voce del cantante mi piace tanto #musica"),
    ("positive", "Che giornata meravigliosa, il sole splende e il mare sembra bellissimo"),
    ("negative", "Odio la pioggia di novembre, rovina sempre i miei piani"),
    ("negative", "Il treno arriva in ritardo anche oggi, servizio davvero pessimo"),
    ("positive", "Il nuovo film mi piace moltissimo, attori bravissimi e storia emozionante"),
    ("positive", "Mangio una pizza fantastica con gli amici stasera #cena"),
    ("negative", "La connessione non funziona da ore, voglio un rimborso subito"),
    ("negative", "Questo telefono si blocca sempre, non compro mai questa marca"),
    ("positive", "Amo viaggiare in primavera, i fiori colorano tutte le strade"),
    ("negative", "Il ristorante costa troppo e il cameriere ignora ogni cliente"),
]

LIVE_SUBJECTS = [
    "this phone", "the new cafe", "my commute", "the weather", "this app",
    "the football match", "my vacation", "the service here", "this playlist",
    "the conference", "my garden", "the traffic", "this recipe", "the wifi",
    "my weekend",
]
LIVE_POS = ["is absolutely wonderful", "makes me smile every time",
            "exceeded all my expectations", "feels like pure joy"]
LIVE_NEG = ["is a complete disappointment", "ruins my whole day",
            "keeps letting me down", "makes me want to scream"]


def write_jsonl(path: Path, rows: list[dict]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    print(f"wrote {path} ({len(rows)} rows)")


def corpora() -> None:
    write_jsonl(FIXTURES / "tweets_en.jsonl",
                [{"text": t, "label": l} for l, t in EN_TWEETS])
    write_jsonl(FIXTURES / "tweets_it.jsonl",
                [{"text": t, "label": l} for l, t in IT_TWEETS])
    rows = []
    for i in range(60):
        subject = LIVE_SUBJECTS[i % len(LIVE_SUBJECTS)]
        if i % 2 == 0:
            text = f"Honestly {subject} {LIVE_POS[i % len(LIVE_POS)]} #goodvibes"
            label = "positive"
        else:
            text = f"Honestly {subject} {LIVE_NEG[i % len(LIVE_NEG)]} and I am not amused"
            label = "negative"
        rows.append({"text": text, "label": label})
    write_jsonl(FIXTURES / "live_probe_en.jsonl", rows)


# ------------------------------------------------------- simulated LLM

def simulate(text: str, operation: str, language: str, prompt_language: str,
             doc_index: int, inv, table) -> str:
    """Deterministic pseudo-LLM: classic preprocessing with scripted
    imperfections (misses a stopword now and then, drops the word "user",
    stems inconsistently across documents)."""
    tokens = tokenize(text)

    def sw(tokens):
        kept = []
        missed_budget = 1 if doc_index % 3 == 0 else 0
        if prompt_language != "en":
            missed_budget += 1
        for t in tokens:
            if t.kind == KIND_WORD and t.norm in inv.effective:
                if missed_budget > 0:
                    missed_budget -= 1
                    kept.append(t)  # the model fails to remove this one
                continue
            if t.kind == KIND_WORD and t.norm == "user":
                continue  # context-driven removal of a non-stopword
            kept.append(t)
        return type(tokens)(tuple(kept))

    def lem(tokens):
        out = []
        deviations = {"crashing": "crash", "waiting": "wait", "splende": "splendere"}
        for t in tokens:
            if t.kind == KIND_WORD:
                surface = deviations.get(t.norm) or table.lemma(t.norm)
                out.append(t.__class__(surface, surface.lower(), t.start, t.end, t.kind))
            else:
                out.append(t)
        return type(tokens)(tuple(out))

    def st(tokens):
        if language == "en":
            algo = StemmerId("lancaster") if doc_index % 3 == 0 else StemmerId("porter")
        else:
            algo = StemmerId("snowball", language)
        out = []
        for i, t in enumerate(tokens):
            if t.kind == KIND_WORD:
                if language != "en" and doc_index % 3 == 0 and i % 4 == 0:
                    stemmed = t.norm  # inconsistently left unstemmed
                else:
                    from textprep.stemmers import stem as stem_word
                    stemmed = stem_word(t.norm, algo)
                out.append(t.__class__(stemmed, stemmed.lower(), t.start, t.end, t.kind))
            else:
                out.append(t)
        return type(tokens)(tuple(out))

    if operation == "stopword_removal":
        tokens = sw(tokens)
    elif operation == "lemmatization":
        tokens = lem(tokens)
    elif operation == "stemming":
        tokens = st(tokens)
    elif operation == "stopword_removal_lemmatization":
        tokens = sw(lem(tokens))
    else:  # stopword_removal_stemming
        tokens = st(sw(tokens))
    body = render_tokens(tokens)
    if doc_index % 5 == 0:
        return f"```\n{body}\n```"
    if doc_index % 7 == 0:
        return f"Here is the result:\n{body}"
    return body


def build_cache() -> None:
    operations = [
        "stopword_removal", "lemmatization", "stemming",
        "stopword_removal_lemmatization", "stopword_removal_stemming",
    ]
    datasets = [
        ("en", EN_TWEETS, ["en"], "detecting the sentiment of a tweet (positive, negative or neutral)"),
        ("it", IT_TWEETS, ["en", "it"], "detecting the sentiment of a tweet (positive, negative or neutral)"),
    ]
    records = []
    seen = set()
    for language, tweets, plangs, task_context in datasets:
        inv, table = classic.load_wordlists(language, "sentiment")
        for plang in plangs:
            for operation in operations:
                template = load_template(operation, plang, task_context=task_context, sentiment=True)
                for idx, (_, text) in enumerate(tweets):
                    prompt = template.render(text)
                    key = cache_key(MODEL, prompt, TEMPERATURE)
                    if key in seen:
                        continue
                    seen.add(key)
                    response = simulate(text, operation, language, plang, idx, inv, table)
                    records.append(
                        {
                            "key": key,
                            "model": MODEL,
                            "temperature": TEMPERATURE,
                            "prompt": prompt,
                            "response": response,
                            "created_at": CREATED,
                        }
                    )
    path = FIXTURES / "cache_sim.jsonl"
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    print(f"wrote {path} ({len(records)} entries)")


def audit_alignment() -> None:
    """Every classic transform of every fixture word must align, so the
    traditional-echo run yields exact 100/0 values."""
    problems = []
    for language, tweets in (("en", EN_TWEETS), ("it", IT_TWEETS)):
        inv, table = classic.load_wordlists(language, "sentiment")
        algos = (
            [StemmerId("porter"), StemmerId("lancaster"), StemmerId("snowball", "en")]
            if language == "en"
            else [StemmerId("snowball", language)]
        )
        for _, text in tweets:
            for t in tokenize(text):
                if t.kind != KIND_WORD:
                    continue
                candidates = [table.lemma(t.norm)]
                from textprep.stemmers import stem as stem_word
                candidates += [stem_word(t.norm, algo) for algo in algos]
                for out in candidates:
                    if pair_score(t.norm, out) < 1:
                        problems.append((language, t.norm, out))
    if problems:
        for p in problems:
            print("ALIGNMENT PROBLEM:", p)
        raise SystemExit(1)
    print("alignment audit OK")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    corpora()
    audit_alignment()
    build_cache()


if __name__ == "__main__":
    main()
