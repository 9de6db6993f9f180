import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest
from hypothesis import given, strategies as st

from textprep.corpus import Document
from textprep.llmproc import (
    CacheMissError,
    EchoBackend,
    HttpChatBackend,
    LlmConfig,
    LlmError,
    PromptTemplate,
    ReplayBackend,
    ResponseCache,
    cache_key,
    clean_response,
    complete,
    load_template,
    preprocess_corpus,
    preprocess_llm,
    render_prompt,
)


def template(body="Process this: `{paragraph}'. No notes.", operation="stopword_removal"):
    return PromptTemplate(operation=operation, language_of_prompt="en", task_context="", body=body)


# ------------------------------------------------------------------ prompts


def test_bundled_stopword_template_text():
    t = load_template(
        "stopword_removal",
        "en",
        task_context="detecting the sentiment of a tweet (positive, negative or neutral)",
        sentiment=True,
    )
    rendered = t.render("I am happy")
    assert "You specialize in removing stopwords from text." in rendered
    assert "the relevant task is detecting the sentiment of a tweet" in rendered
    assert "the word `not' is often not considered a stopword" in rendered
    assert "`I am happy'" in rendered
    assert "do not add any explanation, details or notes." in rendered


def test_non_sentiment_template_drops_negation_clause():
    t = load_template("stopword_removal", "en", task_context="classifying news topics")
    assert "the word `not'" not in t.body


def test_render_empty_and_braces():
    t = template()
    assert t.render("") == t.body.replace("{paragraph}", "")
    rendered = t.render("keep {these} braces")
    assert "{these}" in rendered


def test_template_slot_invariant():
    with pytest.raises(ValueError, match="exactly one"):
        PromptTemplate("stemming", "en", "", "no slot here")
    with pytest.raises(ValueError, match="exactly one"):
        PromptTemplate("stemming", "en", "", "{paragraph} and {paragraph}")


def test_render_prompt_function():
    t = template()
    assert render_prompt(t, "x") == t.render("x")


@pytest.mark.parametrize("language", ["en", "fr", "de", "it", "pt", "es"])
@pytest.mark.parametrize(
    "operation",
    ["stopword_removal", "lemmatization", "stemming",
     "stopword_removal_lemmatization", "stopword_removal_stemming"],
)
def test_all_bundled_templates_load(language, operation):
    t = load_template(operation, language, task_context="t", sentiment=True)
    assert t.body.count("{paragraph}") == 1
    assert "{task_context}" not in t.body
    assert "{negation_clause}" not in t.body


# ------------------------------------------------------------------ cleaning


@pytest.mark.parametrize(
    "raw,expected",
    [
        ("```\ncat sat mat\n```", "cat sat mat"),
        ("cat sat mat", "cat sat mat"),
        ("Here is the result:\ncat sat", "cat sat"),
        ("Output:\ncat", "cat"),
        ('"cat sat"', "cat sat"),
        ("`cat sat'", "cat sat"),
        ("  spaced out  ", "spaced out"),
        ("```text\nline one\nline two\n```", "line one\nline two"),
        ("", ""),
    ],
)
def test_clean_response_rules(raw, expected):
    assert clean_response(raw) == expected


def test_clean_response_preserves_interior():
    raw = "keep `interior' quotes and ```fences``` intact here"
    assert clean_response(raw) == raw


@given(st.text(max_size=120))
def test_clean_response_idempotent(raw):
    once = clean_response(raw)
    assert clean_response(once) == once


# -------------------------------------------------------------------- cache


def test_cache_key_sensitivity():
    base = cache_key("m", "prompt", 0.7)
    assert cache_key("m2", "prompt", 0.7) != base
    assert cache_key("m", "prompt!", 0.7) != base
    assert cache_key("m", "prompt", 0.0) != base
    assert cache_key("m", "prompt", 0.7) == base


@given(st.text(max_size=40), st.text(max_size=40))
def test_cache_key_adversarial_near_identical(a, b):
    """Distinct (model, prompt) pairs never share a key, including pairs
    built by shifting characters between the two fields."""
    if (a, b) != (a + b, ""):
        assert cache_key(a, b, 0.7) != cache_key(a + b, "", 0.7)


def test_cache_roundtrip_and_immutability(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = ResponseCache(path)
    key = cache_key("m", "p", 0.7)
    cache.put(key, "m", 0.7, "p", "first")
    cache.put(key, "m", 0.7, "p", "second")  # ignored: entries are immutable
    assert cache.get(key) == "first"
    reloaded = ResponseCache(path)
    assert reloaded.get(key) == "first"
    assert len(reloaded) == 1


def test_cache_verify_detects_corruption(tmp_path):
    path = tmp_path / "cache.jsonl"
    record = {
        "key": "0" * 64, "model": "m", "temperature": 0.7,
        "prompt": "p", "response": "r", "created_at": "t",
    }
    path.write_text(json.dumps(record) + "\n", encoding="utf-8")
    assert ResponseCache(path).verify() == ["0" * 64]


def test_complete_cache_contract(tmp_path):
    config = LlmConfig(model_name="m", cache_path=tmp_path / "c.jsonl")
    cache = ResponseCache(config.cache_path)

    calls = []

    class CountingBackend:
        def complete(self, prompt, paragraph=""):
            calls.append(prompt)
            return f"answer to {prompt}"

    backend = CountingBackend()
    first, hit1 = complete(config, "q", cache, backend)
    second, hit2 = complete(config, "q", cache, backend)
    assert first == second == "answer to q"
    assert (hit1, hit2) == (False, True)
    assert len(calls) == 1  # zero network calls on the warm path


def test_replay_mode_miss():
    config = LlmConfig(model_name="m", replay=True)
    cache = ResponseCache(None)
    with pytest.raises(CacheMissError, match="cache miss in replay mode"):
        complete(config, "cold prompt", cache, ReplayBackend())


# --------------------------------------------------------------- http client


class _Handler(BaseHTTPRequestHandler):
    behaviors = []
    requests = []

    def do_POST(self):
        length = int(self.headers["Content-Length"])
        body = json.loads(self.rfile.read(length))
        _Handler.requests.append({"body": body, "auth": self.headers.get("Authorization")})
        behavior = _Handler.behaviors.pop(0) if _Handler.behaviors else ("ok", "fine")
        kind, payload = behavior
        if kind == "ok":
            data = json.dumps(
                {"choices": [{"message": {"role": "assistant", "content": payload}}]}
            ).encode()
            self.send_response(200)
            self.send_header("Content-Type", "application/json")
            self.end_headers()
            self.wfile.write(data)
        else:
            self.send_response(500)
            self.end_headers()
            self.wfile.write(payload.encode())

    def log_message(self, *args):
        pass


@pytest.fixture()
def http_server():
    server = HTTPServer(("127.0.0.1", 0), _Handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    _Handler.behaviors = []
    _Handler.requests = []
    yield f"http://127.0.0.1:{server.server_port}/v1/chat/completions"
    server.shutdown()


def test_http_backend_roundtrip(http_server, monkeypatch):
    monkeypatch.setenv("TEXTPREP_API_KEY", "sekrit")
    _Handler.behaviors = [("ok", "cat sat")]
    config = LlmConfig(endpoint_url=http_server, model_name="m1", temperature=0.2)
    backend = HttpChatBackend(config)
    assert backend.complete("hello") == "cat sat"
    request = _Handler.requests[-1]
    assert request["body"]["model"] == "m1"
    assert request["body"]["temperature"] == 0.2
    assert request["body"]["messages"] == [{"role": "user", "content": "hello"}]
    assert request["auth"] == "Bearer sekrit"


def test_http_error_body_surfaced(http_server):
    _Handler.behaviors = [("error", "quota exhausted")]
    config = LlmConfig(endpoint_url=http_server, model_name="m")
    with pytest.raises(LlmError, match="quota exhausted"):
        HttpChatBackend(config).complete("x")


def test_error_carries_document_id(http_server):
    _Handler.behaviors = [("error", "boom")]
    config = LlmConfig(endpoint_url=http_server, model_name="m")
    doc = Document(id="d:17", text="hi", label="-", language="en")
    with pytest.raises(LlmError, match="d:17"):
        preprocess_llm(doc, config, template(), ResponseCache(None), HttpChatBackend(config))


# ------------------------------------------------------------ preprocessing


def test_preprocess_llm_cleans_and_tokenizes():
    config = LlmConfig(model_name="m")
    doc = Document(id="d:1", text="the cat sat", label="-", language="en")

    class Fixed:
        def complete(self, prompt, paragraph=""):
            return "```\ncat sat\n```"

    result = preprocess_llm(doc, config, template(), ResponseCache(None), Fixed())
    assert result.text == "cat sat"
    assert result.tokens.norms() == ["cat", "sat"]
    assert not result.degenerate and not result.truncated


def test_preprocess_llm_degenerate_falls_back():
    config = LlmConfig(model_name="m")
    doc = Document(id="d:2", text="keep me", label="-", language="en")

    class Empty:
        def complete(self, prompt, paragraph=""):
            return "   "

    result = preprocess_llm(doc, config, template(), ResponseCache(None), Empty())
    assert result.degenerate
    assert result.text == "keep me"


def test_preprocess_llm_truncates_runaway_output():
    config = LlmConfig(model_name="m")
    doc = Document(id="d:3", text="hi", label="-", language="en")

    class Runaway:
        def complete(self, prompt, paragraph=""):
            return "blah " * 100

    result = preprocess_llm(doc, config, template(), ResponseCache(None), Runaway())
    assert result.truncated
    assert len(result.text) == 4 * len(doc.text)


def test_echo_backend_matches_classic():
    config = LlmConfig(model_name="echo")
    doc = Document(id="d:4", text="the cat sat on the mat", label="-", language="en")
    backend = EchoBackend(lambda text: text.replace("the ", ""))
    result = preprocess_llm(doc, config, template(), ResponseCache(None), backend)
    assert result.text == "cat sat on mat"


def test_replay_precheck_lists_missing_keys():
    config = LlmConfig(model_name="m", replay=True, max_in_flight=2)
    docs = [
        Document(id=f"d:{i}", text=f"text {i}", label="-", language="en")
        for i in range(3)
    ]
    with pytest.raises(CacheMissError, match="3 prompts") as err:
        preprocess_corpus(docs, config, template(), ResponseCache(None), ReplayBackend())
    assert "d:0" in str(err.value)


def test_preprocess_corpus_parallel_deterministic(tmp_path):
    config = LlmConfig(model_name="m", max_in_flight=4, cache_path=tmp_path / "c.jsonl")
    docs = [
        Document(id=f"d:{i}", text=f"word{i} stays", label="-", language="en")
        for i in range(8)
    ]

    class Upper:
        def complete(self, prompt, paragraph=""):
            return paragraph.upper()

    cache = ResponseCache(config.cache_path)
    results = preprocess_corpus(docs, config, template(), cache, Upper())
    assert sorted(results) == sorted(d.id for d in docs)
    assert results["d:3"].text == "WORD3 STAYS"
    # second run is all cache hits
    cache2 = ResponseCache(config.cache_path)
    results2 = preprocess_corpus(docs, config, template(), cache2, ReplayBackend())
    assert all(r.cache_hit for r in results2.values())
    assert {k: r.text for k, r in results2.items()} == {k: r.text for k, r in results.items()}
