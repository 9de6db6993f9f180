"""Prompt-driven preprocessing through a chat-completion endpoint.

Every request is answered from the response cache when possible; cold
prompts go over HTTP (bounded retries with exponential backoff) and the
response is persisted before being returned, so a warm cache makes whole
runs reproducible byte for byte. Replay mode turns a cache miss into an
error instead of a network call. The traditional-echo backend substitutes
a classic-preprocessing callable for the network entirely and is the test
oracle for the agreement metrics.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable

import requests

from textprep.corpus import Document
from textprep.tokenize import TokenSequence, tokenize

API_KEY_ENV = "TEXTPREP_API_KEY"

OPERATIONS = (
    "stopword_removal",
    "lemmatization",
    "stemming",
    "stopword_removal_lemmatization",
    "stopword_removal_stemming",
)

NEGATION_CLAUSES = {
    "en": " In this task, the word `not' is often not considered a stopword, "
          "and it should be kept in the text.",
    "fr": " Dans cette tâche, le mot `pas' n'est souvent pas considéré comme "
          "un mot vide et il doit être conservé dans le texte.",
    "de": " Bei dieser Aufgabe gilt das Wort `nicht' oft nicht als Stoppwort "
          "und es sollte im Text erhalten bleiben.",
    "it": " In questo compito, la parola `non' spesso non è considerata una "
          "stopword e deve essere mantenuta nel testo.",
    "pt": " Nesta tarefa, a palavra `não' muitas vezes não é considerada uma "
          "stopword e deve ser mantida no texto.",
    "es": " En esta tarea, la palabra `no' a menudo no se considera una "
          "stopword y debe mantenerse en el texto.",
}


class LlmError(RuntimeError):
    pass


class CacheMissError(LlmError):
    """Raised in replay mode when a prompt has no cached response."""


@dataclass(frozen=True)
class PromptTemplate:
    operation: str
    language_of_prompt: str
    task_context: str
    body: str

    def __post_init__(self):
        if self.operation not in OPERATIONS:
            raise ValueError(f"unknown operation: {self.operation!r}")
        if self.body.count("{paragraph}") != 1:
            raise ValueError("template body must contain exactly one {paragraph} slot")

    def render(self, paragraph: str) -> str:
        """Substitute the paragraph verbatim (no recursive templating)."""
        if paragraph is None:
            raise ValueError("paragraph must not be None")
        return self.body.replace("{paragraph}", paragraph)


def render_prompt(template: PromptTemplate, paragraph: str) -> str:
    return template.render(paragraph)


def load_template(
    operation: str,
    prompt_language: str = "en",
    task_context: str = "",
    sentiment: bool = False,
) -> PromptTemplate:
    """Load a bundled prompt body and bind its task context.

    Stopword-removal templates for sentiment-style tasks include the
    negation-retention instruction; other tasks drop it.
    """
    root = Path(str(resources.files("textprep").joinpath("data", "prompts")))
    path = root / prompt_language / f"{operation}.txt"
    if not path.is_file():
        raise FileNotFoundError(f"no bundled prompt for {operation!r} in {prompt_language!r}")
    body = path.read_text(encoding="utf-8").strip()
    clause = NEGATION_CLAUSES[prompt_language] if sentiment else ""
    body = body.replace("{negation_clause}", clause)
    body = body.replace("{task_context}", task_context)
    return PromptTemplate(
        operation=operation,
        language_of_prompt=prompt_language,
        task_context=task_context,
        body=body,
    )


@dataclass(frozen=True)
class LlmConfig:
    endpoint_url: str = ""
    model_name: str = ""
    temperature: float = 0.7
    sampling: bool = True
    max_in_flight: int = 4
    timeout: float = 60.0
    cache_path: str | Path | None = None
    replay: bool = False
    max_attempts: int = 3

    def __post_init__(self):
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")
        if self.max_in_flight < 1:
            raise ValueError("max_in_flight must be >= 1")


def cache_key(model_name: str, prompt: str, temperature: float) -> str:
    payload = json.dumps(
        [model_name, prompt, float(temperature)], ensure_ascii=False, separators=(",", ":")
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class ResponseCache:
    """Append-only JSONL cache of completions, keyed by
    sha256(model, prompt, temperature). Entries are immutable: the first
    record for a key wins, appends are atomic under a lock.
    """

    def __init__(self, path: str | Path | None):
        self.path = Path(path) if path else None
        self._entries: dict[str, dict] = {}
        self._lock = threading.Lock()
        if self.path and self.path.is_file():
            with open(self.path, encoding="utf-8") as fh:
                for line in fh:
                    if not line.strip():
                        continue
                    record = json.loads(line)
                    self._entries.setdefault(record["key"], record)

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, key: str) -> str | None:
        record = self._entries.get(key)
        return record["response"] if record else None

    def put(self, key: str, model: str, temperature: float, prompt: str, response: str) -> None:
        record = {
            "key": key,
            "model": model,
            "temperature": float(temperature),
            "prompt": prompt,
            "response": response,
            "created_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        with self._lock:
            if key in self._entries:
                return
            self._entries[key] = record
            if self.path:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(json.dumps(record, ensure_ascii=False) + "\n")
                    fh.flush()
                    os.fsync(fh.fileno())

    def stats(self) -> dict:
        models = sorted({r["model"] for r in self._entries.values()})
        return {"entries": len(self._entries), "models": models,
                "path": str(self.path) if self.path else None}

    def verify(self) -> list[str]:
        """Recompute keys from stored fields; return mismatching keys."""
        bad = []
        for key, record in self._entries.items():
            expect = cache_key(record["model"], record["prompt"], record["temperature"])
            if expect != key:
                bad.append(key)
        return sorted(bad)


class HttpChatBackend:
    """Chat-completion client: request carries model, messages, temperature;
    the response text is ``choices[0].message.content``."""

    def __init__(self, config: LlmConfig, session: requests.Session | None = None):
        if not config.endpoint_url:
            raise LlmError("no endpoint_url configured for live requests")
        self.config = config
        self.session = session or requests.Session()

    def complete(self, prompt: str, paragraph: str = "") -> str:
        payload = {
            "model": self.config.model_name,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": self.config.temperature,
        }
        headers = {"Content-Type": "application/json"}
        api_key = os.environ.get(API_KEY_ENV)
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        delay = 0.5
        last_error: Exception | None = None
        for attempt in range(self.config.max_attempts):
            try:
                response = self.session.post(
                    self.config.endpoint_url,
                    json=payload,
                    headers=headers,
                    timeout=self.config.timeout,
                )
                if response.status_code >= 400:
                    raise LlmError(
                        f"HTTP {response.status_code} from endpoint: {response.text}"
                    )
                data = response.json()
                return data["choices"][0]["message"]["content"]
            except LlmError:
                raise
            except Exception as exc:  # network/timeout/parse
                last_error = exc
                if attempt + 1 < self.config.max_attempts:
                    time.sleep(delay)
                    delay *= 2
        raise LlmError(f"request failed after {self.config.max_attempts} attempts: {last_error}")


class ReplayBackend:
    """Backend that refuses network access; only the cache may answer."""

    def complete(self, prompt: str, paragraph: str = "") -> str:
        raise CacheMissError("cache miss in replay mode")


class EchoBackend:
    """Traditional-echo test backend: applies a classic-preprocessing
    callable to the paragraph instead of calling a network. Drives the
    agreement metrics to exact known values."""

    def __init__(self, transform: Callable[[str], str]):
        self.transform = transform

    def complete(self, prompt: str, paragraph: str = "") -> str:
        return self.transform(paragraph)


def make_backend(config: LlmConfig, echo_transform: Callable[[str], str] | None = None):
    if echo_transform is not None:
        return EchoBackend(echo_transform)
    if config.replay:
        return ReplayBackend()
    return HttpChatBackend(config)


def complete(config: LlmConfig, prompt: str, cache: ResponseCache, backend) -> tuple[str, bool]:
    """Answer a prompt, cache first. Returns (response, cache_hit)."""
    key = cache_key(config.model_name, prompt, config.temperature)
    cached = cache.get(key)
    if cached is not None:
        return cached, True
    response = backend.complete(prompt)
    cache.put(key, config.model_name, config.temperature, prompt, response)
    return response, False


_FENCE_RE = re.compile(r"^```[^\n]*\n(.*?)\n?```$", re.DOTALL)
_LABEL_RE = re.compile(r"^(Here is|Output|Result)[^\n]*:\s*\n", re.IGNORECASE)
_QUOTE_PAIRS = [('"', '"'), ("'", "'"), ("“", "”"), ("‘", "’"), ("`", "'")]


def clean_response(raw: str) -> str:
    """Normalize a model response: strip outer whitespace, markdown fences,
    a leading label line, and one layer of surrounding quotes per pass.
    Interior text is never altered. Idempotent."""
    text = raw
    while True:
        before = text
        text = text.strip()
        fence = _FENCE_RE.match(text)
        if fence:
            text = fence.group(1).strip()
        text = _LABEL_RE.sub("", text, count=1).strip()
        for opener, closer in _QUOTE_PAIRS:
            if len(text) >= 2 and text.startswith(opener) and text.endswith(closer):
                inner = text[1:-1]
                if opener not in inner and closer not in inner:
                    text = inner.strip()
                break
        if text == before:
            return text


@dataclass
class PreprocessedText:
    text: str
    tokens: TokenSequence
    cache_hit: bool = False
    degenerate: bool = False
    truncated: bool = False


def preprocess_llm(
    doc: Document,
    config: LlmConfig,
    template: PromptTemplate,
    cache: ResponseCache,
    backend,
    max_length_factor: int = 4,
) -> PreprocessedText:
    """Run one document through a prompt backend and tokenize the output.

    Degenerate (empty) responses fall back to the original text with a
    flag; over-long responses are truncated at ``max_length_factor`` times
    the input length and flagged.
    """
    prompt = template.render(doc.text)
    key = cache_key(config.model_name, prompt, config.temperature)
    cached = cache.get(key)
    if cached is not None:
        raw, hit = cached, True
    else:
        try:
            raw = backend.complete(prompt, paragraph=doc.text)
        except LlmError as exc:
            raise LlmError(f"document {doc.id}: {exc}") from exc
        cache.put(key, config.model_name, config.temperature, prompt, raw)
        hit = False

    text = clean_response(raw)
    degenerate = False
    truncated = False
    if not text:
        text = doc.text
        degenerate = True
    limit = max(1, max_length_factor * len(doc.text))
    if len(text) > limit:
        text = text[:limit]
        truncated = True
    return PreprocessedText(
        text=text,
        tokens=tokenize(text),
        cache_hit=hit,
        degenerate=degenerate,
        truncated=truncated,
    )


def preprocess_corpus(
    docs: list[Document],
    config: LlmConfig,
    template: PromptTemplate,
    cache: ResponseCache,
    backend,
) -> dict[str, PreprocessedText]:
    """Preprocess many documents with up to ``max_in_flight`` in parallel.

    Results are keyed by document id; failures carry the document id.
    """
    results: dict[str, PreprocessedText] = {}
    if isinstance(backend, ReplayBackend):
        missing = []
        for doc in docs:
            key = cache_key(config.model_name, template.render(doc.text), config.temperature)
            if cache.get(key) is None:
                missing.append(f"{doc.id}:{key[:12]}")
        if missing:
            raise CacheMissError(
                f"cache miss in replay mode for {len(missing)} prompts: "
                + ", ".join(missing)
            )
    if config.max_in_flight == 1 or len(docs) <= 1:
        for doc in docs:
            results[doc.id] = preprocess_llm(doc, config, template, cache, backend)
        return results
    with ThreadPoolExecutor(max_workers=config.max_in_flight) as pool:
        futures = {
            doc.id: pool.submit(preprocess_llm, doc, config, template, cache, backend)
            for doc in docs
        }
        for doc_id, future in futures.items():
            results[doc_id] = future.result()
    return results
