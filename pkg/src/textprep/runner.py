"""Config-driven experiment runner: agreement and classification tables.

A single TOML file declares datasets, backends, the combo matrix, prompt
language policy, split sizes, and the tuning grid. Reports are emitted as
markdown, CSV and JSON with stable ordering and two-decimal values, so a
warm cache makes reruns byte-identical. Intermediate preprocessed corpora
are persisted per (dataset, backend, combo) for recomputation without
re-querying any model.
"""

from __future__ import annotations

import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from textprep import agreement as agreement_mod
from textprep import classic, corpus as corpus_mod, textclf
from textprep.corpus import RNG_NAME, Document, SplitSpec
from textprep.llmproc import (
    CacheMissError,
    EchoBackend,
    LlmConfig,
    LlmError,
    ReplayBackend,
    ResponseCache,
    load_template,
    make_backend,
    preprocess_corpus,
)
from textprep.pipeline import (
    COMBOS,
    LLM_OPERATION,
    PreprocessSpec,
    apply_classic_chain,
    classic_text_transform,
    combo_stemmer,
)
from textprep.stemmers import StemmerId, stemmers_for_language
from textprep.tokenize import metric_word_tokens, render_tokens, tokenize


class ConfigError(ValueError):
    pass


@dataclass
class DatasetConfig:
    name: str
    path: Path
    format: str
    language: str
    task: str = ""
    task_context: str = ""
    text_field: str = "text"
    label_field: str = "label"
    id_field: str | None = None
    tuning: bool = False


@dataclass
class BackendConfig:
    kind: str  # classic | llm | echo
    name: str = ""
    endpoint: str = ""
    model: str = ""
    temperature: float = 0.7
    cache: Path | None = None
    replay: bool = False
    max_in_flight: int = 4

    def display_name(self) -> str:
        if self.name:
            return self.name
        if self.kind == "llm":
            return self.model or "llm"
        return self.kind


@dataclass
class ExperimentConfig:
    datasets: list[DatasetConfig]
    backends: list[BackendConfig]
    combos: list[str]
    prompt_language: str = "english"  # english | native | both
    stemmers: list[str] = field(default_factory=list)
    split: SplitSpec = field(default_factory=SplitSpec)
    seed: int = 0
    out_dir: Path = Path("out")
    generations: int = 1
    include_hashtags: bool = True
    grid: list[textclf.GridPoint] = field(default_factory=list)
    stopwords_position: dict[str, str] = field(default_factory=dict)

    def semantic_dict(self) -> dict:
        """Everything that affects results (not output locations)."""
        return {
            "datasets": [
                {
                    "name": d.name,
                    "path": str(d.path),
                    "format": d.format,
                    "language": d.language,
                    "task": d.task,
                    "task_context": d.task_context,
                    "tuning": d.tuning,
                }
                for d in self.datasets
            ],
            "backends": [
                {
                    "kind": b.kind,
                    "name": b.display_name(),
                    "endpoint": b.endpoint,
                    "model": b.model,
                    "temperature": b.temperature,
                    "replay": b.replay,
                }
                for b in self.backends
            ],
            "combos": list(self.combos),
            "prompt_language": self.prompt_language,
            "stemmers": list(self.stemmers),
            "split": {
                "max_train": self.split.max_train,
                "max_test": self.split.max_test,
                "validation_size": self.split.validation_size,
                "seed": self.split.seed,
            },
            "seed": self.seed,
            "generations": self.generations,
            "include_hashtags": self.include_hashtags,
            "grid": [
                {
                    "ngram_min": p.vectorizer.ngram_min,
                    "ngram_max": p.vectorizer.ngram_max,
                    "max_features": p.vectorizer.max_features,
                    "nb_alpha": p.params.nb_alpha,
                    "logreg_l2": p.params.logreg_l2,
                    "tree_depth": p.params.tree_depth,
                }
                for p in self.grid
            ],
            "stopwords_position": dict(self.stopwords_position),
        }

    def config_hash(self) -> str:
        payload = json.dumps(self.semantic_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def load_config(path: str | Path, overrides: dict | None = None) -> ExperimentConfig:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {path}: {exc}") from exc
    overrides = overrides or {}
    base = path.parent

    def resolve(p: str) -> Path:
        candidate = Path(p)
        return candidate if candidate.is_absolute() else (base / candidate)

    datasets = []
    for entry in raw.get("datasets", []):
        try:
            datasets.append(
                DatasetConfig(
                    name=entry["name"],
                    path=resolve(entry["path"]),
                    format=entry.get("format", "jsonl"),
                    language=entry["language"],
                    task=entry.get("task", ""),
                    task_context=entry.get("task_context", ""),
                    text_field=entry.get("text_field", "text"),
                    label_field=entry.get("label_field", "label"),
                    id_field=entry.get("id_field"),
                    tuning=entry.get("tuning", False),
                )
            )
        except KeyError as exc:
            raise ConfigError(f"dataset entry missing field {exc}") from exc
    if not datasets:
        raise ConfigError("config declares no datasets")

    backends = []
    for entry in raw.get("backends", []):
        kind = entry.get("kind", "")
        if kind not in ("classic", "llm", "echo"):
            raise ConfigError(f"unknown backend kind: {kind!r}")
        backends.append(
            BackendConfig(
                kind=kind,
                name=entry.get("name", ""),
                endpoint=overrides.get("endpoint", entry.get("endpoint", "")),
                model=overrides.get("model", entry.get("model", "")),
                temperature=float(overrides.get("temperature", entry.get("temperature", 0.7))),
                cache=resolve(entry["cache"]) if entry.get("cache") else None,
                replay=bool(overrides.get("replay", entry.get("replay", False))),
                max_in_flight=int(entry.get("max_in_flight", 4)),
            )
        )
    if not backends:
        raise ConfigError("config declares no backends")

    agreement_section = raw.get("agreement", {})
    classification = raw.get("classification", {})
    combos = list(classification.get("combos", COMBOS))
    for combo in combos:
        if combo not in COMBOS:
            raise ConfigError(f"unknown combo: {combo!r}")
    if not combos:
        raise ConfigError("config declares no combos")

    prompt_language = agreement_section.get("prompt_language", raw.get("prompt_language", "english"))
    if prompt_language not in ("english", "native", "both"):
        raise ConfigError("prompt_language must be english, native or both")
    if prompt_language == "native" and all(d.language == "en" for d in datasets):
        raise ConfigError("prompt_language=native requires a non-English dataset")

    split_section = raw.get("split", {})
    seed = int(overrides.get("seed", raw.get("run", {}).get("seed", 0)))
    split = SplitSpec(
        max_train=int(split_section.get("max_train", 3000)),
        max_test=int(split_section.get("max_test", 3000)),
        validation_size=int(split_section.get("validation_size", 2000)),
        seed=seed,
    )

    tuning = raw.get("tuning", {})
    grid = []
    depths = tuning.get("tree_depth", [10, 25, 0])
    for ngram_max in tuning.get("ngram_max", [1, 2]):
        for max_features in tuning.get("max_features", [5000, 20000, 50000]):
            for alpha in tuning.get("nb_alpha", [0.5, 1.0]):
                for l2 in tuning.get("logreg_l2", [0.01, 0.1]):
                    for depth in depths:
                        grid.append(
                            textclf.GridPoint(
                                textclf.VectorizerConfig(1, int(ngram_max), int(max_features)),
                                textclf.Hyperparams(
                                    float(alpha), float(l2), None if depth in (0, "inf") else int(depth)
                                ),
                            )
                        )

    out_dir = Path(overrides.get("out", raw.get("run", {}).get("out_dir", "out")))
    if not out_dir.is_absolute():
        out_dir = base / out_dir

    return ExperimentConfig(
        datasets=datasets,
        backends=backends,
        combos=combos,
        prompt_language=prompt_language,
        stemmers=list(agreement_section.get("stemmers", [])),
        split=split,
        seed=seed,
        out_dir=out_dir,
        generations=int(raw.get("run", {}).get("generations", 1)),
        include_hashtags=bool(agreement_section.get("include_hashtags", True)),
        grid=grid,
        stopwords_position=dict(classification.get("stopwords_position", {})),
    )


# ----------------------------------------------------------------- execution


def _prompt_languages(config: ExperimentConfig, dataset: DatasetConfig) -> list[str]:
    if dataset.language == "en":
        return ["en"]
    if config.prompt_language == "english":
        return ["en"]
    if config.prompt_language == "native":
        return [dataset.language]
    return ["en", dataset.language]


def _dataset_stemmers(config: ExperimentConfig, dataset: DatasetConfig) -> list[StemmerId]:
    if config.stemmers:
        return [StemmerId.parse(s, dataset.language) for s in config.stemmers]
    return list(stemmers_for_language(dataset.language))


def _load_dataset(dataset: DatasetConfig) -> list[Document]:
    columns = corpus_mod.ColumnMap(
        text=dataset.text_field, label=dataset.label_field, id=dataset.id_field
    )
    return corpus_mod.load_corpus(dataset.path, dataset.format, dataset.language, columns)


def _sentiment(dataset: DatasetConfig) -> bool:
    return dataset.task.lower() in classic.SENTIMENT_TASKS


def _run_llm_operation(
    docs: list[Document],
    dataset: DatasetConfig,
    backend_cfg: BackendConfig,
    operation: str,
    prompt_language: str,
    spec: PreprocessSpec,
    inv,
    table,
):
    """Send one operation over one backend; returns {doc_id: PreprocessedText}."""
    llm_config = LlmConfig(
        endpoint_url=backend_cfg.endpoint,
        model_name=backend_cfg.model or backend_cfg.display_name(),
        temperature=backend_cfg.temperature,
        max_in_flight=backend_cfg.max_in_flight,
        cache_path=backend_cfg.cache,
        replay=backend_cfg.replay,
    )
    cache = ResponseCache(backend_cfg.cache)
    template = load_template(
        operation,
        prompt_language,
        task_context=dataset.task_context or dataset.task,
        sentiment=_sentiment(dataset),
    )
    if backend_cfg.kind == "echo":
        backend = EchoBackend(classic_text_transform(spec, inv, table))
    elif backend_cfg.replay:
        backend = ReplayBackend()
    else:
        backend = make_backend(llm_config)
    results = preprocess_corpus(docs, llm_config, template, cache, backend)
    stats = {"cache_entries": len(cache), "hits": sum(1 for r in results.values() if r.cache_hit)}
    return results, stats


def run_agreement(config: ExperimentConfig) -> dict:
    """Agreement tables for every (dataset, llm-ish backend, prompt language)."""
    rows = []
    cache_stats: dict[str, dict] = {}
    failures = 0
    for dataset in config.datasets:
        docs = _load_dataset(dataset)
        inv, table = classic.load_wordlists(dataset.language, dataset.task)
        algos = _dataset_stemmers(config, dataset)
        orig_tokens = {
            d.id: metric_word_tokens(tokenize(d.text), include_hashtags=config.include_hashtags)
            for d in docs
        }
        for backend_cfg in config.backends:
            if backend_cfg.kind == "classic":
                continue
            for plang in _prompt_languages(config, dataset):
                op_pairs = {}
                for op_name, combo in (("stopword_removal", "SW"), ("lemmatization", "L"), ("stemming", "S")):
                    spec = PreprocessSpec(
                        combo=combo,
                        backend=backend_cfg.kind,
                        language=dataset.language,
                        task=dataset.task,
                        prompt_language=plang,
                        stemmer=algos[0] if combo == "S" else None,
                    )
                    results, stats = _run_llm_operation(
                        docs, dataset, backend_cfg, op_name, plang, spec, inv, table
                    )
                    key = f"{backend_cfg.display_name()}/{dataset.name}/{plang}/{op_name}"
                    cache_stats[key] = stats
                    pairs = []
                    for d in docs:
                        result = results[d.id]
                        out = metric_word_tokens(
                            result.tokens, include_hashtags=config.include_hashtags
                        )
                        pairs.append((orig_tokens[d.id], out))
                    op_pairs[op_name] = pairs
                report = agreement_mod.aggregate(
                    dataset.language,
                    op_pairs["stopword_removal"],
                    op_pairs["lemmatization"],
                    op_pairs["stemming"],
                    inv,
                    table,
                    algos,
                )
                rows.append(
                    {
                        "dataset": dataset.name,
                        "language": dataset.language,
                        "backend": backend_cfg.display_name(),
                        "prompt_language": plang,
                        "report": report.as_dict(),
                    }
                )
    return {"rows": rows, "cache_stats": cache_stats, "failures": failures}


def _tokens_for_clf(text: str) -> list[str]:
    return [t.norm for t in tokenize(text) if t.kind in ("word", "hashtag", "number")]


def run_tune(config: ExperimentConfig) -> dict:
    """Grid search on the tuning dataset's validation split, classic SW combo."""
    dataset = next((d for d in config.datasets if d.tuning), config.datasets[0])
    docs = corpus_mod.stratified_split(_load_dataset(dataset), config.split)
    inv, table = classic.load_wordlists(dataset.language, dataset.task)
    spec = PreprocessSpec(combo="SW", backend="classic", language=dataset.language, task=dataset.task)
    train = [d for d in docs if d.split == "train"]
    val = [d for d in docs if d.split == "validation"]
    if not val:
        raise ConfigError("tuning requires a non-empty validation split")

    def prep(ds):
        out = []
        for d in ds:
            tokens = apply_classic_chain(tokenize(d.text), spec, inv, table)
            out.append([t.norm for t in tokens if t.kind in ("word", "hashtag", "number")])
        return out

    grid = config.grid or textclf.default_grid()
    point, score = textclf.tune(
        prep(train), [d.label for d in train], prep(val), [d.label for d in val], grid
    )
    return {
        "dataset": dataset.name,
        "validation_score": score,
        "vectorizer": {
            "ngram_min": point.vectorizer.ngram_min,
            "ngram_max": point.vectorizer.ngram_max,
            "max_features": point.vectorizer.max_features,
        },
        "params": point.params.as_dict(),
    }


def run_classification(config: ExperimentConfig) -> dict:
    """Score every (dataset, backend, combo, prompt language) cell."""
    tuned = run_tune(config)
    vec_cfg = textclf.VectorizerConfig(**tuned["vectorizer"])
    params = textclf.Hyperparams(
        nb_alpha=tuned["params"]["nb_alpha"],
        logreg_l2=tuned["params"]["logreg_l2"],
        tree_depth=tuned["params"]["tree_depth"],
    )
    rows = []
    cache_stats: dict[str, dict] = {}
    intermediates: dict[str, list[dict]] = {}

    for dataset in config.datasets:
        docs = corpus_mod.stratified_split(_load_dataset(dataset), config.split)
        train = [d for d in docs if d.split == "train"]
        test = [d for d in docs if d.split == "test"]
        if not train or not test:
            raise ConfigError(f"dataset {dataset.name!r} has an empty train or test split")
        inv, table = classic.load_wordlists(dataset.language, dataset.task)

        for backend_cfg in config.backends:
            plangs = ["-"] if backend_cfg.kind == "classic" else _prompt_languages(config, dataset)
            for plang in plangs:
                for combo in config.combos:
                    position = config.stopwords_position.get(combo)
                    needs_stem = combo in ("SW+S", "S")
                    if backend_cfg.kind == "classic" and needs_stem:
                        algos = _dataset_stemmers(config, dataset)
                    else:
                        algos = [None]
                    cell_values = {}
                    for algo in algos:
                        spec = PreprocessSpec(
                            combo=combo,
                            backend=backend_cfg.kind,
                            language=dataset.language,
                            task=dataset.task,
                            stemmer=algo,
                            prompt_language=plang if plang != "-" else "en",
                            stopwords_position=position,
                        )
                        if backend_cfg.kind == "classic":
                            prep_map = {
                                d.id: render_tokens(apply_classic_chain(tokenize(d.text), spec, inv, table))
                                for d in docs
                            }
                        else:
                            results, stats = _run_llm_operation(
                                docs,
                                dataset,
                                backend_cfg,
                                LLM_OPERATION[combo],
                                spec.prompt_language,
                                spec,
                                inv,
                                table,
                            )
                            key = f"{backend_cfg.display_name()}/{dataset.name}/{plang}/{combo}"
                            cache_stats[key] = stats
                            prep_map = {doc_id: r.text for doc_id, r in results.items()}

                        train_docs = [_tokens_for_clf(prep_map[d.id]) for d in train]
                        test_docs = [_tokens_for_clf(prep_map[d.id]) for d in test]
                        vocab = textclf.fit_vectorizer(train_docs, vec_cfg)
                        X_train = textclf.transform(train_docs, vocab)
                        X_test = textclf.transform(test_docs, vocab)
                        result = textclf.train_and_eval(
                            X_train, [d.label for d in train], X_test, [d.label for d in test], params
                        )
                        algo_key = str(algo) if algo is not None else "-"
                        cell_values[algo_key] = {
                            "averaged": result.averaged,
                            "per_model": result.per_model,
                        }
                        inter_key = f"{dataset.name}/{backend_cfg.display_name()}/{combo}/{plang}/{algo_key}"
                        intermediates[inter_key] = [
                            {"id": d.id, "split": d.split, "label": d.label, "text": prep_map[d.id]}
                            for d in docs
                        ]
                    rows.append(
                        {
                            "dataset": dataset.name,
                            "language": dataset.language,
                            "backend": backend_cfg.display_name(),
                            "backend_kind": backend_cfg.kind,
                            "prompt_language": plang,
                            "combo": combo,
                            "stopwords_position": position
                            or ("-" if combo in ("SW", "L", "S") else None)
                            or {"SW+L": "last", "SW+S": "first"}[combo],
                            "values": cell_values,
                        }
                    )
    return {
        "rows": rows,
        "tuned": tuned,
        "cache_stats": cache_stats,
        "intermediates": intermediates,
    }


# ------------------------------------------------------------------- reports


def _fmt(value) -> str:
    if value is None:
        return "-"
    return f"{value:.2f}"


def _mark_best(cells: list[tuple[int, float | None]]) -> set[int]:
    defined = [(i, v) for i, v in cells if v is not None]
    if not defined:
        return set()
    best = max(v for _, v in defined)
    return {i for i, v in defined if abs(v - best) < 1e-9}


def agreement_markdown(agreement_result: dict) -> str:
    lines = ["# Agreement with classic preprocessing", ""]
    rows = agreement_result["rows"]
    datasets = sorted({r["dataset"] for r in rows})
    for ds in datasets:
        subset = [r for r in rows if r["dataset"] == ds]
        language = subset[0]["language"]
        algo_keys = list(subset[0]["report"]["s_pct"])
        plangs = sorted({r["prompt_language"] for r in subset})
        paired = language != "en" and len(plangs) > 1
        lines.append(f"## {ds} ({language})")
        lines.append("")
        headers = ["Model", "SW", "NSW", "L"] + [f"S ({k})" for k in algo_keys] + ["S (Any)"]
        lines.append("| " + " | ".join(headers) + " |")
        lines.append("|" + "---|" * len(headers))
        backends = sorted({r["backend"] for r in subset})
        for backend in backends:
            brow = [r for r in subset if r["backend"] == backend]
            by_plang = {r["prompt_language"]: r["report"] for r in brow}

            def cell(metric, algo=None):
                def value(plang):
                    report = by_plang.get(plang)
                    if report is None:
                        return None
                    v = report["s_pct"].get(algo) if algo else report[metric]
                    return v

                if paired:
                    left = value("en")
                    right = value(language)
                    return f"{_fmt(left)} / {_fmt(right)}"
                only = value(plangs[0])
                return _fmt(only)

            cells = [cell("sw_pct"), cell("nsw_pct"), cell("l_pct")]
            cells += [cell("s_pct", algo=k) for k in algo_keys]
            cells.append(cell("s_any_pct"))
            lines.append("| " + " | ".join([backend] + cells) + " |")
        lines.append("")
        if paired:
            lines.append(
                "Paired values are `English prompt / language-specific prompt`."
            )
            lines.append("")
    return "\n".join(lines)


def classification_markdown(clf_result: dict) -> str:
    lines = ["# Classification (averaged micro-F1 of the three models)", ""]
    rows = clf_result["rows"]
    datasets = sorted({r["dataset"] for r in rows})
    combos = [c for c in COMBOS if any(r["combo"] == c for r in rows)]
    for ds in datasets:
        subset = [r for r in rows if r["dataset"] == ds]
        language = subset[0]["language"]
        plangs = [p for p in ("en", language) if any(r["prompt_language"] == p for r in subset)]
        paired = language != "en" and len(plangs) > 1
        lines.append(f"## {ds} ({language})")
        lines.append("")
        headers = ["Model"] + combos
        lines.append("| " + " | ".join(headers) + " |")
        lines.append("|" + "---|" * len(headers))

        best_per_combo: dict[str, float | None] = {}
        for combo in combos:
            values = [
                v["averaged"]
                for r in subset
                if r["combo"] == combo
                for v in r["values"].values()
            ]
            best_per_combo[combo] = max(values) if values else None

        def fmt_value(combo: str, value: float) -> str:
            text = _fmt(value)
            best = best_per_combo[combo]
            if best is not None and abs(value - best) < 1e-9:
                return f"**{text}**"
            return text

        backends = []
        for r in subset:
            if r["backend"] not in backends:
                backends.append(r["backend"])
        for backend in backends:
            brows = [r for r in subset if r["backend"] == backend]
            row_plangs = []
            for r in brows:
                if r["prompt_language"] not in row_plangs:
                    row_plangs.append(r["prompt_language"])
            cells = []
            for combo in combos:
                def row_for(plang):
                    return next(
                        (r for r in brows if r["combo"] == combo and r["prompt_language"] == plang),
                        None,
                    )

                if paired and row_plangs != ["-"]:
                    sides = []
                    for plang in plangs:
                        row = row_for(plang)
                        if row is None:
                            sides.append("-")
                            continue
                        parts = [
                            fmt_value(combo, row["values"][k]["averaged"])
                            for k in row["values"]
                        ]
                        sides.append(" \\| ".join(parts))
                    cells.append(" / ".join(sides))
                else:
                    row = next((r for r in brows if r["combo"] == combo), None)
                    if row is None:
                        cells.append("-")
                        continue
                    parts = [
                        fmt_value(combo, row["values"][k]["averaged"]) for k in row["values"]
                    ]
                    cells.append(" \\| ".join(parts))
            lines.append("| " + " | ".join([backend] + cells) + " |")
        lines.append("")
        notes = []
        if any(r["backend_kind"] == "classic" and len(r["values"]) > 1 for r in subset):
            notes.append("Classic stemming cells report Porter | Lancaster | Snowball, in this order.")
        if paired:
            notes.append("Paired values are `English prompt / language-specific prompt`.")
        for note in notes:
            lines.append(note)
            lines.append("")
    return "\n".join(lines)


def agreement_csv(agreement_result: dict) -> str:
    lines = ["dataset,language,backend,prompt_language,metric,algo,value"]
    for r in sorted(
        agreement_result["rows"],
        key=lambda r: (r["dataset"], r["backend"], r["prompt_language"]),
    ):
        rep = r["report"]
        base = f'{r["dataset"]},{r["language"]},{r["backend"]},{r["prompt_language"]}'
        for metric in ("sw_pct", "nsw_pct", "l_pct", "s_any_pct"):
            lines.append(f"{base},{metric},,{_fmt(rep[metric])}")
        for algo in sorted(rep["s_pct"]):
            lines.append(f'{base},s_pct,{algo},{_fmt(rep["s_pct"][algo])}')
        lines.append(f'{base},stem_consistency,,{rep["stem_consistency"]:.4f}')
    return "\n".join(lines) + "\n"


def classification_csv(clf_result: dict) -> str:
    lines = ["dataset,language,backend,prompt_language,combo,algo,averaged,naive_bayes,logreg,tree"]
    for r in sorted(
        clf_result["rows"],
        key=lambda r: (r["dataset"], r["backend"], r["prompt_language"], r["combo"]),
    ):
        for algo_key in sorted(r["values"]):
            v = r["values"][algo_key]
            per = v["per_model"]
            lines.append(
                ",".join(
                    [
                        r["dataset"],
                        r["language"],
                        r["backend"],
                        r["prompt_language"],
                        r["combo"],
                        algo_key,
                        _fmt(v["averaged"]),
                        _fmt(per["naive_bayes"]),
                        _fmt(per["logreg"]),
                        _fmt(per["tree"]),
                    ]
                )
            )
    return "\n".join(lines) + "\n"


def _round_floats(obj):
    if isinstance(obj, float):
        return round(obj, 2)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_round_floats(v) for v in obj]
    return obj


def emit_report(
    config: ExperimentConfig,
    agreement_result: dict | None,
    clf_result: dict | None,
    out_dir: Path | None = None,
) -> list[Path]:
    """Write markdown/CSV/JSON reports plus provenance; returns paths."""
    out = Path(out_dir) if out_dir else config.out_dir
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    provenance = {
        "config_hash": config.config_hash(),
        "seed": config.seed,
        "rng": RNG_NAME,
        "generations": config.generations,
        "cache_stats": {},
    }

    if agreement_result is not None:
        provenance["cache_stats"]["agreement"] = agreement_result["cache_stats"]
        provenance["agreement_failures"] = agreement_result["failures"]
        md = out / "agreement.md"
        md.write_text(agreement_markdown(agreement_result), encoding="utf-8")
        csv_path = out / "agreement.csv"
        csv_path.write_text(agreement_csv(agreement_result), encoding="utf-8")
        json_path = out / "agreement.json"
        json_path.write_text(
            json.dumps(_round_floats({"rows": agreement_result["rows"]}), indent=2, sort_keys=True)
            + "\n",
            encoding="utf-8",
        )
        written += [md, csv_path, json_path]

    if clf_result is not None:
        provenance["cache_stats"]["classification"] = clf_result["cache_stats"]
        provenance["tuned"] = clf_result["tuned"]
        md = out / "classification.md"
        md.write_text(classification_markdown(clf_result), encoding="utf-8")
        csv_path = out / "classification.csv"
        csv_path.write_text(classification_csv(clf_result), encoding="utf-8")
        json_path = out / "classification.json"
        json_path.write_text(
            json.dumps(_round_floats({"rows": clf_result["rows"], "tuned": clf_result["tuned"]}),
                       indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
        written += [md, csv_path, json_path]
        inter_dir = out / "preprocessed"
        for key, records in clf_result["intermediates"].items():
            path = inter_dir / (key.replace("/", "__") + ".jsonl")
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                for record in records:
                    fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
            written.append(path)

    prov_path = out / "provenance.json"
    prov_path.write_text(json.dumps(provenance, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    written.append(prov_path)
    return written
