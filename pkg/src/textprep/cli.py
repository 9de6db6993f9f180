"""Command-line interface.

Subcommands: ``preprocess`` (one-off text through any backend), ``agree``,
``classify``, ``tune``, ``cache stats|verify``, ``report``. Exit codes:
0 success, 1 configuration or usage error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from textprep import classic
from textprep.corpus import Document
from textprep.llmproc import (
    EchoBackend,
    LlmConfig,
    LlmError,
    ReplayBackend,
    ResponseCache,
    load_template,
    make_backend,
    preprocess_llm,
)
from textprep.pipeline import (
    LLM_OPERATION,
    PreprocessSpec,
    apply_classic_chain,
    classic_text_transform,
)
from textprep.runner import (
    ConfigError,
    emit_report,
    load_config,
    run_agreement,
    run_classification,
    run_tune,
)
from textprep.stemmers import StemmerId
from textprep.tokenize import render_tokens, tokenize

OP_TO_COMBO = {
    "stopwords": "SW",
    "lemmatize": "L",
    "stem": "S",
    "stopwords+lemmatize": "SW+L",
    "stopwords+stem": "SW+S",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textprep",
        description="Classic and LLM-backed text preprocessing, agreement "
        "metrics, and classification benchmarks.",
    )
    sub = parser.add_subparsers(dest="command")

    prep = sub.add_parser("preprocess", help="run one text through a backend")
    prep.add_argument("--op", required=True, choices=sorted(OP_TO_COMBO))
    prep.add_argument("--backend", default="classic", choices=["classic", "llm", "echo"])
    prep.add_argument("--algo", default=None, help="stemmer: porter|lancaster|snowball[:lang]")
    prep.add_argument("--language", default="en")
    prep.add_argument("--task", default="")
    prep.add_argument("--prompt-language", default="en")
    prep.add_argument("--endpoint", default="")
    prep.add_argument("--model", default="")
    prep.add_argument("--temperature", type=float, default=0.7)
    prep.add_argument("--cache", default=None)
    prep.add_argument("--replay", action="store_true")
    prep.add_argument("text")

    for name in ("agree", "classify", "tune"):
        cmd = sub.add_parser(name, help=f"run the {name} step from a config file")
        cmd.add_argument("--config", required=True)
        cmd.add_argument("--replay", action="store_true", default=None)
        cmd.add_argument("--endpoint", default=None)
        cmd.add_argument("--model", default=None)
        cmd.add_argument("--temperature", type=float, default=None)
        cmd.add_argument("--seed", type=int, default=None)
        cmd.add_argument("--out", default=None)

    cache = sub.add_parser("cache", help="inspect a response cache")
    cache_sub = cache.add_subparsers(dest="cache_command")
    stats = cache_sub.add_parser("stats")
    stats.add_argument("--cache", required=True)
    verify = cache_sub.add_parser("verify")
    verify.add_argument("--cache", required=True)

    report = sub.add_parser("report", help="re-emit reports from a config file")
    report.add_argument("--config", required=True)
    report.add_argument("--replay", action="store_true", default=None)
    report.add_argument("--seed", type=int, default=None)
    report.add_argument("--out", default=None)

    return parser


def _overrides(args) -> dict:
    overrides = {}
    for key in ("replay", "endpoint", "model", "temperature", "seed", "out"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    return overrides


def _cmd_preprocess(args) -> int:
    combo = OP_TO_COMBO[args.op]
    algo = StemmerId.parse(args.algo, args.language) if args.algo else None
    spec = PreprocessSpec(
        combo=combo,
        backend=args.backend,
        language=args.language,
        task=args.task,
        stemmer=algo,
        prompt_language=args.prompt_language,
    )
    inv, table = classic.load_wordlists(args.language, args.task)
    if args.backend == "classic":
        tokens = apply_classic_chain(tokenize(args.text), spec, inv, table)
        print(render_tokens(tokens))
        return 0
    model_name = args.model or ("echo" if args.backend == "echo" else "default")
    config = LlmConfig(
        endpoint_url=args.endpoint,
        model_name=model_name,
        temperature=args.temperature,
        cache_path=args.cache,
        replay=args.replay,
    )
    cache = ResponseCache(args.cache)
    template = load_template(
        LLM_OPERATION[combo],
        args.prompt_language,
        task_context=args.task,
        sentiment=args.task.lower() in classic.SENTIMENT_TASKS,
    )
    if args.backend == "echo":
        backend = EchoBackend(classic_text_transform(spec, inv, table))
    elif args.replay:
        backend = ReplayBackend()
    else:
        backend = make_backend(config)
    doc = Document(id="cli:1", text=args.text, label="-", language=args.language)
    result = preprocess_llm(doc, config, template, cache, backend)
    print(result.text)
    return 0


def _cmd_cache(args) -> int:
    cache = ResponseCache(args.cache)
    if args.cache_command == "stats":
        print(json.dumps(cache.stats(), indent=2, sort_keys=True))
        return 0
    bad = cache.verify()
    if bad:
        print(f"{len(bad)} corrupt entries:")
        for key in bad:
            print(f"  {key}")
        return 2
    print(f"cache OK ({len(cache)} entries)")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    if not argv:
        parser.print_usage()
        return 1
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    if args.command is None:
        parser.print_usage()
        return 1
    if args.command == "cache" and getattr(args, "cache_command", None) is None:
        parser.print_usage()
        return 1

    try:
        if args.command == "preprocess":
            return _cmd_preprocess(args)
        if args.command == "cache":
            return _cmd_cache(args)
        config = load_config(args.config, _overrides(args))
        if args.command == "tune":
            print(json.dumps(run_tune(config), indent=2, sort_keys=True))
            return 0
        out_dir = Path(args.out) if args.out else None
        if args.command == "agree":
            result = run_agreement(config)
            paths = emit_report(config, result, None, out_dir)
        elif args.command == "classify":
            result = run_classification(config)
            paths = emit_report(config, None, result, out_dir)
        else:  # report: run both and emit everything
            paths = emit_report(
                config, run_agreement(config), run_classification(config), out_dir
            )
        for path in paths:
            print(path)
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except (LlmError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
