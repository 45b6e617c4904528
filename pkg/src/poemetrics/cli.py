"""Command-line entry point.

Commands: ``analyze`` (one poem file), ``analyze-collection`` (a directory
tree), ``evaluate`` (a poem against an expectation file) and
``list-analyzers``.  Reports are JSON or CSV, written to stdout or ``--out``
atomically.  Exit codes: 0 success (and all expectations passing), 1 when
any expectation fails, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .analyzers import default_registry
from .corpus import (
    EmptyPoemError,
    Poem,
    TokenPolicy,
    load_collection,
    parse_poem,
    tokenize,
)
from .framework import AnalyzerRegistry, evaluate, load_expectations
from .lexsem import EmbeddingServiceClient, fit_collection_embedder
from .novelty import active_backend
from .phonetics import PronLexicon, load_lexicon, syllable_count_word
from .report import aspect_grouped, emit_plot_data, flatten_for_csv, novelty_section

LEXICON_ENV = "POEMETRICS_LEXICON"
EMBED_URL_ENV = "POEMETRICS_EMBED_URL"


class ConfigError(ValueError):
    """A bad flag combination or unusable input; exits with status 2."""


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    language: str = "en"
    lexicon_path: str | None = None
    keep_case: bool = False
    keep_punctuation: bool = False
    rouge_order: int = 1
    novelty_mode: str = "all-lines"
    sample: int | None = None
    seed: int | None = None
    embedder: str = "tfidf"
    embed_timeout: float = 30.0
    expect_path: str | None = None
    output_format: str = "json"
    plot_data: bool = False
    out_path: str | None = None
    stable_output: bool = False

    @property
    def policy(self) -> TokenPolicy:
        return TokenPolicy(lowercase=not self.keep_case,
                           strip_punctuation=not self.keep_punctuation)

    def echo(self) -> dict:
        return {
            "command": self.command,
            "input": self.input_path,
            "lang": self.language,
            "lexicon": self.lexicon_path,
            "lowercase": not self.keep_case,
            "strip_punctuation": not self.keep_punctuation,
            "rouge_n": self.rouge_order,
            "novelty_mode": self.novelty_mode,
            "sample": self.sample,
            "seed": self.seed,
            "embedder": self.embedder,
            "expect": self.expect_path,
            "format": self.output_format,
            "plot_data": self.plot_data,
            "stable_output": self.stable_output,
        }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poemetrics",
        description="Analyze and evaluate poems: form, novelty, lexico-semantics.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lang", default="en", help="2-letter poem language code")
    common.add_argument("--lexicon", default=None,
                        help=f"pronunciation lexicon path (or ${LEXICON_ENV})")
    common.add_argument("--keep-case", action="store_true",
                        help="do not lowercase tokens")
    common.add_argument("--keep-punctuation", action="store_true",
                        help="do not strip edge punctuation from tokens")
    common.add_argument("--rouge-n", type=int, default=1, dest="rouge_n",
                        help="n-gram order for novelty (default 1)")
    common.add_argument("--novelty-mode", default="all-lines",
                        choices=["single-string", "line-by-line", "all-lines"],
                        help="inter-poem comparison mode")
    common.add_argument("--sample", type=int, default=None, metavar="N",
                        help="undersample inter-poem novelty to N poem pairs")
    common.add_argument("--seed", type=int, default=None, metavar="S",
                        help="seed for pair sampling (required with --sample)")
    common.add_argument("--embedder", default=None,
                        help="'tfidf' or 'url=http://...' for an embedding service")
    common.add_argument("--embed-timeout", type=float, default=30.0,
                        help="embedding service timeout in seconds")
    common.add_argument("--format", default="json", choices=["json", "csv"],
                        dest="output_format")
    common.add_argument("--plot-data", action="store_true",
                        help="include histogram/boxplot data in the report")
    common.add_argument("--out", default=None, dest="out_path",
                        help="write the report to this path instead of stdout")
    common.add_argument("--stable-output", action="store_true",
                        help="omit timestamps so identical runs emit identical bytes")

    sub = parser.add_subparsers(dest="command", required=True)
    p_an = sub.add_parser("analyze", parents=[common], help="analyze one poem file")
    p_an.add_argument("input", help="poem text file")
    p_col = sub.add_parser("analyze-collection", parents=[common],
                           help="analyze a directory of poems (topic subfolders)")
    p_col.add_argument("input", help="collection root directory")
    p_ev = sub.add_parser("evaluate", parents=[common],
                          help="evaluate one poem against expectations")
    p_ev.add_argument("input", help="poem text file")
    p_ev.add_argument("--expect", required=True, dest="expect_path",
                      help="JSON expectation file")
    sub.add_parser("list-analyzers", parents=[common], help="list registered analyzers")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    embedder = args.embedder
    if embedder is None:
        env_url = os.environ.get(EMBED_URL_ENV)
        embedder = f"url={env_url}" if env_url else "tfidf"
    lexicon = args.lexicon if args.lexicon is not None else os.environ.get(LEXICON_ENV)
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        language=args.lang,
        lexicon_path=lexicon,
        keep_case=args.keep_case,
        keep_punctuation=args.keep_punctuation,
        rouge_order=args.rouge_n,
        novelty_mode=args.novelty_mode,
        sample=args.sample,
        seed=args.seed,
        embedder=embedder,
        embed_timeout=args.embed_timeout,
        expect_path=getattr(args, "expect_path", None),
        output_format=args.output_format,
        plot_data=args.plot_data,
        out_path=args.out_path,
        stable_output=args.stable_output,
    )


def _validate(config: RunConfig) -> None:
    if config.sample is not None and config.seed is None:
        raise ConfigError("--sample requires --seed for reproducible reports")
    if config.rouge_order < 1:
        raise ConfigError("--rouge-n must be >= 1")
    if not (config.embedder == "tfidf" or config.embedder.startswith("url=")):
        raise ConfigError("--embedder must be 'tfidf' or 'url=...'")
    if len(config.language) != 2:
        raise ConfigError("--lang must be a 2-letter code")


def _load_lexicon(config: RunConfig) -> PronLexicon | None:
    if config.lexicon_path is None:
        return None
    try:
        return load_lexicon(config.lexicon_path)
    except OSError as exc:
        raise ConfigError(f"cannot read lexicon: {exc}") from exc


def _build_registry(config: RunConfig, lexicon: PronLexicon | None,
                    novelty_cache: dict) -> AnalyzerRegistry:
    if config.embedder.startswith("url="):
        client = EmbeddingServiceClient(config.embedder[4:], timeout=config.embed_timeout)
        embedder_factory = lambda coll: client
    else:
        embedder_factory = lambda coll: fit_collection_embedder(coll, config.policy)
    sample = (config.sample, config.seed) if config.sample is not None else None
    return default_registry(
        lexicon=lexicon,
        policy=config.policy,
        language=config.language,
        rouge_order=config.rouge_order,
        novelty_mode=config.novelty_mode,
        sample=sample,
        embedder_factory=embedder_factory,
        novelty_cache=novelty_cache,
    )


def _metadata(config: RunConfig, lexicon: PronLexicon | None,
              poems: list[Poem]) -> dict:
    meta = {
        "config": config.echo(),
        "kernel_backend": active_backend(),
        "version": __version__,
        "lexicon": None,
        "oov": None,
    }
    if lexicon is not None:
        meta["lexicon"] = {
            "path": config.lexicon_path,
            "entries": len(lexicon),
            "malformed_lines": len(lexicon.problems),
        }
        total = 0
        oov = 0
        for poem in poems:
            for line in poem.lines:
                for token in tokenize(line, config.policy):
                    total += 1
                    oov += syllable_count_word(token, lexicon)[1]
        meta["oov"] = {"tokens": total, "oov_tokens": oov,
                       "rate": oov / total if total else 0.0}
    if not config.stable_output:
        meta["generated_at"] = datetime.now(timezone.utc).isoformat()
    return meta


def _read_poem(config: RunConfig) -> Poem:
    path = Path(config.input_path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError(f"cannot read poem: {exc}") from exc
    try:
        return parse_poem(text, id=path.name, source=path.stem,
                          language=config.language)
    except EmptyPoemError as exc:
        raise ConfigError(str(exc)) from exc


def _poem_entry(poem: Poem, registry: AnalyzerRegistry, results=None) -> dict:
    if results is None:
        results = registry.analyze(poem)
    return {
        "id": poem.id,
        "source": poem.source,
        "language": poem.language,
        "topic": poem.topic,
        "stanza_count": poem.stanza_count,
        "line_count": poem.line_count,
        "aspects": aspect_grouped(results, registry),
    }


def run(config: RunConfig) -> tuple[int, dict]:
    """Execute one command; returns (exit_status, report document)."""
    _validate(config)
    lexicon = _load_lexicon(config)
    novelty_cache: dict = {}
    registry = _build_registry(config, lexicon, novelty_cache)

    if config.command == "list-analyzers":
        report = {
            "metadata": _metadata(config, lexicon, []),
            "analyzers": [
                {"id": d.id, "name": d.display_name, "aspect": d.aspect,
                 "scope": d.scope, "language": d.language}
                for d in registry.descriptors()
            ],
        }
        return 0, report

    if config.command in ("analyze", "evaluate"):
        poem = _read_poem(config)
        results = registry.analyze(poem)
        report = {
            "metadata": _metadata(config, lexicon, [poem]),
            "poems": [_poem_entry(poem, registry, results)],
        }
        if config.command == "evaluate":
            try:
                expectations = load_expectations(config.expect_path)
            except (OSError, ValueError) as exc:
                raise ConfigError(f"bad expectation file: {exc}") from exc
            verdicts = evaluate(results, expectations)
            report["evaluation"] = {
                "results": [
                    {"analyzer": v.analyzer_id, "observed": v.observed,
                     "expected": v.expected, "verdict": v.verdict,
                     **({"note": v.note} if v.note else {})}
                    for v in verdicts
                ],
                "all_passed": all(v.passed for v in verdicts),
            }
            return (0 if report["evaluation"]["all_passed"] else 1), report
        return 0, report

    if config.command == "analyze-collection":
        try:
            collection = load_collection(config.input_path, language=config.language)
        except NotADirectoryError as exc:
            raise ConfigError(str(exc)) from exc
        report = {
            "metadata": _metadata(config, lexicon, list(collection.poems)),
            "issues": [{"path": i.path, "reason": i.reason} for i in collection.issues],
            "poems": [_poem_entry(p, registry) for p in collection.poems],
            "collection": {
                "poem_count": len(collection),
                "topics": sorted(collection.topics),
                "aspects": aspect_grouped(registry.analyze(collection), registry),
            },
        }
        novelty = {}
        for scope in ("intra", "inter"):
            cached = novelty_cache.get((scope, id(collection)))
            if cached is not None:
                novelty[scope] = novelty_section(cached)
            else:
                novelty[scope] = {"error": _analyzer_error(
                    report["collection"]["aspects"], f"{scope}-novelty-mean")}
        report["novelty"] = novelty
        if config.plot_data:
            report["distributions"] = emit_plot_data(report)
        return 0, report

    raise ConfigError(f"unknown command {config.command!r}")


def _analyzer_error(aspects: dict, analyzer_id: str) -> str:
    for results in aspects.values():
        for entry in results:
            if entry["analyzer"] == analyzer_id:
                return entry.get("error", "not computed")
    return "not computed"


def render(report: dict, output_format: str) -> str:
    if output_format == "json":
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["section", "unit", "analyzer", "metric", "value"])
    for row in flatten_for_csv(report):
        writer.writerow(row)
    return buffer.getvalue()


def write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    target = Path(out_path)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    try:
        status, report = run(config)
    except ConfigError as exc:
        print(f"poemetrics: error: {exc}", file=sys.stderr)
        return 2
    write_output(render(report, config.output_format), config.out_path)
    return status


if __name__ == "__main__":
    sys.exit(main())
