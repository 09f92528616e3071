"""Command-line interface for hop toolkit."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from . import io
from .baselines import BASELINE_NAMES, Prediction, get_baseline
from .config import PipelineConfig
from .config.policies import EdgePolicy
from .corpus import load_corpus, prepare_corpus
from .debias import (
    apply_blocklist,
    build_cooccurrence,
    cap_answer_frequency,
    filter_by_cooccurrence,
    mask_sample,
    unmask_prediction,
)
from .evaluate import VIEWS, apply_view, exact_match_accuracy, superdocument_export
from .evaluate.superdoc import SPAN_MODES
from .exceptions import ConfigError, HopToolkitError
from .graph import GraphCache, build_graph, load_graph, save_graph
from .induce import induce_split
from .kbmodel import load_kb, validate_kb
from .stats import (
    METRICS,
    histogram,
    query_type_coverage,
    query_type_distribution,
    sample_values,
    split_stats,
)
from .synth import FixtureSpec, generate_fixture, write_fixture
from .utils.jsonio import canonical_dumps, write_jsonl

logger = logging.getLogger(__name__)


def parse_args(args: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        metavar="PATH",
        help="JSON pipeline configuration; flags override its values",
    )
    common.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Log debug messages",
    )

    parser = argparse.ArgumentParser(
        prog="hop-toolkit",
        description="Hop Toolkit - Induce multi-hop reading comprehension datasets",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    build = sub.add_parser("build", parents=[common], help="Build the entity-document graph")
    build.add_argument("--kb", required=True, help="Knowledge base JSON")
    build.add_argument("--corpus", required=True, help="Corpus JSON Lines")
    build.add_argument(
        "--policy",
        help="Edge policy: encyclopedic, biomedical or custom (default: encyclopedic)",
    )
    build.add_argument("--rules", help="Rule file for the custom edge policy")
    build.add_argument("--truncation", help="first_paragraph, max_tokens or none")
    build.add_argument("--max-tokens", type=int, help="Body token limit for max_tokens truncation")
    build.add_argument("--out", required=True, help="Output graph file")
    build.add_argument("--cache-dir", help="Reuse graphs built from identical inputs")

    induce = sub.add_parser("induce", parents=[common], help="Induce samples for one split")
    induce.add_argument("--graph", required=True, help="Graph file written by 'build'")
    induce.add_argument("--kb", required=True, help="Facts of this split")
    induce.add_argument("--corpus", required=True, help="Corpus JSON Lines")
    induce.add_argument("--train-kb", help="Training facts for candidate pools (non-train splits)")
    induce.add_argument("--split", help="Split label (default: train)")
    induce.add_argument("--policy", help="Edge policy (default: the graph's policy)")
    induce.add_argument("--seed", type=int, help="Random seed")
    induce.add_argument("--out", required=True, help="Output dataset JSON Lines")
    induce.add_argument("--ledger", help="Output discard ledger JSON")

    debias = sub.add_parser("debias", parents=[common], help="Filter dataset biases")
    debias.add_argument("--in", dest="input", required=True, help="Input dataset")
    debias.add_argument("--train", help="Training dataset for the cooccurrence table (default: --in)")
    debias.add_argument("--answer-cap", type=float, help="Maximum share of one answer (default: 0.001)")
    debias.add_argument("--cooc-threshold", type=int, help="Cooccurrence threshold (default: 20)")
    debias.add_argument("--blocklist", help="Entity ids whose documents are removed, one per line")
    debias.add_argument("--corpus", help="Corpus that maps documents to entities (needed with --blocklist)")
    debias.add_argument("--seed", type=int, help="Random seed")
    debias.add_argument("--table-out", help="Write the cooccurrence table as JSON Lines")
    debias.add_argument("--out", required=True, help="Output dataset")

    mask = sub.add_parser("mask", parents=[common], help="Replace candidates by placeholders")
    mask.add_argument("--in", dest="input", required=True, help="Input dataset")
    mask.add_argument("--seed", type=int, help="Random seed")
    mask.add_argument("--pool-size", type=int, help="Number of placeholder tokens (default: 100)")
    mask.add_argument("--out", required=True, help="Output dataset")

    export = sub.add_parser("export", parents=[common], help="Export superdocuments")
    export.add_argument("--in", dest="input", required=True, help="Input dataset")
    export.add_argument("--seed", type=int, help="Random seed")
    export.add_argument("--span", choices=SPAN_MODES, default="first", help="Gold span choice")
    export.add_argument("--out", required=True, help="Output JSON Lines")

    baseline = sub.add_parser("baseline", parents=[common], help="Run a baseline predictor")
    baseline.add_argument("--model", required=True, choices=BASELINE_NAMES)
    baseline.add_argument("--train", help="Training dataset (majority, cue)")
    baseline.add_argument("--test", required=True, help="Dataset to predict")
    baseline.add_argument("--seed", type=int, help="Random seed")
    baseline.add_argument("--view", choices=VIEWS, default="full", help="Support view")
    baseline.add_argument("--unmask", action="store_true", help="Map placeholder predictions back")
    baseline.add_argument("--out", required=True, help="Output predictions")

    evaluate = sub.add_parser("eval", parents=[common], help="Score predictions")
    evaluate.add_argument("--pred", required=True, help="Predictions JSON Lines")
    evaluate.add_argument("--gold", required=True, help="Gold dataset")
    evaluate.add_argument("--view", choices=VIEWS, default="full", help="Score samples kept by this view")
    evaluate.add_argument("--subset", help="Sample ids to score, one per line")
    evaluate.add_argument("--out", help="Output report JSON")

    stats = sub.add_parser("stats", parents=[common], help="Dataset statistics")
    stats.add_argument("--in", dest="input", required=True, help="Input dataset")
    stats.add_argument("--out", required=True, help="Output report JSON")
    stats.add_argument("--histograms", help="Directory for per-metric histogram CSV files")
    stats.add_argument("--bin-width", type=int, default=1, help="Histogram bin width")

    synth = sub.add_parser("synth", parents=[common], help="Generate a synthetic fixture")
    synth.add_argument("--spec", help="Fixture spec JSON")
    synth.add_argument("--seed", type=int, help="Random seed")
    synth.add_argument("--out", required=True, help="Output directory")

    return parser.parse_args(args)


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv`` and run the subcommand; usage errors return 2."""
    try:
        parsed_args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    return _execute(parsed_args)


def main(args: Optional[List[str]] = None) -> int:
    """Main entry point for CLI."""
    return run(args)


def _execute(args: argparse.Namespace) -> int:
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return run_command(args)
    except KeyboardInterrupt:
        print("\nAborted by user", file=sys.stderr)
        return 130
    except (HopToolkitError, OSError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


def run_command(args: argparse.Namespace) -> int:
    """Execute the command based on parsed arguments."""
    handler: Callable[[argparse.Namespace], Dict[str, Any]] = _HANDLERS[args.command]
    summary = handler(args)
    print(canonical_dumps({"command": args.command, **summary}))
    return 0


def load_config(args: argparse.Namespace, **overrides) -> PipelineConfig:
    """Config file (if any) with flag overrides applied."""
    config = PipelineConfig.from_file(args.config) if args.config else PipelineConfig()
    return config.merged(overrides)


def _read_training(path: Optional[str], needed_by: str):
    if not path:
        raise ConfigError(f"{needed_by} needs a training dataset (--train)")
    return io.read_dataset(path)


def _cmd_build(args: argparse.Namespace) -> Dict[str, Any]:
    config = load_config(
        args,
        policy=args.policy,
        rules_path=args.rules,
        truncation=args.truncation,
        max_tokens=args.max_tokens,
    )

    cache = GraphCache(Path(args.cache_dir)) if args.cache_dir else None
    key = cache.generate_key(args.kb, args.corpus, config) if cache else None
    graph = cache.load(key) if cache else None
    cache_hit = graph is not None
    if cache_hit:
        print(f"  [Cache HIT] {cache.get_path(key).name}")
    else:
        kb = load_kb(args.kb)
        report = validate_kb(kb)
        if report:
            logger.warning("KB validation: %s", report.summary())
        corpus = prepare_corpus(load_corpus(args.corpus), kb, config)
        print(f"  [Build] {len(corpus)} documents, {len(kb.entities)} entities")
        graph = build_graph(corpus, kb, config)
        if cache:
            cache.save(key, graph)

    out = save_graph(graph, args.out)
    print(f"  [Build] {graph.number_of_edges} edges -> {out}")
    return {
        "cache_hit": cache_hit,
        "documents": graph.number_of_documents,
        "edges": graph.number_of_edges,
        "entities": graph.number_of_entities,
        "out": str(out),
        "policy": graph.policy_tag,
    }


def _cmd_induce(args: argparse.Namespace) -> Dict[str, Any]:
    graph = load_graph(args.graph)
    policy = args.policy
    if policy is None and not args.config and graph.policy_tag != EdgePolicy.CUSTOM.value:
        policy = graph.policy_tag
    config = load_config(args, policy=policy, split=args.split, seed=args.seed)
    if config.policy.value != graph.policy_tag:
        logger.warning("Graph was built with policy '%s', inducing with '%s'",
                       graph.policy_tag, config.policy.value)

    kb = load_kb(args.kb)
    pool_kb = load_kb(args.train_kb) if args.train_kb else None
    corpus = prepare_corpus(load_corpus(args.corpus), kb, config)
    result = induce_split(kb, graph, corpus, config, pool_kb=pool_kb)

    n = io.write_dataset(args.out, result.samples)
    ledger = result.ledger.to_dict()
    if args.ledger:
        io.write_report(args.ledger, {"split": config.split, "samples": n, "discarded": ledger})
    print(f"  [Induce] {n} samples, {result.ledger.total} discarded")
    return {"discarded": ledger, "out": args.out, "samples": n, "split": config.split}


def _cmd_debias(args: argparse.Namespace) -> Dict[str, Any]:
    config = load_config(
        args,
        answer_cap=args.answer_cap,
        cooc_threshold=args.cooc_threshold,
        seed=args.seed,
    )
    samples = io.read_dataset(args.input)
    n_in = len(samples)
    blocked = set(io.read_id_list(args.blocklist)) if args.blocklist else set()
    doc_entities = None
    if blocked:
        if not args.corpus:
            raise ConfigError("--blocklist needs --corpus to map documents to entities")
        doc_entities = {
            doc.doc_id: doc.canonical_entity
            for doc in load_corpus(args.corpus)
            if doc.canonical_entity is not None
        }

    samples = apply_blocklist(samples, blocked, doc_entities)
    after_blocklist = len(samples)
    train = apply_blocklist(io.read_dataset(args.train), blocked, doc_entities) if args.train else samples
    table = build_cooccurrence(train, built_from=args.train or args.input)
    if args.table_out:
        write_jsonl(args.table_out, table.to_records())

    samples = filter_by_cooccurrence(samples, table, config.cooc_threshold)
    after_cooc = len(samples)
    samples = cap_answer_frequency(samples, config.answer_cap, config.seed)

    n = io.write_dataset(args.out, samples)
    print(f"  [Debias] {n_in} -> {n} samples")
    return {
        "after_answer_cap": n,
        "after_blocklist": after_blocklist,
        "after_cooccurrence": after_cooc,
        "input": n_in,
        "out": args.out,
    }


def _cmd_mask(args: argparse.Namespace) -> Dict[str, Any]:
    config = load_config(args, seed=args.seed, mask_pool_size=args.pool_size)
    samples = io.read_dataset(args.input)
    masked = [mask_sample(s, config.mask_pool_size, config.seed)[0] for s in samples]
    n = io.write_dataset(args.out, masked)
    print(f"  [Mask] {n} samples")
    return {"out": args.out, "samples": n}


def _cmd_export(args: argparse.Namespace) -> Dict[str, Any]:
    config = load_config(args, seed=args.seed)
    samples = io.read_dataset(args.input)
    n = write_jsonl(
        args.out,
        (superdocument_export(s, seed=config.seed, span=args.span).to_dict() for s in samples),
    )
    print(f"  [Export] {n} superdocuments")
    return {"out": args.out, "samples": n, "span": args.span}


def _cmd_baseline(args: argparse.Namespace) -> Dict[str, Any]:
    config = load_config(args, seed=args.seed)
    kwargs = {"seed": config.seed} if args.model in ("random", "maxmention") else {}
    model = get_baseline(args.model, **kwargs)
    if model.needs_training:
        model.fit(_read_training(args.train, f"Model '{args.model}'"))

    test = apply_view(io.read_dataset(args.test), args.view)
    predictions = model.predict_all(test)
    if args.unmask:
        by_id = {s.id: s for s in test}
        predictions = [
            Prediction(p.sample_id, unmask_prediction(p.predicted, by_id[p.sample_id].mask_map), p.score)
            for p in predictions
        ]
    n = io.write_predictions(args.out, predictions)
    print(f"  [Baseline] {model.get_name()}: {n} predictions")
    return {"model": model.get_name(), "out": args.out, "predictions": n, "view": args.view}


def _cmd_eval(args: argparse.Namespace) -> Dict[str, Any]:
    predictions = io.read_predictions(args.pred)
    gold = apply_view(io.read_dataset(args.gold), args.view)
    subset = set(io.read_id_list(args.subset)) if args.subset else None
    report = exact_match_accuracy(predictions, gold, subset=subset).to_dict()
    report["view"] = args.view
    if args.out:
        io.write_report(args.out, report)
    print(f"  [Eval] accuracy {report['accuracy']:.4f} over {report['n_scored']} samples")
    return report


def _cmd_stats(args: argparse.Namespace) -> Dict[str, Any]:
    samples = io.read_dataset(args.input)
    report = split_stats(samples).to_dict()
    report["query_type_distribution"] = [list(pair) for pair in query_type_distribution(samples)]
    report["query_type_coverage"] = {str(k): v for k, v in query_type_coverage(samples).items()}
    io.write_report(args.out, report)

    written = []
    if args.histograms:
        for metric in METRICS:
            path = Path(args.histograms) / f"{metric}.csv"
            io.write_histogram_csv(path, histogram(sample_values(samples, metric), args.bin_width))
            written.append(str(path))
    print(f"  [Stats] {report['n_samples']} samples -> {args.out}")
    return {"histograms": written, "out": args.out, "samples": report["n_samples"]}


def _cmd_synth(args: argparse.Namespace) -> Dict[str, Any]:
    spec = FixtureSpec.from_file(args.spec) if args.spec else FixtureSpec()
    if args.seed is not None:
        spec = FixtureSpec.from_dict({**spec.to_dict(), "seed": args.seed})
    fixture = generate_fixture(spec)
    paths = write_fixture(fixture, args.out)
    print(f"  [Synth] {len(fixture.ground_truth)} facts, {len(fixture.corpus)} documents -> {args.out}")
    return {
        "documents": len(fixture.corpus),
        "facts": len(fixture.ground_truth),
        "files": {name: str(p) for name, p in sorted(paths.items())},
        "seed": spec.seed,
    }


_HANDLERS: Dict[str, Callable[[argparse.Namespace], Dict[str, Any]]] = {
    "build": _cmd_build,
    "induce": _cmd_induce,
    "debias": _cmd_debias,
    "mask": _cmd_mask,
    "export": _cmd_export,
    "baseline": _cmd_baseline,
    "eval": _cmd_eval,
    "stats": _cmd_stats,
    "synth": _cmd_synth,
}
