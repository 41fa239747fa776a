"""Command-line entry point: ``structgen <command> ...``.

Exit codes: 0 success, 1 validation error, 2 data error, 3 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from .config import ConfigError, PipelineConfig, read_config_file, resolve
from .evaluation import (
    AlignmentMismatch,
    aggregate_runs,
    depth_report,
    evaluate,
    read_predictions,
    write_predictions,
)
from .forge import (
    DERIVATIONS,
    DerivationError,
    SynthConfig,
    TSVFormatError,
    cogs_split_paths,
    load_cogs_tsv,
    make_probe_split,
    synthesize,
    write_cogs_tsv,
)
from .forge.bundle import DatasetBundle
from .compose import CompositionError
from .grammar import GrammarError, ParseError, SamplingError, UnknownTokenError
from .logical_form import LFSyntaxError, SRLError
from .qa import (
    DEFAULT_COUNTS,
    AttachmentError,
    FrameError,
    GenerationExhausted,
    build_qa_base,
    candidate_trees,
    load_qa_tsv,
    parse_cell,
    span_text,
    write_qa_tsv,
)
from .qa.disamb import DisambBuilder, DisambConfig
from .models import (
    AlignmentError,
    HeuristicError,
    constrained_constituent_selector,
    left_context_span_heuristic,
    mfpos_predict,
    mfpos_train,
    oracle_semantic_parse,
    oracle_syntax_parse,
)

EXIT_OK, EXIT_VALIDATION, EXIT_DATA, EXIT_INTERNAL = 0, 1, 2, 3
MANIFEST = "manifest.json"


class DataError(Exception):
    pass


# -- files ------------------------------------------------------------------------

def sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(out: Path, command: str, cfg: PipelineConfig, files: Sequence[Path],
                   counts: dict[str, int] | None = None) -> Path:
    manifest = {
        "command": command,
        "config": cfg.effective(),
        "counts": counts or {},
        "files": {p.name: sha256(p) for p in sorted(files)},
    }
    path = out / MANIFEST
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def _columns(path: Path) -> int | None:
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                return len(line.rstrip("\n").split("\t"))
    return None


def load_bundle(directory: str | Path) -> DatasetBundle:
    """COGS-style (3 columns) or QA (6 columns) split files from a directory."""
    paths = {s: p for s, p in cogs_split_paths(directory).items() if p.exists()}
    if not paths:
        raise DataError(f"no split files (train/dev/test/gen .tsv) in {directory}")
    widths = {c for c in (_columns(p) for p in paths.values()) if c is not None}
    if widths == {6}:
        return load_qa_tsv(paths, Path(directory).name)
    if widths - {3}:
        raise DataError(f"cannot tell the file format of {directory} (column counts {sorted(widths)})")
    return load_cogs_tsv(paths, Path(directory).name)


def is_qa(bundle: DatasetBundle) -> bool:
    return any(hasattr(x, "answer") for _, items in bundle.items() for x in items[:1])


def write_bundle(bundle: DatasetBundle, out: Path, cfg: PipelineConfig, command: str) -> list[Path]:
    written = write_qa_tsv(bundle, out) if is_qa(bundle) else write_cogs_tsv(bundle, out)
    files = list(written.values())
    write_manifest(out, command, cfg, files, bundle.sizes)
    return files


def _require_input(cfg: PipelineConfig, what: str) -> Path:
    if cfg.input is None:
        raise ConfigError(f"{what} needs --input (a directory of split TSVs)")
    return Path(cfg.input)


# -- commands ---------------------------------------------------------------------

def cmd_synth(cfg: PipelineConfig, args: argparse.Namespace) -> int:
    kw: dict[str, Any] = {"seed": cfg.seed, "lf_style": cfg.lf_style}
    if cfg.counts is not None:
        kw.update(zip(("train", "dev", "test", "gen_per_type"), cfg.counts))
    result = synthesize(SynthConfig(**kw), cfg.load_grammar())
    files = write_bundle(result.bundle, Path(cfg.out), cfg, "synth")
    print(f"wrote {len(files)} files to {cfg.out}: {result.bundle.sizes}")
    return EXIT_OK


def cmd_derive(cfg: PipelineConfig, args: argparse.Namespace) -> int:
    bundle = load_bundle(_require_input(cfg, "derive"))
    if is_qa(bundle):
        raise DataError("derive expects COGS-style (sentence, LF, type) files")
    fn = DERIVATIONS[args.subtarget]
    derived = fn(bundle, cfg.load_grammar())
    write_bundle(derived, Path(cfg.out), cfg, f"derive {args.subtarget}")
    print(f"{args.subtarget}: {derived.sizes} -> {cfg.out}")
    return EXIT_OK


def cmd_qa(cfg: PipelineConfig, args: argparse.Namespace) -> int:
    if args.subtarget == "base":
        bundle = load_bundle(_require_input(cfg, "qa base"))
        qa = build_qa_base(bundle, cfg.load_grammar())
    else:
        corpus = args.subtarget
        cell = parse_cell(corpus, cfg.gen_cell).name if cfg.gen_cell else None
        grammar = cfg.load_grammar() if cfg.grammar != "cogs" else None
        counts = tuple(cfg.counts) if cfg.counts is not None else DEFAULT_COUNTS
        dcfg = DisambConfig(counts, cfg.seed, cell, cfg.layout, cfg.question_style)  # type: ignore[arg-type]
        qa = DisambBuilder(corpus, grammar, dcfg).build()
    write_bundle(qa, Path(cfg.out), cfg, f"qa {args.subtarget}")
    print(f"qa {args.subtarget}: {qa.sizes} -> {cfg.out}")
    return EXIT_OK


def _corpus(cfg: PipelineConfig, gen: Sequence) -> str:
    if cfg.grammar in ("cc_cp", "rc_pp"):
        return cfg.grammar
    labels = {x.label for x in gen}
    if len(labels) == 1 and labels <= {"cc_cp", "rc_pp"}:
        return labels.pop()
    raise ConfigError("constrained selector needs --grammar cc_cp or rc_pp")


def baseline_predictions(model: str, bundle: DatasetBundle, cfg: PipelineConfig) -> list[str]:
    gen = bundle["gen"]
    qa = is_qa(bundle)
    if model in ("span-heuristic", "constrained") and not qa:
        raise DataError(f"{model} needs a QA bundle")
    if model in ("mfpos", "oracle-syntax", "oracle-sem") and qa:
        raise DataError(f"{model} needs a COGS-style bundle")
    if model == "mfpos":
        if not bundle["train"]:
            raise DataError("mfpos needs a non-empty train split")
        table = mfpos_train(bundle["train"])
        return [mfpos_predict(table, x.source) for x in gen]
    if model == "oracle-syntax":
        g, cache = cfg.load_grammar(), {}
        return [oracle_syntax_parse(g, x.source, cache) for x in gen]
    if model == "oracle-sem":
        g, cache = cfg.load_grammar(), {}
        return [oracle_semantic_parse(g, x.source, cfg.lf_style, cache) for x in gen]
    if model == "span-heuristic":
        out = []
        for x in gen:
            try:
                out.append(left_context_span_heuristic(x.context, x.question))
            except HeuristicError:
                out.append("")
        return out
    corpus = _corpus(cfg, gen)
    grammar = cfg.load_grammar() if cfg.grammar == corpus else DisambBuilder(corpus).g
    out = []
    trees: dict[str, Any] = {}
    for x in gen:
        if x.context not in trees:
            _, valid = candidate_trees(grammar, x.context)
            if len(valid) != 1:
                raise DataError(f"context has {len(valid)} agreement-valid trees: {x.context!r}")
            trees[x.context] = valid[0]
        span = constrained_constituent_selector(x.context, x.question, trees[x.context], grammar, corpus)
        out.append(span_text(x.tokens, span))
    return out


def cmd_baseline(cfg: PipelineConfig, args: argparse.Namespace) -> int:
    bundle = load_bundle(_require_input(cfg, "baseline"))
    preds = baseline_predictions(args.model, bundle, cfg)
    out = Path(cfg.out)
    if out.suffix not in (".txt", ".json"):
        out.mkdir(parents=True, exist_ok=True)
        out = out / f"{args.model}.txt"
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
    write_predictions(preds, out)
    write_manifest(out.parent, f"baseline {args.model}", cfg, [out], {"gen": len(preds)})
    print(f"{args.model}: {len(preds)} predictions -> {out}")
    return EXIT_OK


def cmd_eval(cfg: PipelineConfig, args: argparse.Namespace) -> int:
    bundle = load_bundle(_require_input(cfg, "eval"))
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    reports = []
    for path in args.pred:
        preds = read_predictions(path)
        reports.append(evaluate(preds, bundle, cfg.mode, type_averaged=cfg.type_averaged))
    files = []
    if len(reports) == 1:
        rep = reports[0]
        text = rep.render(integer=args.integer)
        files.append(out / "report.json")
        files[-1].write_text(json.dumps(rep.to_dict(), indent=2) + "\n", encoding="utf-8")
    else:
        agg = aggregate_runs(reports)
        text = agg.render()
        files.append(out / "report.json")
        files[-1].write_text(json.dumps({"runs": [r.to_dict() for r in reports], "aggregate": agg.to_dict()},
                                        indent=2) + "\n", encoding="utf-8")
    files.append(out / "report.txt")
    files[-1].write_text(text + "\n", encoding="utf-8")
    if cfg.depth:
        kind = cfg.depth.upper()
        dep = depth_report(read_predictions(args.pred[0]), bundle, cfg.load_grammar(), kind, cfg.mode, {})
        files.append(out / f"depth_{kind.lower()}.tsv")
        files[-1].write_text(dep.to_tsv(), encoding="utf-8")
    write_manifest(out, "eval", cfg, files, {"gen": len(bundle["gen"]), "runs": len(reports)})
    print(text)
    return EXIT_OK


def cmd_probe_split(cfg: PipelineConfig, args: argparse.Namespace) -> int:
    bundle = load_bundle(_require_input(cfg, "probe-split"))
    probe = make_probe_split(bundle, cfg.fractions, cfg.seed, stratified=cfg.stratified)
    write_bundle(probe, Path(cfg.out), cfg, "probe-split")
    print(f"probe split: {probe.sizes} -> {cfg.out}")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2, which is our data-error code
        raise ConfigError(message)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="TOML file; flags override its values")
    p.add_argument("--grammar", help="shipped grammar name (cogs, cc_cp, rc_pp) or a grammar file")
    p.add_argument("--lexicon", help="lexicon TSV overriding the grammar's %%lexicon")
    p.add_argument("--seed", type=int)
    p.add_argument("--input", help="directory with train/dev/test/gen .tsv files")
    p.add_argument("--out", help="output directory (or prediction file for baseline)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="structgen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("synth", help="sample a COGS-style corpus from the grammar")
    _common(p)
    p.add_argument("--counts", help="train,dev,test,gen-per-type")
    p.add_argument("--lf-style", choices=("compact", "cogs"))
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("derive", help="syntax / pos / srl / syn-input variants of a COGS bundle")
    p.add_argument("subtarget", choices=sorted(DERIVATIONS))
    _common(p)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("qa", help="QA-COGS-base or a disambiguation corpus")
    p.add_argument("subtarget", choices=("base", "cc_cp", "rc_pp"))
    _common(p)
    p.add_argument("--counts", help="train,dev,test,gen")
    p.add_argument("--gen-cell", help="held-out agreement cell, e.g. past-past or pl,sg")
    p.add_argument("--layout", choices=("cells", "separate"))
    p.add_argument("--question-style", choices=("natural", "relation"))
    p.set_defaults(func=cmd_qa)

    p = sub.add_parser("baseline", help="predictions of a reference model on the gen split")
    p.add_argument("model", choices=("mfpos", "oracle-syntax", "oracle-sem", "span-heuristic", "constrained"))
    _common(p)
    p.add_argument("--lf-style", choices=("compact", "cogs"))
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("eval", help="exact-match report for one or more prediction files")
    _common(p)
    p.add_argument("--pred", action="append", required=True, help="prediction file (repeat for several runs)")
    p.add_argument("--mode", choices=("strict", "extractive"))
    p.add_argument("--depth", choices=("pp", "cp"))
    p.add_argument("--type-averaged", action="store_true", default=None)
    p.add_argument("--integer", action="store_true", help="integer percentages in the text report")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("probe-split", help="move parts of gen into train/dev")
    _common(p)
    p.add_argument("--fractions", help="train,dev,test shares of gen (default 0.6,0.1,0.3)")
    p.add_argument("--stratified", action="store_true", default=None)
    p.set_defaults(func=cmd_probe_split)
    return parser


_NOT_CONFIG = {"command", "func", "config", "subtarget", "model", "pred", "integer"}


def resolve_config(args: argparse.Namespace) -> PipelineConfig:
    file_values = read_config_file(args.config, args.command) if args.config else {}
    overrides = {k: v for k, v in vars(args).items() if k not in _NOT_CONFIG}
    return resolve(file_values, overrides)


def _fail(code: int, kind: str, exc: BaseException) -> int:
    print(f"structgen: {kind}: {exc}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = resolve_config(args)
        func: Callable[[PipelineConfig, argparse.Namespace], int] = args.func
        return func(cfg, args)
    except (ConfigError, GrammarError) as exc:
        return _fail(EXIT_VALIDATION, "invalid configuration", exc)
    except (DataError, TSVFormatError, DerivationError, AlignmentMismatch, AlignmentError, ParseError,
            UnknownTokenError, GenerationExhausted, SamplingError, LFSyntaxError, SRLError, FrameError,
            CompositionError, json.JSONDecodeError, OSError) as exc:
        return _fail(EXIT_DATA, "data error", exc)
    except (AttachmentError, AssertionError) as exc:
        return _fail(EXIT_INTERNAL, "internal invariant violated", exc)
    except ValueError as exc:
        return _fail(EXIT_VALIDATION, "invalid value", exc)
    except Exception as exc:  # noqa: BLE001
        return _fail(EXIT_INTERNAL, f"internal error ({type(exc).__name__})", exc)


if __name__ == "__main__":
    sys.exit(main())
