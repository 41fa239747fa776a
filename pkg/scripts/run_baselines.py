"""Build the default corpora and score every reference model on them.

    python scripts/run_baselines.py --out runs/baselines [--small]

Writes the corpora, each model's predictions, and one report per
(model, corpus) pair; a summary table goes to stdout.
"""
from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path

from structgen.cli import main as cli

log = logging.getLogger("run_baselines")

# (model, corpus directory, extra eval flags)
RUNS = [
    ("oracle-sem", "cogs", ["--depth", "pp"]),
    ("oracle-syntax", "syntax", ["--depth", "cp"]),
    ("mfpos", "pos", []),
    ("span-heuristic", "qa_base", ["--mode", "extractive"]),
    ("span-heuristic", "cc_cp", ["--mode", "extractive"]),
    ("span-heuristic", "rc_pp", ["--mode", "extractive"]),
    ("constrained", "cc_cp", []),
    ("constrained", "rc_pp", []),
]


def run(*argv: str) -> None:
    code = cli([str(a) for a in argv])
    if code != 0:
        raise SystemExit(f"structgen {' '.join(map(str, argv))} exited with {code}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("runs/baselines"))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--small", action="store_true", help="reduced sizes for a quick smoke run")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    out, seed = args.out, str(args.seed)

    synth = ["--counts", "2000,100,100,20"] if args.small else []
    disamb = ["--counts", "400,100,100,200"] if args.small else []
    log.info("synthesizing the COGS-style corpus")
    run("synth", "--seed", seed, "--out", out / "cogs", *synth)
    for target, name in (("syntax", "syntax"), ("pos", "pos")):
        log.info("deriving %s", name)
        run("derive", target, "--input", out / "cogs", "--out", out / name)
    log.info("building QA views")
    run("qa", "base", "--input", out / "cogs", "--out", out / "qa_base")
    for corpus in ("cc_cp", "rc_pp"):
        run("qa", corpus, "--seed", seed, "--out", out / corpus, *disamb)

    rows = []
    for model, corpus, flags in RUNS:
        pred_dir = out / "predictions" / corpus
        grammar = ["--grammar", corpus] if model == "constrained" else []
        log.info("%s on %s", model, corpus)
        run("baseline", model, "--input", out / corpus, "--out", pred_dir, *grammar)
        report = out / "reports" / f"{model}_{corpus}"
        run("eval", "--input", out / corpus, "--pred", pred_dir / f"{model}.txt", "--out", report, *flags)
        overall = json.loads((report / "report.json").read_text())["overall"]
        rows.append(f"{model:15s} {corpus:8s} {overall:6.1f}")
    print("\nmodel           corpus   overall")
    print("\n".join(rows))


if __name__ == "__main__":
    main()
