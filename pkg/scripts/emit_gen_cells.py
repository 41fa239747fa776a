"""Write one disambiguation corpus per held-out agreement cell.

    python scripts/emit_gen_cells.py --out runs/cells [--corpus cc_cp]

Each cell gets its own directory, e.g. runs/cells/cc_cp/past-past.
"""
from __future__ import annotations

import argparse
from pathlib import Path

from structgen.cli import main as cli
from structgen.qa import CORPORA, all_cells


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("runs/cells"))
    ap.add_argument("--corpus", choices=CORPORA, action="append")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for corpus in args.corpus or CORPORA:
        for cell in all_cells(corpus):
            target = args.out / corpus / cell.name
            code = cli(["qa", corpus, "--gen-cell", cell.name, "--seed", str(args.seed), "--out", str(target)])
            if code != 0:
                raise SystemExit(code)


if __name__ == "__main__":
    main()
