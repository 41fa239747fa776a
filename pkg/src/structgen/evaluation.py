"""Exact-match scoring with per-type, depth-bucketed and multi-run reports."""
from __future__ import annotations

import json
import math
import statistics
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .forge.bundle import GEN_TYPES, DatasetBundle, GenClass
from .forge.derive import ParseCache, unique_parse
from .grammar import FeatureGrammar, coarsen, label_depth
from .qa.instances import normalize_determiner

MODES = ("strict", "extractive")
DEPTHS = tuple(range(3, 13))


def exact_match(pred: str, gold: str, mode: str = "strict") -> bool:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "extractive":
        pred, gold = normalize_determiner(pred.strip()), normalize_determiner(gold.strip())
    return pred.split() == gold.split()


def gold_of(item) -> str:
    """Target for seq2seq instances, answer for QA instances."""
    return item.answer if hasattr(item, "answer") else item.target


def source_of(item) -> str:
    return item.context if hasattr(item, "context") else item.source


@dataclass(frozen=True)
class Score:
    correct: int
    total: int

    @property
    def accuracy(self) -> float:
        return 100.0 * self.correct / self.total if self.total else 0.0


@dataclass(frozen=True)
class EvalReport:
    per_type: Mapping[str, Score]
    mode: str = "strict"
    type_averaged: bool = False

    @property
    def total(self) -> Score:
        return Score(sum(s.correct for s in self.per_type.values()), sum(s.total for s in self.per_type.values()))

    @property
    def overall(self) -> float:
        if self.type_averaged:
            scores = [s.accuracy for s in self.per_type.values() if s.total]
            return sum(scores) / len(scores) if scores else 0.0
        return self.total.accuracy

    def _class_types(self, cls: GenClass) -> list[str]:
        return [t for t in self.per_type if t in GEN_TYPES and GEN_TYPES[t].cls is cls]

    @property
    def lex_mean(self) -> float | None:
        lex = self._class_types(GenClass.LEX)
        return sum(self.per_type[t].accuracy for t in lex) / len(lex) if lex else None

    @property
    def struct(self) -> dict[str, float]:
        return {t: self.per_type[t].accuracy for t in self._class_types(GenClass.STRUCT)}

    def cells(self) -> dict[str, float]:
        out = {t: s.accuracy for t, s in sorted(self.per_type.items())}
        if self.lex_mean is not None:
            out["lex_mean"] = self.lex_mean
        out["overall"] = self.overall
        return out

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "overall": round(self.overall, 1),
            "overall_weighting": "type" if self.type_averaged else "instance",
            "lex_mean": None if self.lex_mean is None else round(self.lex_mean, 1),
            "struct": {t: round(a, 1) for t, a in self.struct.items()},
            "per_type": {t: {"accuracy": round(s.accuracy, 1), "correct": s.correct, "total": s.total}
                         for t, s in sorted(self.per_type.items())},
        }

    def render(self, integer: bool = False) -> str:
        fmt = (lambda x: f"{x:.0f}") if integer else (lambda x: f"{x:.1f}")
        width = max([len(t) for t in self.per_type] + [12])
        lines = [f"{'type':<{width}}  {'acc':>6}  {'n':>6}"]
        for t, s in sorted(self.per_type.items()):
            lines.append(f"{t:<{width}}  {fmt(s.accuracy):>6}  {s.total:>6}")
        if self.lex_mean is not None:
            lines.append(f"{'Lex (mean)':<{width}}  {fmt(self.lex_mean):>6}")
        lines.append(f"{'overall':<{width}}  {fmt(self.overall):>6}  {self.total.total:>6}")
        return "\n".join(lines)


class AlignmentMismatch(ValueError):
    pass


def _items(gold) -> Sequence:
    if isinstance(gold, DatasetBundle):
        return gold["gen"]
    return list(gold)


def evaluate(preds: Sequence[str], gold, mode: str = "strict", *, type_averaged: bool = False) -> EvalReport:
    """Score predictions aligned with ``gold`` (a bundle's gen split or a list of items)."""
    items = _items(gold)
    if len(preds) != len(items):
        raise AlignmentMismatch(f"{len(preds)} predictions for {len(items)} instances")
    correct: dict[str, int] = {}
    total: dict[str, int] = {}
    for p, item in zip(preds, items):
        label = item.label or "unlabeled"
        total[label] = total.get(label, 0) + 1
        correct[label] = correct.get(label, 0) + exact_match(p, gold_of(item), mode)
    return EvalReport({t: Score(correct[t], total[t]) for t in sorted(total)}, mode, type_averaged)


@dataclass(frozen=True)
class DepthReport:
    kind: str
    buckets: Mapping[int, Score]
    outside: int = 0

    def to_tsv(self) -> str:
        rows = ["depth\taccuracy\tn"]
        rows += [f"{d}\t{s.accuracy:.1f}\t{s.total}" for d, s in sorted(self.buckets.items())]
        return "\n".join(rows) + "\n"


RECURSION_TYPES = {"PP": "pp_recursion", "CP": "cp_recursion"}


def depth_report(preds: Sequence[str], gold, grammar: FeatureGrammar, recursion_kind: str = "PP",
                 mode: str = "strict", cache: ParseCache | None = None) -> DepthReport:
    """Accuracy per nesting depth (3..12) of PP or CP nodes in the gold tree."""
    kind = recursion_kind.upper()
    if kind not in RECURSION_TYPES:
        raise ValueError("recursion kind must be PP or CP")
    items = _items(gold)
    if len(preds) != len(items):
        raise AlignmentMismatch(f"{len(preds)} predictions for {len(items)} instances")
    correct = {d: 0 for d in DEPTHS}
    total = {d: 0 for d in DEPTHS}
    outside = 0
    for p, item in zip(preds, items):
        if item.label != RECURSION_TYPES[kind]:
            continue
        depth = label_depth(coarsen(unique_parse(grammar, source_of(item), cache), grammar), kind)
        if depth not in total:
            outside += 1
            continue
        total[depth] += 1
        correct[depth] += exact_match(p, gold_of(item), mode)
    return DepthReport(kind, {d: Score(correct[d], total[d]) for d in DEPTHS}, outside)


@dataclass(frozen=True)
class RunAggregate:
    n: int
    mean: Mapping[str, float]
    std: Mapping[str, float] = field(default_factory=dict)

    def render(self) -> str:
        width = max(len(k) for k in self.mean)
        lines = [f"{'cell':<{width}}  mean ± std  (N={self.n})"]
        lines += [f"{k:<{width}}  {self.mean[k]:.1f} ± {self.std[k]:.1f}" for k in self.mean]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"n": self.n, "mean": {k: round(v, 1) for k, v in self.mean.items()},
                "std": {k: round(v, 2) for k, v in self.std.items()}}


def aggregate_runs(reports: Sequence[EvalReport]) -> RunAggregate:
    """Per-cell mean and sample standard deviation (0 for a single run)."""
    if not reports:
        raise ValueError("no reports to aggregate")
    keys = list(reports[0].cells())
    for r in reports[1:]:
        if list(r.cells()) != keys:
            raise ValueError("reports have different cells")
    mean, std = {}, {}
    for k in keys:
        vals = [r.cells()[k] for r in reports]
        mean[k] = statistics.fmean(vals)
        std[k] = statistics.stdev(vals) if len(vals) > 1 else 0.0
        if math.isnan(std[k]):
            std[k] = 0.0
    return RunAggregate(len(reports), mean, std)


# -- prediction files -------------------------------------------------------------

def write_predictions(preds: Iterable[str], path: str | Path) -> Path:
    p = Path(path)
    preds = list(preds)
    if p.suffix == ".json":
        p.write_text(json.dumps([{"id": i, "prediction": x} for i, x in enumerate(preds)], indent=1) + "\n",
                     encoding="utf-8")
    else:
        if any("\n" in x for x in preds):
            raise ValueError("predictions must be single-line strings")
        p.write_text("".join(x + "\n" for x in preds), encoding="utf-8")
    return p


def read_predictions(path: str | Path) -> list[str]:
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    if p.suffix == ".json":
        rows = sorted(json.loads(text), key=lambda r: r["id"])
        return [r["prediction"] for r in rows]
    return text.split("\n")[:-1] if text.endswith("\n") else text.split("\n") if text else []
