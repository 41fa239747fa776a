"""QA instances and their TSV form."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from ..forge.bundle import SPLITS, DatasetBundle, GenType, gen_type, read_tsv

PRIM_QUESTION = "<prim>"
DETERMINERS = ("the", "a")


def normalize_determiner(text: str) -> str:
    """Lower-case a sentence-initial determiner ("The boy" -> "the boy")."""
    head, sep, rest = text.partition(" ")
    if head.lower() in DETERMINERS:
        return head.lower() + sep + rest
    return text


@dataclass(frozen=True)
class QAInstance:
    context: str
    question: str
    answer: str
    answer_span: tuple[int, int]
    label: str = ""
    split: str = "train"
    # disambiguation metadata (not serialized)
    cell: str | None = None
    site: str | None = None

    def __post_init__(self) -> None:
        start, end = self.answer_span
        toks = self.context.split()
        if not 0 <= start <= end < len(toks):
            raise ValueError(f"answer span {self.answer_span} outside context of {len(toks)} tokens")
        if normalize_determiner(" ".join(toks[start:end + 1])) != normalize_determiner(self.answer):
            raise ValueError(f"answer {self.answer!r} does not match context span {self.answer_span}")

    @property
    def tokens(self) -> list[str]:
        return self.context.split()

    @property
    def gen_type(self) -> GenType | None:
        return gen_type(self.label)


def span_text(tokens: Sequence[str], span: tuple[int, int]) -> str:
    return normalize_determiner(" ".join(tokens[span[0]:span[1] + 1]))


def write_qa_tsv(bundle: DatasetBundle[QAInstance], directory: str | Path) -> dict[str, Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    out = {}
    for split, items in bundle.items():
        lines = []
        for q in items:
            cells = (q.context, q.question, q.answer, q.label, str(q.answer_span[0]), str(q.answer_span[1]))
            if any("\t" in c or "\n" in c for c in cells):
                raise ValueError(f"tab or newline inside a QA field: {cells!r}")
            lines.append("\t".join(cells) + "\n")
        path = d / f"{split}.tsv"
        path.write_text("".join(lines), encoding="utf-8")
        out[split] = path
    return out


def load_qa_tsv(paths: Mapping[str, str | Path], name: str = "qa") -> DatasetBundle[QAInstance]:
    splits: dict[str, list[QAInstance]] = {}
    for split, path in paths.items():
        if split not in SPLITS:
            raise ValueError(f"unknown split {split!r}")
        rows = read_tsv(path, 6, split)
        splits[split] = [QAInstance(c, q, a, (int(s), int(e)), label, split) for c, q, a, label, s, e in rows]
    return DatasetBundle(name, splits)


def questions_by_context(items: Iterable[QAInstance]) -> dict[str, list[QAInstance]]:
    out: dict[str, list[QAInstance]] = {}
    for q in items:
        out.setdefault(q.context, []).append(q)
    return out
