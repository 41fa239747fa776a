"""Generalization-type taxonomy, instances, four-way dataset bundles, TSV IO."""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Generic, Iterable, Iterator, Mapping, TypeVar


class GenClass(str, enum.Enum):
    LEX = "Lex"
    STRUCT = "Struct"


@dataclass(frozen=True)
class GenType:
    label: str
    cls: GenClass

    @property
    def is_structural(self) -> bool:
        return self.cls is GenClass.STRUCT


COGS_STRUCT = ("obj_pp_to_subj_pp", "cp_recursion", "pp_recursion")
DISAMB = ("cc_cp", "rc_pp")
COGS_LEX = (
    "subj_to_obj_common",
    "subj_to_obj_proper",
    "obj_to_subj_common",
    "obj_to_subj_proper",
    "prim_to_subj_common",
    "prim_to_subj_proper",
    "prim_to_obj_common",
    "prim_to_obj_proper",
    "prim_to_inf_arg",
    "obj_omitted_transitive_to_transitive",
    "unacc_to_transitive",
    "double_object_dative_to_pp_dative",
    "pp_dative_to_double_object_dative",
    "active_to_passive",
    "passive_to_active",
    "only_seen_as_transitive_subj_as_unacc_subj",
    "only_seen_as_unacc_subj_as_unerg_subj",
    "only_seen_as_unacc_subj_as_obj_omitted_transitive_subj",
)
COGS_TYPES = COGS_LEX + COGS_STRUCT

GEN_TYPES: dict[str, GenType] = {
    **{t: GenType(t, GenClass.LEX) for t in COGS_LEX},
    **{t: GenType(t, GenClass.STRUCT) for t in COGS_STRUCT + DISAMB},
}

# labels used by the released files for in-distribution lines
IN_DISTRIBUTION = "in_distribution"
SPLITS = ("train", "dev", "test", "gen")


def gen_type(label: str | None) -> GenType | None:
    """The GenType for a raw label, or None for in-distribution labels."""
    if not label:
        return None
    return GEN_TYPES.get(label)


@dataclass(frozen=True)
class Instance:
    """One (source, target) pair; ``label`` is the raw third TSV column."""

    source: str
    target: str
    label: str = ""
    split: str = "train"

    @property
    def tokens(self) -> list[str]:
        return self.source.split()

    @property
    def gen_type(self) -> GenType | None:
        return gen_type(self.label)


T = TypeVar("T")


@dataclass(frozen=True)
class DatasetBundle(Generic[T]):
    name: str
    splits: Mapping[str, tuple[T, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        unknown = set(self.splits) - set(SPLITS)
        if unknown:
            raise ValueError(f"unknown split names {sorted(unknown)}")
        frozen = {s: tuple(self.splits.get(s, ())) for s in SPLITS}
        untyped = [x for x in frozen["gen"] if getattr(x, "label", None) not in GEN_TYPES]
        if untyped:
            raise ValueError(f"gen item without a generalization type: {untyped[0]!r}")
        object.__setattr__(self, "splits", frozen)

    def __getitem__(self, split: str) -> tuple[T, ...]:
        return self.splits[split]

    @property
    def sizes(self) -> dict[str, int]:
        return {s: len(v) for s, v in self.splits.items()}

    def items(self) -> Iterator[tuple[str, tuple[T, ...]]]:
        return iter(self.splits.items())

    def with_splits(self, name: str | None = None, **splits: Iterable[T]) -> "DatasetBundle[T]":
        merged = dict(self.splits)
        merged.update({k: tuple(v) for k, v in splits.items()})
        return DatasetBundle(name or self.name, merged)


class TSVFormatError(ValueError):
    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


def read_tsv(path: str | Path, columns: int, split: str) -> list[list[str]]:
    """Rows of a tab-separated file with exactly ``columns`` fields."""
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    rows = []
    for no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        cells = line.split("\t")
        if len(cells) != columns:
            raise TSVFormatError(str(p), no, f"expected {columns} tab-separated columns, found {len(cells)}")
        rows.append(cells)
    if not rows:
        warnings.warn(f"{p}: no instances in {split} split", stacklevel=2)
    return rows


def load_cogs_tsv(paths: Mapping[str, str | Path], name: str = "cogs") -> DatasetBundle[Instance]:
    """Load ``sentence<TAB>target<TAB>label`` files, one per split."""
    splits: dict[str, list[Instance]] = {}
    for split, path in paths.items():
        if split not in SPLITS:
            raise ValueError(f"unknown split {split!r}")
        rows = read_tsv(path, 3, split)
        out = []
        for no, (src, tgt, label) in enumerate(rows, start=1):
            if split == "gen" and gen_type(label) is None:
                raise TSVFormatError(str(path), no, f"generalization line has unknown type {label!r}")
            out.append(Instance(src, tgt, label, split))
        splits[split] = out
    return DatasetBundle(name, splits)


def cogs_split_paths(directory: str | Path) -> dict[str, Path]:
    """The conventional file names of a COGS-style release directory."""
    d = Path(directory)
    return {s: d / f"{s}.tsv" for s in SPLITS}


def _clean(cell: str) -> str:
    if "\t" in cell or "\n" in cell:
        raise ValueError(f"cell contains a tab or newline: {cell!r}")
    return cell


def write_cogs_tsv(bundle: DatasetBundle[Instance], directory: str | Path) -> dict[str, Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = {}
    for split, items in bundle.items():
        path = d / f"{split}.tsv"
        lines = ["\t".join(_clean(c) for c in (i.source, i.target, i.label)) for i in items]
        path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
        written[split] = path
    return written


def relabel(items: Iterable[Instance], split: str) -> list[Instance]:
    return [replace(i, split=split) for i in items]
