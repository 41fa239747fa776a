"""Pipeline configuration: TOML file, flag overrides, validation."""
from __future__ import annotations

import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Mapping

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .grammar import FeatureGrammar, load_grammar_file, shipped_grammar, shipped_path
from .grammar.loader import SHIPPED


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class PipelineConfig:
    grammar: str = "cogs"
    lexicon: str | None = None
    seed: int = 0
    counts: tuple[int, ...] | None = None
    gen_cell: str | None = None
    input: str | None = None
    out: str = "out"
    mode: str = "strict"
    depth: str | None = None
    lf_style: str = "compact"
    layout: str = "cells"
    question_style: str = "natural"
    type_averaged: bool = False
    fractions: tuple[float, float, float] = (0.6, 0.1, 0.3)
    stratified: bool = False

    def validate(self) -> "PipelineConfig":
        if self.grammar not in SHIPPED and not Path(self.grammar).is_file():
            raise ConfigError(f"grammar {self.grammar!r} is neither a shipped name {SHIPPED} nor a file")
        for name in ("lexicon", "input"):
            value = getattr(self, name)
            if value is not None and not Path(value).exists():
                raise ConfigError(f"{name} path {value!r} does not exist")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ConfigError("seed must be an integer")
        if self.counts is not None and (len(self.counts) != 4 or any(c < 0 for c in self.counts)):
            raise ConfigError("counts must be four non-negative integers")
        if self.mode not in ("strict", "extractive"):
            raise ConfigError("mode must be strict or extractive")
        if self.depth is not None and self.depth.lower() not in ("pp", "cp"):
            raise ConfigError("depth must be pp or cp")
        return self

    def load_grammar(self) -> FeatureGrammar:
        if self.grammar in SHIPPED and self.lexicon is None:
            return shipped_grammar(self.grammar)
        if self.grammar in SHIPPED:
            return load_grammar_file(shipped_path(self.grammar), self.lexicon)
        return load_grammar_file(self.grammar, self.lexicon)

    def effective(self) -> dict[str, Any]:
        """JSON-friendly view recorded in manifests."""
        d = asdict(self)
        d["counts"] = list(self.counts) if self.counts is not None else None
        d["fractions"] = list(self.fractions)
        return d


def parse_counts(value: str | list | tuple) -> tuple[int, ...]:
    try:
        parts = value.split(",") if isinstance(value, str) else list(value)
        counts = tuple(int(p) for p in parts)
    except (TypeError, ValueError):
        raise ConfigError(f"counts must be four comma-separated integers, got {value!r}") from None
    if len(counts) != 4:
        raise ConfigError(f"counts must have four entries, got {len(counts)}")
    return counts


def parse_fractions(value: str | list | tuple) -> tuple[float, float, float]:
    try:
        parts = value.split(",") if isinstance(value, str) else list(value)
        fr = tuple(float(p) for p in parts)
    except (TypeError, ValueError):
        raise ConfigError(f"fractions must be three numbers, got {value!r}") from None
    if len(fr) != 3:
        raise ConfigError("fractions must have three entries")
    return fr  # type: ignore[return-value]


_FIELDS = {f.name for f in fields(PipelineConfig)}


def _coerce(key: str, value: Any) -> Any:
    if key == "counts":
        return parse_counts(value)
    if key == "fractions":
        return parse_fractions(value)
    if key == "seed":
        if not isinstance(value, int):
            try:
                return int(value)
            except (TypeError, ValueError):
                raise ConfigError(f"seed must be an integer, got {value!r}") from None
    return value


def read_config_file(path: str | Path, command: str | None = None) -> dict[str, Any]:
    """Top-level keys, overlaid by the ``[command]`` table when present."""
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file {str(p)!r} does not exist")
    try:
        data = tomllib.loads(p.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{p}: {exc}") from None
    flat = {k: v for k, v in data.items() if not isinstance(v, dict)}
    if command and isinstance(data.get(command), dict):
        flat.update(data[command])
    return flat


def resolve(file_values: Mapping[str, Any], overrides: Mapping[str, Any]) -> PipelineConfig:
    """Defaults, then config-file values, then explicitly given flags."""
    values: dict[str, Any] = {}
    for source in (file_values, overrides):
        for k, v in source.items():
            key = k.replace("-", "_")
            if key not in _FIELDS:
                raise ConfigError(f"unknown configuration key {k!r}")
            if v is not None:
                values[key] = _coerce(key, v)
    return PipelineConfig(**values).validate()
