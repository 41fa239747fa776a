"""Grammar data model: symbols, rules, lexicon and the grammar container."""
from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .features import FeatureBundle, FeatureSpec, Specs


class GrammarError(ValueError):
    """Raised for malformed or inconsistent grammar and lexicon files."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 source: str | None = None):
        where = ""
        if line is not None:
            where = f"{source or '<grammar>'}:{line}"
            if column is not None:
                where += f":{column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Symbol:
    """A category occurrence inside a rule, with its feature constraints."""

    name: str
    specs: Specs = ()

    def __str__(self) -> str:
        if not self.specs:
            return self.name
        inner = ",".join(f"{f}={s}" for f, s in self.specs)
        return f"{self.name}[{inner}]"


@dataclass(frozen=True)
class Rule:
    rule_id: str
    lhs: Symbol
    rhs: tuple[Symbol, ...]
    sem: str | None = None
    line: int = 0

    def __str__(self) -> str:
        body = " ".join(map(str, self.rhs))
        tag = f" : {self.sem}" if self.sem else ""
        return f"@{self.rule_id} {self.lhs} -> {body}{tag}"

    @property
    def slots(self) -> tuple[Specs, ...]:
        return (self.lhs.specs,) + tuple(s.specs for s in self.rhs)


@dataclass(frozen=True)
class LexEntry:
    surface: str
    category: str
    features: FeatureBundle
    lemma: str


@dataclass(eq=False)
class Lexicon:
    entries: tuple[LexEntry, ...]

    @cached_property
    def by_surface(self) -> dict[str, tuple[LexEntry, ...]]:
        out: dict[str, list[LexEntry]] = {}
        for e in self.entries:
            out.setdefault(e.surface, []).append(e)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def by_category(self) -> dict[str, tuple[LexEntry, ...]]:
        out: dict[str, list[LexEntry]] = {}
        for e in self.entries:
            out.setdefault(e.category, []).append(e)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def by_lemma(self) -> dict[str, tuple[LexEntry, ...]]:
        out: dict[str, list[LexEntry]] = {}
        for e in self.entries:
            out.setdefault(e.lemma, []).append(e)
        return {k: tuple(v) for k, v in out.items()}

    def lookup(self, token: str, initial: bool = False) -> tuple[LexEntry, ...]:
        """Entries for ``token``; a sentence-initial capital may also match lowercase."""
        found = self.by_surface.get(token, ())
        if initial and token[:1].isupper():
            low = token[0].lower() + token[1:]
            if low != token:
                found = found + self.by_surface.get(low, ())
        return found

    def __contains__(self, token: str) -> bool:
        return token in self.by_surface

    @property
    def categories(self) -> frozenset[str]:
        return frozenset(self.by_category)


@dataclass(frozen=True)
class SemOp:
    """One step of a composition recipe, e.g. ``role=theme:1``."""

    op: str
    arg: str = ""


@dataclass(eq=False)
class FeatureGrammar:
    start: str
    rules: tuple[Rule, ...]
    lexicon: Lexicon
    domains: dict[str, tuple[str, ...]] = field(default_factory=dict)
    coarse_table: tuple[tuple[str, str], ...] = ()
    recursive: tuple[str, ...] = ()
    primitives: tuple[str, ...] = ()
    heldout: frozenset[str] = frozenset()
    recipes: dict[str, tuple[SemOp, ...]] = field(default_factory=dict)
    lexsem: tuple[tuple[str, str], ...] = ()
    animate: tuple[str, ...] = ()
    name: str = "grammar"
    path: Path | None = None

    @cached_property
    def rule_by_id(self) -> dict[str, Rule]:
        return {r.rule_id: r for r in self.rules}

    @cached_property
    def rules_by_lhs(self) -> dict[str, tuple[Rule, ...]]:
        out: dict[str, list[Rule]] = {}
        for r in self.rules:
            out.setdefault(r.lhs.name, []).append(r)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def nonterminals(self) -> frozenset[str]:
        return frozenset(self.rules_by_lhs)

    @cached_property
    def _coarse_cache(self) -> dict[str, str]:
        return {}

    def coarse(self, label: str) -> str:
        """Coarse label of a fine category; exact entries win over globs."""
        cache = self._coarse_cache
        if label not in cache:
            result = label
            exact = dict(self.coarse_table)
            if label in exact:
                result = exact[label]
            else:
                for pattern, target in self.coarse_table:
                    if fnmatch.fnmatchcase(label, pattern):
                        result = target
                        break
            cache[label] = result
        return cache[label]

    @cached_property
    def _lexsem_cache(self) -> dict[str, str | None]:
        return {}

    def lexical_kind(self, category: str) -> str | None:
        cache = self._lexsem_cache
        if category not in cache:
            cache[category] = next((kind for pattern, kind in self.lexsem
                                    if fnmatch.fnmatchcase(category, pattern)), None)
        return cache[category]

    def is_animate(self, category: str) -> bool:
        return any(fnmatch.fnmatchcase(category, p) for p in self.animate)

    def sampling_rules(self, include_heldout: bool = False) -> tuple[Rule, ...]:
        if include_heldout:
            return self.rules
        return tuple(r for r in self.rules if r.rule_id not in self.heldout)


def spec_of(symbol: Symbol, feature: str) -> FeatureSpec | None:
    for f, s in symbol.specs:
        if f == feature:
            return s
    return None
