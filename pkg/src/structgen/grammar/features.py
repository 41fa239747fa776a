"""Feature bundles and the constraint language used inside grammar rules.

A rule slot such as ``V[tense=?t]`` carries a :class:`FeatureSpec` per
feature.  Three kinds exist: a constant (``sg``), a shared variable (``?t``)
and a negated variable (``!t``, "any value other than the one bound to t").
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True)
class FeatureBundle(Mapping[str, str]):
    """Immutable, hashable feature assignment.  Missing keys are unconstrained."""

    items_: tuple[tuple[str, str], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[str, str] | Iterable[tuple[str, str]] = ()) -> "FeatureBundle":
        pairs = mapping.items() if isinstance(mapping, Mapping) else mapping
        return cls(tuple(sorted(pairs)))

    def __getitem__(self, key: str) -> str:
        for k, v in self.items_:
            if k == key:
                return v
        raise KeyError(key)

    def __iter__(self) -> Iterator[str]:
        return (k for k, _ in self.items_)

    def __len__(self) -> int:
        return len(self.items_)

    def __str__(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.items_) or "-"

    @classmethod
    def parse(cls, text: str) -> "FeatureBundle":
        text = text.strip()
        if text in ("", "-"):
            return cls()
        pairs = []
        for part in text.split(","):
            key, sep, val = part.partition("=")
            if not sep or not key.strip() or not val.strip():
                raise ValueError(f"malformed feature {part!r}")
            pairs.append((key.strip(), val.strip()))
        return cls.of(pairs)


EMPTY = FeatureBundle()


@dataclass(frozen=True)
class FeatureSpec:
    kind: str  # "const" | "var" | "neg"
    value: str

    def __str__(self) -> str:
        return {"const": "", "var": "?", "neg": "!"}[self.kind] + self.value

    @classmethod
    def parse(cls, text: str) -> "FeatureSpec":
        if text.startswith("?"):
            return cls("var", text[1:])
        if text.startswith("!"):
            return cls("neg", text[1:])
        return cls("const", text)


Specs = tuple[tuple[str, FeatureSpec], ...]


def variables(slots: Iterable[Specs]) -> dict[str, str]:
    """Map each variable name to the feature it constrains."""
    out: dict[str, str] = {}
    for specs in slots:
        for feat, spec in specs:
            if spec.kind != "const":
                out.setdefault(spec.value, feat)
    return out


def satisfies(value: str | None, spec: FeatureSpec, env: Mapping[str, str]) -> bool:
    """Does a concrete (possibly absent) value meet ``spec`` under ``env``?"""
    if value is None:
        return True
    if spec.kind == "const":
        return value == spec.value
    if spec.kind == "var":
        return env[spec.value] == value
    return env[spec.value] != value


def resolve(spec: FeatureSpec, env: Mapping[str, str], domain: tuple[str, ...]) -> str | None:
    """Concrete value implied by ``spec``; negation resolves only over binary domains."""
    if spec.kind == "const":
        return spec.value
    bound = env.get(spec.value)
    if bound is None:
        return None
    if spec.kind == "var":
        return bound
    rest = [v for v in domain if v != bound]
    return rest[0] if len(rest) == 1 else None


def assignments(var_feats: Mapping[str, str], domains: Mapping[str, tuple[str, ...]]) -> Iterator[dict[str, str]]:
    names = sorted(var_feats)
    for values in itertools.product(*(domains[var_feats[n]] for n in names)):
        yield dict(zip(names, values))
