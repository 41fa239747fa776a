"""Seeded top-down sampling from a feature grammar.

Rule choice is uniform over the rules that can still complete within the
remaining recursion budget.  Budgets are tracked per recursive coarse label
(``%recursive`` in the grammar file); a required depth for one label can be
requested, in which case rules are further restricted to those that can
still reach it.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .features import EMPTY, FeatureBundle
from .model import FeatureGrammar, LexEntry, Rule
from .trees import Derivation, capitalize_first

NEG = -1


class SamplingError(RuntimeError):
    """No derivation exists under the requested constraints."""


class _DeadEnd(Exception):
    pass


@dataclass(frozen=True)
class SamplerKey:
    grammar_id: int
    exclude_rules: frozenset[str]
    exclude_tokens: frozenset[str]
    include_heldout: bool
    max_budget: int


class Sampler:
    def __init__(
        self,
        grammar: FeatureGrammar,
        *,
        exclude_rules: Iterable[str] = (),
        exclude_tokens: Iterable[str] = (),
        include_heldout: bool = False,
        max_budget: int = 12,
    ):
        self.g = grammar
        excl_r = set(exclude_rules)
        excl_t = set(exclude_tokens)
        rules = [r for r in grammar.sampling_rules(include_heldout) if r.rule_id not in excl_r]
        self.rules: dict[str, list[Rule]] = {}
        for r in rules:
            self.rules.setdefault(r.lhs.name, []).append(r)
        self.entries: dict[str, list[LexEntry]] = {
            cat: [e for e in es if e.surface not in excl_t]
            for cat, es in grammar.lexicon.by_category.items()
        }
        self.labels = tuple(grammar.recursive)
        self.max_budget = max_budget
        self._options: dict = {}
        self._candidates: dict = {}
        cats = set(self.rules) | set(self.entries)
        for rs in self.rules.values():
            for r in rs:
                cats.update(s.name for s in r.rhs)
        self.cats = sorted(cats)
        self.own = {c: tuple(int(grammar.coarse(c) == L) for L in self.labels) for c in self.cats}
        self._tables()

    # -- feasibility tables -------------------------------------------------
    def _budgets(self):
        ranges = [range(self.max_budget + 1)] * len(self.labels)
        return sorted(itertools.product(*ranges), key=sum)

    def _tables(self) -> None:
        """finish[(cat, b)]: completable; reach[L][(cat, b)]: max depth of label L (NEG if not)."""
        self.finish: dict[tuple[str, tuple[int, ...]], bool] = {}
        self.reach = [dict() for _ in self.labels]
        lexical = {c for c, es in self.entries.items() if es and c not in self.rules}
        for b in self._budgets():
            for c in self.cats:
                self.finish[(c, b)] = c in lexical
                for t in self.reach:
                    t[(c, b)] = 0 if c in lexical else NEG
            changed = True
            while changed:
                changed = False
                for c, rs in self.rules.items():
                    nb = tuple(x - o for x, o in zip(b, self.own[c]))
                    if any(x < 0 for x in nb):
                        continue
                    for r in rs:
                        kids = [s.name for s in r.rhs]
                        if not all(self.finish.get((k, nb), False) for k in kids):
                            continue
                        if not self.finish[(c, b)]:
                            self.finish[(c, b)] = True
                            changed = True
                        for li, t in enumerate(self.reach):
                            best = self.own[c][li] + max(t[(k, nb)] for k in kids)
                            if best > t[(c, b)]:
                                t[(c, b)] = best
                                changed = True

    # -- sampling ---------------------------------------------------------------
    def budget(self, caps: Mapping[str, int], default: int) -> tuple[int, ...]:
        b = tuple(min(caps.get(L, default), self.max_budget) for L in self.labels)
        return b

    def sample(
        self,
        rng: random.Random,
        *,
        max_depth: int,
        caps: Mapping[str, int] | None = None,
        require: tuple[str, int] | None = None,
        start: str | None = None,
        start_features: Mapping[str, str] | None = None,
        attempts: int = 200,
        capitalize: bool = True,
    ) -> Derivation:
        if max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        caps = dict(caps or {})
        need: tuple[int, ...] = tuple(0 for _ in self.labels)
        if require is not None:
            label, depth = require
            if label not in self.labels:
                raise ValueError(f"{label} is not a recursive label of this grammar")
            caps[label] = depth
            need = tuple(depth if L == label else 0 for L in self.labels)
        b = self.budget(caps, max_depth)
        root = start or self.g.start
        if not self.finish.get((root, b), False) or not self._can_reach(root, b, need):
            raise SamplingError(f"no derivation of {root} within depth budget {dict(zip(self.labels, b))}")
        req = FeatureBundle.of(start_features or {})
        for _ in range(attempts):
            try:
                tree = self._expand(rng, root, req, b, need)
            except _DeadEnd:
                continue
            return capitalize_first(tree) if capitalize else tree
        raise SamplingError(f"feature constraints could not be met after {attempts} attempts")

    def _can_reach(self, cat: str, b, need) -> bool:
        return all(n == 0 or self.reach[li][(cat, b)] >= n for li, n in enumerate(need))

    def _expand(self, rng: random.Random, cat: str, req: FeatureBundle, b, need) -> Derivation:
        if cat not in self.rules:
            key = (cat, req)
            options = self._options.get(key)
            if options is None:
                options = self._options[key] = [e for e in self.entries.get(cat, ())
                                                if all(e.features.get(f, v) == v for f, v in req.items())]
            if not options:
                raise _DeadEnd
            e = rng.choice(options)
            return Derivation(e.category, e.features, None, (), e.surface, e.lemma)
        own = self.own[cat]
        nb = tuple(x - o for x, o in zip(b, own))
        nneed = tuple(max(0, n - o) for n, o in zip(need, own))
        key = (cat, req, nb, nneed)
        candidates = self._candidates.get(key)
        if candidates is None:
            candidates = self._candidates[key] = self._rule_candidates(cat, req, nb, nneed)
        if not candidates:
            raise _DeadEnd
        r = rng.choice(candidates)
        env = self._bind(rng, r, req)
        kid_need = [tuple(0 for _ in self.labels) for _ in r.rhs]
        for li, n in enumerate(nneed):
            if n:
                able = [i for i, s in enumerate(r.rhs) if self.reach[li][(s.name, nb)] >= n]
                pick = rng.choice(able)
                kid_need[pick] = tuple(n if j == li else x for j, x in enumerate(kid_need[pick]))
        # the carrier child for one label must still satisfy the others
        children = []
        for i, s in enumerate(r.rhs):
            creq = self._child_req(rng, s, env)
            children.append(self._expand(rng, s.name, creq, nb, kid_need[i]))
        feats = []
        for f, spec in r.lhs.specs:
            if spec.kind == "const":
                feats.append((f, spec.value))
            elif spec.value in env:
                if spec.kind == "var":
                    feats.append((f, env[spec.value]))
                else:
                    rest = [v for v in self.g.domains[f] if v != env[spec.value]]
                    if len(rest) == 1:
                        feats.append((f, rest[0]))
        return Derivation(cat, FeatureBundle(tuple(sorted(feats))), r.rule_id, tuple(children))

    def _rule_candidates(self, cat: str, req: FeatureBundle, nb, nneed) -> list[Rule]:
        out = []
        for r in self.rules[cat]:
            kids = [s.name for s in r.rhs]
            if not all(self.finish.get((k, nb), False) for k in kids):
                continue
            if any(n and max(self.reach[li][(k, nb)] for k in kids) < n for li, n in enumerate(nneed)):
                continue
            if self._lhs_compatible(r, req):
                out.append(r)
        return out

    @staticmethod
    def _lhs_compatible(r: Rule, req: FeatureBundle) -> bool:
        for f, spec in r.lhs.specs:
            if spec.kind == "const" and f in req and req[f] != spec.value:
                return False
        return True

    def _bind(self, rng: random.Random, r: Rule, req: FeatureBundle) -> dict[str, str]:
        env: dict[str, str] = {}
        for f, spec in r.lhs.specs:
            if f not in req or spec.kind == "const":
                continue
            if spec.kind == "var":
                env[spec.value] = req[f]
        for f, spec in r.lhs.specs:
            if f in req and spec.kind == "neg" and spec.value not in env:
                env[spec.value] = rng.choice([v for v in self.g.domains[f] if v != req[f]])
        var_feat: dict[str, str] = {}
        for slot in r.slots:
            for f, spec in slot:
                if spec.kind != "const":
                    var_feat.setdefault(spec.value, f)
        for name in sorted(var_feat):
            if name not in env:
                env[name] = rng.choice(self.g.domains[var_feat[name]])
        return env

    def _child_req(self, rng: random.Random, s, env: Mapping[str, str]) -> FeatureBundle:
        if not s.specs:
            return EMPTY
        vals = []
        for f, spec in s.specs:
            if spec.kind == "const":
                vals.append((f, spec.value))
            elif spec.kind == "var":
                vals.append((f, env[spec.value]))
            else:
                vals.append((f, rng.choice([v for v in self.g.domains[f] if v != env[spec.value]])))
        return FeatureBundle(tuple(sorted(vals)))


_SAMPLERS: dict[SamplerKey, tuple[FeatureGrammar, Sampler]] = {}


def get_sampler(grammar: FeatureGrammar, *, exclude_rules: Iterable[str] = (),
                exclude_tokens: Iterable[str] = (), include_heldout: bool = False,
                max_budget: int = 12) -> Sampler:
    key = SamplerKey(id(grammar), frozenset(exclude_rules), frozenset(exclude_tokens),
                     include_heldout, max_budget)
    hit = _SAMPLERS.get(key)
    if hit is None or hit[0] is not grammar:
        if len(_SAMPLERS) > 64:
            _SAMPLERS.clear()
        hit = (grammar, Sampler(grammar, exclude_rules=key.exclude_rules, exclude_tokens=key.exclude_tokens,
                                include_heldout=include_heldout, max_budget=max_budget))
        _SAMPLERS[key] = hit
    return hit[1]


def sample_derivation(
    grammar: FeatureGrammar,
    max_depth: int,
    seed: int,
    *,
    caps: Mapping[str, int] | None = None,
    require: tuple[str, int] | None = None,
    exclude_rules: Iterable[str] = (),
    exclude_tokens: Iterable[str] = (),
    include_heldout: bool = False,
    start: str | None = None,
    start_features: Mapping[str, str] | None = None,
) -> Derivation:
    """Sample one derivation; a pure function of its arguments."""
    budget = max([max_depth, *(caps or {}).values(), require[1] if require else 0])
    sampler = get_sampler(grammar, exclude_rules=exclude_rules, exclude_tokens=exclude_tokens,
                          include_heldout=include_heldout, max_budget=max(12, budget))
    rng = random.Random(seed)
    return sampler.sample(rng, max_depth=max_depth, caps=caps, require=require, start=start,
                          start_features=start_features)
