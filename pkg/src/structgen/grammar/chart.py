"""Bottom-up chart parser for feature grammars with n-ary rules.

Items are ``(category, features, start, end)``.  Spans are filled in order
of increasing length; every item keeps all of its back-pointers so the full
set of derivations can be unpacked afterwards.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Sequence

from .features import EMPTY, FeatureBundle
from .model import FeatureGrammar, LexEntry, Rule
from .trees import Derivation

Key = tuple[str, FeatureBundle, int, int]


class ParseError(ValueError):
    pass


class UnknownTokenError(ParseError):
    def __init__(self, token: str, position: int):
        super().__init__(f"unknown token {token!r} at position {position}")
        self.token = token
        self.position = position


def combine(grammar: FeatureGrammar, rule: Rule, kids: Sequence[FeatureBundle]) -> FeatureBundle | None:
    """Unify child feature bundles against ``rule``; return the parent bundle or None."""
    env: dict[str, str] = {}
    negs: list[tuple[str, str, str]] = []
    for sym, bundle in zip(rule.rhs, kids):
        for feat, spec in sym.specs:
            v = bundle.get(feat)
            if v is None:
                continue
            if spec.kind == "const":
                if v != spec.value:
                    return None
            elif spec.kind == "var":
                bound = env.get(spec.value)
                if bound is not None and bound != v:
                    return None
                env[spec.value] = v
            else:
                negs.append((spec.value, feat, v))
    for name, feat, v in negs:
        if name not in env:
            rest = [x for x in grammar.domains[feat] if x != v]
            if len(rest) == 1:
                env[name] = rest[0]
    for name, _feat, v in negs:
        if env.get(name) == v:
            return None
    out = []
    for feat, spec in rule.lhs.specs:
        if spec.kind == "const":
            out.append((feat, spec.value))
        elif spec.value in env:
            bound = env[spec.value]
            if spec.kind == "var":
                out.append((feat, bound))
            else:
                rest = [x for x in grammar.domains[feat] if x != bound]
                if len(rest) == 1:
                    out.append((feat, rest[0]))
    return FeatureBundle(tuple(sorted(out)))


class _Index:
    """Per-grammar rule indexes, cached on first use."""

    def __init__(self, grammar: FeatureGrammar):
        self.by_first: dict[str, list[Rule]] = defaultdict(list)
        self.unary: dict[str, list[Rule]] = defaultdict(list)
        for r in grammar.rules:
            if len(r.rhs) == 1:
                self.unary[r.rhs[0].name].append(r)
            else:
                self.by_first[r.rhs[0].name].append(r)


_INDEXES: dict[int, tuple[FeatureGrammar, _Index]] = {}


def _index(grammar: FeatureGrammar) -> _Index:
    hit = _INDEXES.get(id(grammar))
    if hit is None or hit[0] is not grammar:
        hit = (grammar, _Index(grammar))
        _INDEXES[id(grammar)] = hit
    return hit[1]


def words_of(tokens: Sequence[str] | str) -> list[str]:
    toks = tokens.split() if isinstance(tokens, str) else list(tokens)
    if toks and toks[-1] == ".":
        toks = toks[:-1]
    return toks


def parse(
    grammar: FeatureGrammar,
    tokens: Sequence[str] | str,
    *,
    use_features: bool = True,
    limit: int | None = None,
) -> list[Derivation]:
    """All derivations of ``tokens`` rooted in the start symbol.

    A trailing "." is ignored.  A single word whose category is declared
    ``%primitive`` parses as a bare preterminal.  With ``use_features=False``
    internal nodes ignore feature constraints (used to enumerate structural
    alternatives); lexical features are still attached to the leaves.
    """
    words = words_of(tokens)
    if not words:
        raise ParseError("empty token sequence")
    n = len(words)
    lex = grammar.lexicon
    idx = _index(grammar)

    cells: dict[tuple[int, int], dict[tuple[str, FeatureBundle], list]] = defaultdict(dict)
    starts: list[dict[str, list[tuple[int, FeatureBundle]]]] = [defaultdict(list) for _ in range(n)]
    by_cat: dict[tuple[int, int], dict[str, list[FeatureBundle]]] = defaultdict(lambda: defaultdict(list))

    def feats_for(rule: Rule, kids: Sequence[FeatureBundle]) -> FeatureBundle | None:
        if not use_features:
            return EMPTY
        return combine(grammar, rule, kids)

    def add(i: int, j: int, cat: str, feats: FeatureBundle, bp) -> bool:
        cell = cells[(i, j)]
        key = (cat, feats)
        if key in cell:
            cell[key].append(bp)
            return False
        cell[key] = [bp]
        starts[i][cat].append((j, feats))
        by_cat[(i, j)][cat].append(feats)
        return True

    def closure(i: int, j: int, fresh: list[tuple[str, FeatureBundle]]) -> None:
        agenda = list(fresh)
        while agenda:
            cat, feats = agenda.pop()
            for r in idx.unary.get(cat, ()):
                pf = feats_for(r, (feats,))
                if pf is None:
                    continue
                if add(i, j, r.lhs.name, pf, (r, ((cat, feats, i, j),))):
                    agenda.append((r.lhs.name, pf))

    for i, w in enumerate(words):
        entries = lex.lookup(w, initial=(i == 0))
        if not entries:
            raise UnknownTokenError(w, i)
        fresh = []
        for e in entries:
            if add(i, i + 1, e.category, e.features, ("lex", e)):
                fresh.append((e.category, e.features))
        closure(i, i + 1, fresh)

    for length in range(2, n + 1):
        for i in range(0, n - length + 1):
            j = i + length
            fresh: list[tuple[str, FeatureBundle]] = []
            for cat in list(starts[i].keys()):
                rules = idx.by_first.get(cat)
                if not rules:
                    continue
                for r in rules:
                    arity = len(r.rhs)

                    def extend(k: int, pos: int, acc: list[Key]) -> None:
                        sym = r.rhs[k]
                        if k == arity - 1:
                            for f in by_cat[(pos, j)].get(sym.name, ()):
                                kids = acc + [(sym.name, f, pos, j)]
                                pf = feats_for(r, [c[1] for c in kids])
                                if pf is not None and add(i, j, r.lhs.name, pf, (r, tuple(kids))):
                                    fresh.append((r.lhs.name, pf))
                            return
                        need = arity - k - 1
                        for end, f in list(starts[pos].get(sym.name, ())):
                            if end + need <= j:
                                extend(k + 1, end, acc + [(sym.name, f, pos, end)])

                    extend(0, i, [])
            closure(i, j, fresh)

    roots: list[Key] = [(c, f, 0, n) for (c, f) in cells[(0, n)] if c == grammar.start]
    out: list[Derivation] = []
    memo: dict[Key, list[Derivation]] = {}

    def unpack(key: Key, stack: frozenset) -> list[Derivation]:
        if key in memo:
            return memo[key]
        if key in stack:
            return []
        cat, feats, i, j = key
        res: list[Derivation] = []
        for bp in cells[(i, j)][(cat, feats)]:
            if bp[0] == "lex":
                e: LexEntry = bp[1]
                res.append(Derivation(e.category, e.features, None, (), words[i], e.lemma))
                continue
            rule, kids = bp
            options = [unpack(k, stack | {key}) for k in kids]
            for combo in itertools.product(*options):
                res.append(Derivation(cat, feats, rule.rule_id, tuple(combo)))
                if limit is not None and len(res) >= limit:
                    break
        memo[key] = res
        return res

    for root in roots:
        out.extend(unpack(root, frozenset()))
    if n == 1 and grammar.primitives:
        for e in lex.lookup(words[0], initial=True):
            if e.category in grammar.primitives:
                out.append(Derivation(e.category, e.features, None, (), words[0], e.lemma))
    if limit is not None:
        out = out[:limit]
    return out


def parse_unique(grammar: FeatureGrammar, tokens: Sequence[str] | str) -> Derivation:
    trees = parse(grammar, tokens, limit=2)
    text = tokens if isinstance(tokens, str) else " ".join(tokens)
    if not trees:
        raise ParseError(f"no parse for {text!r}")
    if len(trees) > 1:
        raise ParseError(f"ambiguous parse for {text!r}")
    return trees[0]
