"""Independent check that a derivation satisfies its grammar.

This deliberately does not reuse the parser's unification: each internal node
is checked by brute force over every assignment of the rule's variables, and
the set of feature bundles a subtree can present to its parent is carried
upward.  A tree is valid iff the root's set is non-empty.
"""
from __future__ import annotations

import itertools

from .features import FeatureBundle, assignments, resolve, satisfies, variables
from .model import FeatureGrammar
from .trees import Derivation


def _options(node: Derivation, g: FeatureGrammar, problems: list[str]) -> set[FeatureBundle]:
    if node.is_preterminal:
        entries = [e for e in g.lexicon.by_category.get(node.label, ())
                   if e.surface.lower() == (node.word or "").lower()]
        if not entries:
            problems.append(f"{node.word!r} is not a {node.label}")
            return set()
        return {e.features for e in entries}
    rule = g.rule_by_id.get(node.rule_id or "")
    if rule is None:
        problems.append(f"unknown rule {node.rule_id!r}")
        return set()
    if rule.lhs.name != node.label or len(rule.rhs) != len(node.children) or any(
        s.name != c.label for s, c in zip(rule.rhs, node.children)
    ):
        problems.append(f"node {node.label} does not match rule {rule}")
        return set()
    kid_sets = [_options(c, g, problems) for c in node.children]
    if any(not s for s in kid_sets):
        return set()
    var_feats = variables(rule.slots)
    out: set[FeatureBundle] = set()
    for env in assignments(var_feats, g.domains):
        for combo in itertools.product(*kid_sets):
            if all(
                satisfies(bundle.get(feat), spec, env)
                for sym, bundle in zip(rule.rhs, combo)
                for feat, spec in sym.specs
            ):
                vals = []
                for feat, spec in rule.lhs.specs:
                    v = resolve(spec, env, g.domains[feat])
                    if v is not None:
                        vals.append((feat, v))
                out.add(FeatureBundle(tuple(sorted(vals))))
                break
    if not out:
        problems.append(f"feature constraints of rule {rule.rule_id} violated at {node.label}")
    return out


def check_derivation(tree: Derivation, grammar: FeatureGrammar) -> list[str]:
    """Return a list of problems; empty means the tree is a valid derivation."""
    problems: list[str] = []
    _options(tree, grammar, problems)
    return problems


def is_valid(tree: Derivation, grammar: FeatureGrammar) -> bool:
    return not check_derivation(tree, grammar)
