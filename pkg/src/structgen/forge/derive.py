"""Syntax, POS, role-graph and tree-input variants of a COGS-style bundle.

Every derivation keeps split membership, order and labels; only the source
or target column changes.  Sentences that do not parse uniquely abort the
whole derivation.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import replace
from typing import Callable, MutableMapping

from ..compose import CompositionError, compose_lf
from ..grammar import Derivation, FeatureGrammar, ParseError, coarsen, linearize, parse, pos_sequence
from ..logical_form import LFSyntaxError, LogicalForm, SRLError, parse_lf, srl_graph, unresolved_constants
from .bundle import DatasetBundle, Instance

ParseCache = MutableMapping[str, Derivation]


class DerivationError(ValueError):
    def __init__(self, split: str, index: int, sentence: str, reason: str):
        super().__init__(f"{split}[{index}] {sentence!r}: {reason}")
        self.split = split
        self.index = index
        self.sentence = sentence
        self.reason = reason


def unique_parse(grammar: FeatureGrammar, sentence: str, cache: ParseCache | None = None) -> Derivation:
    if cache is not None and sentence in cache:
        return cache[sentence]
    trees = parse(grammar, sentence, limit=2)
    if not trees:
        raise ParseError("no parse")
    if len(trees) > 1:
        raise ParseError("ambiguous parse")
    if cache is not None:
        cache[sentence] = trees[0]
    return trees[0]


def _map(bundle: DatasetBundle[Instance], fn: Callable[[Instance], Instance], suffix: str) -> DatasetBundle[Instance]:
    splits = {}
    for split, items in bundle.items():
        out = []
        for i, inst in enumerate(items):
            try:
                out.append(fn(inst))
            except (ParseError, LFSyntaxError, SRLError, CompositionError, ValueError) as exc:
                if isinstance(exc, DerivationError):
                    raise
                raise DerivationError(split, i, inst.source, str(exc)) from exc
        splits[split] = out
    return DatasetBundle(f"{bundle.name}-{suffix}", splits)


def syntax_target(grammar: FeatureGrammar, sentence: str, cache: ParseCache | None = None) -> str:
    return linearize(coarsen(unique_parse(grammar, sentence, cache), grammar))


def derive_syntax(bundle: DatasetBundle[Instance], grammar: FeatureGrammar,
                  cache: ParseCache | None = None) -> DatasetBundle[Instance]:
    """Targets become linearized coarse constituency trees."""
    return _map(bundle, lambda i: replace(i, target=syntax_target(grammar, i.source, cache)), "syntax")


def derive_pos(bundle: DatasetBundle[Instance], grammar: FeatureGrammar,
               cache: ParseCache | None = None) -> DatasetBundle[Instance]:
    """Targets become space-separated POS tags, one per word (no tag for the period)."""
    def fn(i: Instance) -> Instance:
        tags = pos_sequence(unique_parse(grammar, i.source, cache), grammar)
        return replace(i, target=" ".join(tags))

    return _map(bundle, fn, "pos")


def anchored_lf(instance: Instance, grammar: FeatureGrammar | None = None,
                cache: ParseCache | None = None) -> LogicalForm:
    """The target LF, with token anchors for proper names that occur more than once.

    A repeated name cannot be located from the LF alone; the anchors then
    come from composing the sentence's parse, which must yield the same atoms.
    """
    lf = parse_lf(instance.target)
    if lf.primitive is not None or not unresolved_constants(lf, instance.source):
        return lf
    if grammar is None:
        raise SRLError(f"constants {sorted(unresolved_constants(lf, instance.source))} need a grammar to locate")
    composed = compose_lf(unique_parse(grammar, instance.source, cache), grammar)
    if Counter(composed.atoms) != Counter(lf.atoms):
        raise SRLError("logical form disagrees with the composed meaning of the sentence")
    return composed


def derive_srl(bundle: DatasetBundle[Instance], grammar: FeatureGrammar | None = None,
               cache: ParseCache | None = None) -> DatasetBundle[Instance]:
    """Targets (logical forms) become canonical role-graph edge lists.

    The grammar is only consulted to locate proper names that occur twice.
    """
    def fn(i: Instance) -> Instance:
        return replace(i, target=srl_graph(anchored_lf(i, grammar, cache), i.source).serialize())

    return _map(bundle, fn, "srl")


def derive_syntax_enriched_input(bundle: DatasetBundle[Instance], grammar: FeatureGrammar,
                                 cache: ParseCache | None = None) -> DatasetBundle[Instance]:
    """Sources become linearized gold trees; targets (meaning representations) are kept."""
    return _map(bundle, lambda i: replace(i, source=syntax_target(grammar, i.source, cache)), "syn-input")


DERIVATIONS = {
    "syntax": derive_syntax,
    "pos": derive_pos,
    "srl": derive_srl,
    "syn-input": derive_syntax_enriched_input,
}
