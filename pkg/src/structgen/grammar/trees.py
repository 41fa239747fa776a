"""Derivation trees, coarse constituency trees and their string forms."""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Union

from .features import EMPTY, FeatureBundle

if TYPE_CHECKING:
    from .model import FeatureGrammar, LexEntry


@dataclass(frozen=True)
class Derivation:
    """A node of a full grammar derivation.

    Preterminals carry ``word`` (the surface token as it appears in the
    sentence) and ``lemma``; internal nodes carry the id of the applied rule.
    """

    label: str
    features: FeatureBundle = EMPTY
    rule_id: str | None = None
    children: tuple["Derivation", ...] = ()
    word: str | None = None
    lemma: str | None = None

    @property
    def is_preterminal(self) -> bool:
        return self.word is not None

    def preterminals(self) -> Iterator["Derivation"]:
        if self.is_preterminal:
            yield self
            return
        for c in self.children:
            yield from c.preterminals()

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(p.word for p in self.preterminals())  # type: ignore[misc]

    def nodes(self) -> Iterator["Derivation"]:
        yield self
        for c in self.children:
            yield from c.nodes()

    def rule_ids(self) -> list[str]:
        return [n.rule_id for n in self.nodes() if n.rule_id is not None]


def leaf(entry: "LexEntry", word: str | None = None) -> Derivation:
    return Derivation(entry.category, entry.features, None, (), word or entry.surface, entry.lemma)


def capitalize_first(tree: Derivation) -> Derivation:
    """Upper-case the first letter of the first leaf (sentence-initial position)."""
    if tree.is_preterminal:
        w = tree.word or ""
        return Derivation(tree.label, tree.features, None, (), w[:1].upper() + w[1:], tree.lemma)
    first = capitalize_first(tree.children[0])
    return Derivation(tree.label, tree.features, tree.rule_id, (first,) + tree.children[1:])


def replace_leaf(tree: Derivation, index: int, entry: "LexEntry") -> Derivation:
    """Swap the ``index``-th preterminal for ``entry`` (same category required)."""
    counter = [0]

    def walk(node: Derivation) -> Derivation:
        if node.is_preterminal:
            i = counter[0]
            counter[0] += 1
            if i != index:
                return node
            if entry.category != node.label:
                raise ValueError(f"cannot place {entry.category} under {node.label}")
            word = entry.surface
            if i == 0 and node.word and node.word[:1].isupper():
                word = word[:1].upper() + word[1:]
            return Derivation(node.label, entry.features, None, (), word, entry.lemma)
        return Derivation(node.label, node.features, node.rule_id, tuple(walk(c) for c in node.children))

    return walk(tree)


def sentence_of(tree: Derivation, period: bool = True) -> str:
    toks = list(tree.tokens)
    return " ".join(toks + (["."] if period else []))


Child = Union["Tree", str]


@dataclass(frozen=True)
class Tree:
    """Plain constituency tree; string children are surface tokens."""

    label: str
    children: tuple[Child, ...]

    @property
    def is_preterminal(self) -> bool:
        return len(self.children) == 1 and isinstance(self.children[0], str)

    @property
    def tokens(self) -> tuple[str, ...]:
        out: list[str] = []
        for c in self.children:
            if isinstance(c, str):
                out.append(c)
            else:
                out.extend(c.tokens)
        return tuple(out)

    def subtrees(self) -> Iterator["Tree"]:
        yield self
        for c in self.children:
            if isinstance(c, Tree):
                yield from c.subtrees()


def to_tree(d: Derivation) -> Tree:
    if d.is_preterminal:
        return Tree(d.label, (d.word,))  # type: ignore[arg-type]
    return Tree(d.label, tuple(to_tree(c) for c in d.children))


def coarsen(tree: Derivation | Tree, grammar: "FeatureGrammar") -> Tree:
    """Relabel with coarse names and collapse X -> X unary chains."""
    if isinstance(tree, Derivation):
        tree = to_tree(tree)
    return _coarsen(tree, grammar)


def _coarsen(t: Tree, grammar: "FeatureGrammar") -> Tree:
    label = grammar.coarse(t.label)
    if t.is_preterminal:
        return Tree(label, t.children)
    kids = tuple(_coarsen(c, grammar) for c in t.children)  # type: ignore[arg-type]
    while len(kids) == 1 and not kids[0].is_preterminal and kids[0].label == label:
        kids = kids[0].children  # type: ignore[assignment]
    return Tree(label, kids)


def linearize(tree: Tree) -> str:
    parts: list[str] = []

    def walk(t: Tree) -> None:
        parts.append("(")
        parts.append(t.label)
        for c in t.children:
            if isinstance(c, str):
                parts.append(c)
            else:
                walk(c)
        parts.append(")")

    walk(tree)
    return " ".join(parts)


class TreeSyntaxError(ValueError):
    pass


def delinearize(text: str) -> Tree:
    toks = text.split()
    pos = 0

    def node() -> Tree:
        nonlocal pos
        if pos >= len(toks) or toks[pos] != "(":
            raise TreeSyntaxError(f"expected '(' at token {pos}")
        pos += 1
        if pos >= len(toks) or toks[pos] in "()":
            raise TreeSyntaxError(f"missing label at token {pos}")
        label = toks[pos]
        pos += 1
        kids: list[Child] = []
        while pos < len(toks) and toks[pos] != ")":
            if toks[pos] == "(":
                kids.append(node())
            else:
                kids.append(toks[pos])
                pos += 1
        if pos >= len(toks):
            raise TreeSyntaxError("unbalanced parentheses")
        pos += 1
        if not kids:
            raise TreeSyntaxError(f"empty constituent {label}")
        if any(isinstance(k, str) for k in kids) and len(kids) > 1:
            raise TreeSyntaxError(f"mixed token and subtree children under {label}")
        return Tree(label, tuple(kids))

    tree = node()
    if pos != len(toks):
        raise TreeSyntaxError(f"trailing material at token {pos}")
    return tree


def pos_sequence(tree: Tree | Derivation, grammar: "FeatureGrammar | None" = None) -> list[str]:
    """Preterminal labels in order; derivations need the grammar for coarse names."""
    if isinstance(tree, Derivation):
        if grammar is None:
            raise ValueError("pos_sequence of a derivation needs the grammar (coarse labels)")
        return [grammar.coarse(p.label) for p in tree.preterminals()]
    return [t.label for t in tree.subtrees() if t.is_preterminal]


def constituent_spans(tree: Tree) -> dict[tuple[int, int], list[str]]:
    """Map (start, end) inclusive token spans of non-preterminal nodes to labels."""
    out: dict[tuple[int, int], list[str]] = {}

    def walk(t: Tree, start: int) -> int:
        if t.is_preterminal:
            return start + 1
        pos = start
        for c in t.children:
            pos = walk(c, pos)  # type: ignore[arg-type]
        out.setdefault((start, pos - 1), []).append(t.label)
        return pos

    walk(tree, 0)
    return out


def label_depth(tree: Tree, label: str) -> int:
    """Largest number of ``label`` nodes on any root-to-leaf path."""
    if tree.is_preterminal:
        return 1 if tree.label == label else 0
    below = max(label_depth(c, label) for c in tree.children if isinstance(c, Tree))
    return below + (tree.label == label)
