"""Deterministic reference predictors.

* most-frequent-POS tagging,
* grammar oracles for syntax and semantics (unique parse, then coarsen or compose),
* a template-aware string heuristic for QA that only knows word positions,
* a selector restricted to constituents of the gold tree.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .compose import compose_lf
from .forge.bundle import Instance
from .forge.derive import ParseCache, unique_parse
from .grammar import (
    Derivation,
    FeatureGrammar,
    coarsen,
    constituent_spans,
    linearize,
    pos_sequence,
    shipped_grammar,
    words_of,
)
from .logical_form import serialize_lf
from .qa.disamb import AttachmentError, resolve_attachment, token_features, tree_reading
from .qa.instances import PRIM_QUESTION, normalize_determiner


# -- most frequent POS -----------------------------------------------------

@dataclass
class PosCountTable:
    counts: dict[str, Counter] = field(default_factory=dict)

    def best(self, word: str) -> str | None:
        c = self.counts.get(word.lower())
        if not c:
            return None
        top = max(c.values())
        return min(t for t, n in c.items() if n == top)

    @property
    def fallback(self) -> str:
        total: Counter = Counter()
        for c in self.counts.values():
            total.update(c)
        if not total:
            raise ValueError("empty POS table")
        top = max(total.values())
        return min(t for t, n in total.items() if n == top)


class AlignmentError(ValueError):
    pass


def mfpos_train(instances: Iterable[Instance]) -> PosCountTable:
    """Count tags per lower-cased word type; ties go to the smallest tag name."""
    table = PosCountTable()
    for n, inst in enumerate(instances):
        words = words_of(inst.source)
        tags = inst.target.split()
        if len(words) != len(tags):
            raise AlignmentError(f"instance {n}: {len(words)} words but {len(tags)} tags")
        for w, t in zip(words, tags):
            table.counts.setdefault(w.lower(), Counter())[t] += 1
    return table


def mfpos_predict(table: PosCountTable, sentence: str | Sequence[str]) -> str:
    fallback = None
    out = []
    for w in words_of(sentence):
        tag = table.best(w)
        if tag is None:
            fallback = fallback or table.fallback
            tag = fallback
        out.append(tag)
    return " ".join(out)


# -- grammar oracles ---------------------------------------------------------

def oracle_syntax_parse(grammar: FeatureGrammar, sentence: str, cache: ParseCache | None = None) -> str:
    return linearize(coarsen(unique_parse(grammar, sentence, cache), grammar))


def oracle_semantic_parse(grammar: FeatureGrammar, sentence: str, style: str = "compact",
                          cache: ParseCache | None = None) -> str:
    return serialize_lf(compose_lf(unique_parse(grammar, sentence, cache), grammar), style)


# -- string heuristic ----------------------------------------------------------

class HeuristicError(ValueError):
    pass


@dataclass(frozen=True)
class VerbVocabulary:
    """Surface verb forms mapped to lemmas; no syntactic information."""

    lemma_of: Mapping[str, str]

    @classmethod
    def from_grammars(cls, grammars: Iterable[FeatureGrammar]) -> "VerbVocabulary":
        table: dict[str, str] = {}
        for g in grammars:
            for e in g.lexicon.entries:
                if g.lexical_kind(e.category) == "verb":
                    table.setdefault(e.surface.lower(), e.lemma)
                    table.setdefault(e.lemma.lower(), e.lemma)
        return cls(table)

    def lemma(self, word: str) -> str | None:
        return self.lemma_of.get(word.lower())


_VOCAB: VerbVocabulary | None = None


def default_vocabulary() -> VerbVocabulary:
    global _VOCAB
    if _VOCAB is None:
        _VOCAB = VerbVocabulary.from_grammars(shipped_grammar(n) for n in ("cogs", "cc_cp", "rc_pp"))
    return _VOCAB


def _strip_suffix(seq: list[str], suffix: list[str]) -> list[str] | None:
    if suffix and len(seq) > len(suffix) and [w.lower() for w in seq[-len(suffix):]] == [w.lower() for w in suffix]:
        return seq[:-len(suffix)]
    return None


def _strip_prefix(seq: list[str], prefix: list[str]) -> list[str] | None:
    if prefix and len(seq) > len(prefix) and [w.lower() for w in seq[:len(prefix)]] == [w.lower() for w in prefix]:
        return seq[len(prefix):]
    return None


def left_context_span_heuristic(context: str, question: str, vocab: VerbVocabulary | None = None) -> str:
    """Answer from word positions relative to the questioned verb.

    Subjects are everything left of the verb (minus a passive auxiliary),
    objects and complements everything to its right up to the period, the
    passive agent whatever follows "by".  The question template says which
    of these is asked for and which words it already mentions.
    """
    vocab = vocab or default_vocabulary()
    ctx = words_of(context)
    q = question.split()
    if q and q[-1] == "?":
        q = q[:-1]
    if question.strip() == PRIM_QUESTION:
        return context
    if len(q) < 2:
        raise HeuristicError(f"unrecognized question {question!r}")

    # which verb, which role, and the words the question itself supplies
    role: str
    mention: list[str] = []
    recipient: list[str] = []
    if q[:3] == ["What", "is", "the"] or q[:3] == ["Who", "is", "the"]:
        # relation form: "What is the ROLE of VERB"
        role, verb = q[3], q[5]
        role = {"ccomp": "theme"}.get(role, role)
    elif q[1] == "did":
        vi = next((i for i in range(2, len(q)) if vocab.lemma(q[i]) and _find(ctx, q[i], vocab) is not None), None)
        if vi is None:
            raise HeuristicError(f"no verb of {question!r} in the context")
        verb, rest = q[vi], q[vi + 1:]
        if rest == ["to", "do"]:
            role = "xcomp"
        elif rest and rest[0] == "to":
            role, recipient = "theme", rest[1:]
        elif rest and rest[-1] == "to":
            role, mention = "recipient", rest[:-1]
        else:
            role = "theme"
    elif q[1] in ("was", "were"):
        if vocab.lemma(q[2]) and _find(ctx, q[2], vocab) is not None:
            verb, rest = q[2], q[3:]
            role = "theme"
            recipient = rest[1:] if rest and rest[0] == "to" else []
        else:
            vi = next((i for i in range(len(q) - 1, 1, -1) if vocab.lemma(q[i])), None)
            if vi is None:
                raise HeuristicError(f"no verb in {question!r}")
            verb, mention, role = q[vi], q[2:vi], "recipient"
    else:
        verb, role = q[1], "agent"

    v = _find(ctx, verb, vocab)
    if v is None:
        raise HeuristicError(f"verb {verb!r} is absent from the context")
    passive = v > 0 and ctx[v - 1].lower() in ("was", "were")
    left = ctx[: v - 1] if passive else ctx[:v]
    right = ctx[v + 1:]
    by = [i for i, w in enumerate(right) if w == "by"] if passive else []
    if by:
        agent, right = right[by[-1] + 1:], right[: by[-1]]
    else:
        agent = []

    if role == "agent":
        ans = agent if passive else left
    elif role == "xcomp":
        ans = right[1:2] if right[:1] == ["to"] else right[:1]
    elif role == "theme":
        if q[1] in ("was", "were") and not passive:
            ans = left
        elif passive:
            ans = right if right and right[0] != "to" else left
        elif recipient:
            ans = _strip_suffix(right, ["to"] + recipient) or _strip_prefix(right, recipient) or right
        else:
            ans = right
    elif role == "recipient":
        if passive:
            ans = right[1:] if right[:1] == ["to"] else left
        else:
            ans = _strip_prefix(right, mention + ["to"]) or _strip_suffix(right, mention) or right
    else:
        raise HeuristicError(f"unsupported role {role!r}")
    if not ans:
        raise HeuristicError(f"empty answer span for {question!r}")
    return normalize_determiner(" ".join(ans))


def _find(ctx: Sequence[str], word: str, vocab: VerbVocabulary) -> int | None:
    lemma = vocab.lemma(word)
    for i, w in enumerate(ctx):
        if vocab.lemma(w) == lemma and (w.lower() == word.lower() or lemma is not None):
            if i == 0:
                continue
            return i
    return None


# -- gold-tree constrained selection ---------------------------------------------

def _question_role(question: str, corpus: str) -> str:
    q = question.split()
    if corpus == "rc_pp":
        return "theme"
    if q[:3] in (["What", "is", "the"], ["Who", "is", "the"]):
        return q[3]
    return "agent" if q[0] == "Who" else "ccomp"


def constrained_constituent_selector(context: str, question: str, gold_tree: Derivation,
                                     grammar: FeatureGrammar, corpus: str) -> tuple[int, int]:
    """Span of the questioned relation, chosen among gold-tree constituents.

    For sentences combining both structures the attachment comes from
    agreement features; otherwise the relation is read off the tree.
    """
    tree = coarsen(gold_tree, grammar)
    spans = set(constituent_spans(tree))
    words = words_of(context)
    role = _question_role(question, corpus)
    try:
        feats = token_features(grammar, words, pos_sequence(tree))
        span = resolve_attachment(tree, feats, corpus).spans[role]
    except (AttachmentError, KeyError):
        _, readings = tree_reading(tree, corpus)
        if role not in readings:
            raise AttachmentError(f"no {role} constituent in {context!r}") from None
        span = readings[role]
    if span not in spans:
        raise AttachmentError(f"span {span} is not a constituent of the gold tree")
    return span

