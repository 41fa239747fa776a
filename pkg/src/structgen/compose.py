"""Bottom-up composition of logical forms from derivations.

Each rule's semantics tag names a recipe (``%sem`` lines in the grammar
file), a short list of combinator steps:

``head=i``        the node's head is child i's head
``det=i``         child i is a determiner; "the" moves the head noun to the definite prefix
``nmod=i``        child i is a PP modifying the head noun
``prep=i``        record child i's lemma as this PP's preposition
``role=r:i``      add ``head.r(head, child_i)``
``rev=r:i``       add ``child_i.r(child_i, head)`` (relative clauses)
``subj=r[@i]``    the head verb (or child i's) still needs role r from a subject
``pend=i``        inherit child i's open subject roles
``fill=i``        close all open subject roles with child i's head
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .grammar.model import FeatureGrammar
from .grammar.trees import Derivation
from .logical_form import Arg, Atom, Const, LogicalForm, Var, atom_sort_key


class CompositionError(ValueError):
    pass


@dataclass
class _Meaning:
    head: Arg | None = None
    lemma: str | None = None
    atoms: list[Atom] = field(default_factory=list)
    definites: list[Atom] = field(default_factory=list)
    pending: list[tuple[Arg, str, str]] = field(default_factory=list)
    prep: str | None = None
    definite: bool = False


def _lexical(node: Derivation, index: int, grammar: FeatureGrammar) -> _Meaning:
    kind = grammar.lexical_kind(node.label)
    lemma = node.lemma or node.word or ""
    if kind is None:
        raise CompositionError(f"no lexical semantics declared for category {node.label}")
    if kind == "noun":
        v = Var(index)
        return _Meaning(v, lemma, atoms=[Atom(lemma, (v,))])
    if kind == "name":
        return _Meaning(Const(lemma, anchor=index), lemma)
    if kind == "verb":
        return _Meaning(Var(index), lemma)
    if kind == "det":
        return _Meaning(definite=(lemma == "the"))
    if kind == "prep":
        return _Meaning(prep=lemma)
    return _Meaning()


def _need(m: _Meaning, what: str) -> Arg:
    if m.head is None:
        raise CompositionError(f"{what}: constituent has no semantic head")
    return m.head


def _combine(node: Derivation, kids: list[_Meaning], grammar: FeatureGrammar) -> _Meaning:
    rule = grammar.rule_by_id.get(node.rule_id or "")
    if rule is None:
        raise CompositionError(f"unknown rule {node.rule_id!r}")
    if rule.sem is None or rule.sem not in grammar.recipes:
        raise CompositionError(f"missing composition recipe for rule {rule.rule_id} (tag {rule.sem!r})")
    out = _Meaning()
    for k in kids:
        out.atoms.extend(k.atoms)
        out.definites.extend(k.definites)
    for step in grammar.recipes[rule.sem]:
        op, arg = step.op, step.arg
        if op == "head":
            src = kids[int(arg)]
            out.head, out.lemma = src.head, src.lemma
        elif op == "det":
            if kids[int(arg)].definite:
                unary = Atom(out.lemma or "", (_need(out, "det"),))
                if unary in out.atoms:
                    out.atoms.remove(unary)
                    out.definites.append(unary)
        elif op == "nmod":
            pp = kids[int(arg)]
            out.atoms.append(Atom(f"{out.lemma}.nmod.{pp.prep}", (_need(out, "nmod"), _need(pp, "nmod"))))
        elif op == "prep":
            out.prep = kids[int(arg)].prep
        elif op == "role":
            name, _, idx = arg.partition(":")
            out.atoms.append(Atom(f"{out.lemma}.{name}", (_need(out, name), _need(kids[int(idx)], name))))
        elif op == "rev":
            name, _, idx = arg.partition(":")
            k = kids[int(idx)]
            out.atoms.append(Atom(f"{k.lemma}.{name}", (_need(k, name), _need(out, name))))
        elif op == "subj":
            name, _, idx = arg.partition("@")
            src = kids[int(idx)] if idx else out
            out.pending.append((_need(src, name), src.lemma or "", name))
        elif op == "pend":
            out.pending.extend(kids[int(arg)].pending)
        elif op == "fill":
            filler = _need(kids[int(arg)], "subject")
            for verb, lemma, name in out.pending:
                out.atoms.append(Atom(f"{lemma}.{name}", (verb, filler)))
            out.pending = []
    return out


def compose_lf(derivation: Derivation, grammar: FeatureGrammar) -> LogicalForm:
    """Logical form of a derivation; variables are word positions."""
    if derivation.is_preterminal:
        if derivation.label in grammar.primitives or not grammar.primitives:
            return LogicalForm(primitive=derivation.word)
        raise CompositionError(f"{derivation.label} is not a primitive category")

    counter = [0]

    def walk(node: Derivation) -> _Meaning:
        if node.is_preterminal:
            i = counter[0]
            counter[0] += 1
            return _lexical(node, i, grammar)
        return _combine(node, [walk(c) for c in node.children], grammar)

    m = walk(derivation)
    if m.pending:
        roles = ", ".join(f"{lem}.{r}" for _, lem, r in m.pending)
        raise CompositionError(f"unfilled roles at the root: {roles}")
    definites = sorted(m.definites, key=lambda a: atom_sort_key(a))
    body = sorted(m.atoms, key=atom_sort_key)
    return LogicalForm(tuple(definites), tuple(body))
