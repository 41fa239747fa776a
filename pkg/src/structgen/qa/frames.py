"""Predicate frames read off logical forms, and QA-COGS-base templates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from ..forge.bundle import DatasetBundle, Instance
from ..forge.derive import ParseCache, anchored_lf
from ..grammar import FeatureGrammar
from ..logical_form import LogicalForm, resolve_arg
from .instances import PRIM_QUESTION, QAInstance, span_text

ROLES = ("agent", "theme", "recipient", "ccomp", "xcomp")

FRAME_KINDS: dict[frozenset[str], str] = {
    frozenset({"agent"}): "agent",
    frozenset({"theme"}): "theme",
    frozenset({"agent", "theme"}): "agent_theme",
    frozenset({"agent", "theme", "recipient"}): "agent_theme_recipient",
    frozenset({"theme", "recipient"}): "theme_recipient",
    frozenset({"agent", "ccomp"}): "agent_ccomp",
    frozenset({"agent", "xcomp"}): "agent_xcomp",
}


class FrameError(ValueError):
    pass


@dataclass(frozen=True)
class PredicateFrame:
    kind: str
    predicate: int
    lemma: str
    args: Mapping[str, tuple[int, int]]
    heads: Mapping[str, int]

    def __post_init__(self) -> None:
        if FRAME_KINDS.get(frozenset(self.args)) != self.kind:
            raise FrameError(f"roles {sorted(self.args)} do not form a {self.kind} frame")


def _words(tokens: Sequence[str] | str) -> list[str]:
    toks = tokens.split() if isinstance(tokens, str) else list(tokens)
    return toks[:-1] if toks and toks[-1] == "." else toks


def extract_frames(lf: LogicalForm, tokens: Sequence[str] | str) -> list[PredicateFrame]:
    """One frame per predicate, verbs in sentence order.

    Infinitival complements are answers of their governing verb's frame
    and get no frame of their own.
    """
    words = _words(tokens)
    if lf.primitive is not None:
        return []
    roles: dict[int, dict[str, int]] = {}
    lemmas: dict[int, str] = {}
    nmods: dict[int, list[int]] = {}
    for atom in lf.body:
        if atom.is_unary:
            continue
        path = atom.path
        src = resolve_arg(atom.args[0], words)
        tgt = resolve_arg(atom.args[1], words)
        if len(path) >= 3 and path[1] == "nmod":
            nmods.setdefault(src, []).append(tgt)
        elif len(path) == 2 and path[1] in ROLES:
            if path[1] in roles.setdefault(src, {}):
                raise FrameError(f"{path[0]} has two {path[1]} arguments")
            roles[src][path[1]] = tgt
            lemmas[src] = path[0]
        else:
            raise FrameError(f"unrecognized predicate {atom.predicate}")
    definite_heads = {resolve_arg(a.args[0], words) for a in lf.definites}
    nouns = definite_heads | {resolve_arg(a.args[0], words) for a in lf.body if a.is_unary}

    def np_span(head: int) -> tuple[int, int]:
        start = head - 1 if head in nouns and head > 0 and words[head - 1].lower() in ("a", "the") else head
        end = head
        for child in nmods.get(head, ()):
            end = max(end, np_span(child)[1])
        return start, end

    def clause_span(verb: int) -> tuple[int, int]:
        lo = hi = verb
        for role, arg in roles.get(verb, {}).items():
            s, e = arg_span(role, arg)
            lo, hi = min(lo, s), max(hi, e)
        return lo, hi

    def arg_span(role: str, arg: int) -> tuple[int, int]:
        if role == "ccomp":
            s, e = clause_span(arg)
            if s == 0 or words[s - 1].lower() != "that":
                raise FrameError(f"complement clause at {s} is not introduced by 'that'")
            return s - 1, e
        if role == "xcomp":
            return arg, arg
        return np_span(arg)

    xcomp_targets = {a for r in roles.values() for role, a in r.items() if role == "xcomp"}
    frames = []
    for verb in sorted(roles):
        if verb in xcomp_targets:
            continue
        kind = FRAME_KINDS.get(frozenset(roles[verb]))
        if kind is None:
            raise FrameError(f"unrecognized role combination {sorted(roles[verb])} for {lemmas[verb]}")
        args = {role: arg_span(role, a) for role, a in roles[verb].items()}
        frames.append(PredicateFrame(kind, verb, lemmas[verb], args, dict(roles[verb])))
    return frames


@dataclass(frozen=True)
class VerbForms:
    """Past and participle surface forms by lemma."""

    past: Mapping[str, str]
    participle: Mapping[str, str]

    @classmethod
    def from_grammar(cls, grammar: FeatureGrammar) -> "VerbForms":
        past: dict[str, str] = {}
        part: dict[str, str] = {}
        for e in grammar.lexicon.entries:
            if grammar.lexical_kind(e.category) != "verb" or e.category in ("V_inf", "V_prim"):
                continue
            if e.features.get("tense") == "pres":
                continue
            table = part if e.category.endswith("_pp") else past
            table.setdefault(e.lemma, e.surface)
        return cls(past, part)


Animacy = Callable[[int], bool]


def animacy_from_grammar(grammar: FeatureGrammar, words: Sequence[str]) -> Animacy:
    def animate(i: int) -> bool:
        entries = grammar.lexicon.lookup(words[i], initial=(i == 0))
        return any(grammar.is_animate(e.category) for e in entries)
    return animate


def _wh(animate: bool) -> str:
    return "Who" if animate else "What"


def frame_questions(frame: PredicateFrame, words: Sequence[str], forms: VerbForms,
                    animate: Animacy) -> list[tuple[str, str]]:
    """(question, role) pairs for every argument of ``frame``."""
    text = {r: span_text(words, s) for r, s in frame.args.items()}
    surface = words[frame.predicate]
    passive = frame.predicate > 0 and words[frame.predicate - 1].lower() in ("was", "were")
    base = frame.lemma
    past = forms.past.get(base, surface if not passive else base)
    pp = surface if passive else forms.participle.get(base, past)
    A, T, R = text.get("agent"), text.get("theme"), text.get("recipient")
    k = frame.kind
    out: list[tuple[str, str]] = []
    if k == "agent":
        out.append((f"Who {past} ?", "agent"))
    elif k == "theme":
        out.append((f"{_wh(animate(frame.heads['theme']))} was {pp} ?", "theme"))
    elif k == "agent_theme":
        out.append((f"{_wh(animate(frame.heads['theme']))} did {A} {base} ?", "theme"))
        out.append((f"Who {past} {T} ?", "agent"))
    elif k == "agent_theme_recipient":
        out.append((f"Who {past} {T} to {R} ?", "agent"))
        out.append((f"{_wh(animate(frame.heads['theme']))} did {A} {base} to {R} ?", "theme"))
        out.append((f"Who did {A} {base} {T} to ?", "recipient"))
    elif k == "theme_recipient":
        out.append((f"Who was {T} {pp} to ?", "recipient"))
        out.append((f"{_wh(animate(frame.heads['theme']))} was {pp} to {R} ?", "theme"))
    elif k == "agent_ccomp":
        out.append((f"What did {A} {base} ?", "ccomp"))
        out.append((f"Who {past} {text['ccomp']} ?", "agent"))
    elif k == "agent_xcomp":
        out.append((f"Who {past} to {text['xcomp']} ?", "agent"))
        out.append((f"What did {A} {base} to do ?", "xcomp"))
    return out


def generate_qa_base(instance: Instance, frames: Sequence[PredicateFrame], grammar: FeatureGrammar,
                     forms: VerbForms | None = None) -> list[QAInstance]:
    """One QA pair per predicate-argument pair; primitives get the <prim> question."""
    words = instance.tokens
    if len(words) == 1 and not frames:
        return [QAInstance(instance.source, PRIM_QUESTION, words[0], (0, 0), instance.label, instance.split)]
    forms = forms or VerbForms.from_grammar(grammar)
    animate = animacy_from_grammar(grammar, _words(words))
    out = []
    for f in frames:
        for question, role in frame_questions(f, _words(words), forms, animate):
            span = f.args[role]
            out.append(QAInstance(instance.source, question, span_text(words, span), span,
                                  instance.label, instance.split))
    return out


def build_qa_base(bundle: DatasetBundle[Instance], grammar: FeatureGrammar,
                  cache: ParseCache | None = None) -> DatasetBundle[QAInstance]:
    """QA-COGS-base from a bundle whose targets are logical forms."""
    forms = VerbForms.from_grammar(grammar)
    splits = {}
    for split, items in bundle.items():
        out: list[QAInstance] = []
        for inst in items:
            lf = anchored_lf(inst, grammar, cache)
            frames = [] if lf.primitive is not None else extract_frames(lf, inst.source)
            out.extend(generate_qa_base(inst, frames, grammar, forms))
        splits[split] = out
    return DatasetBundle(f"{bundle.name}-qa-base", splits)


__all__ = [
    "FRAME_KINDS", "FrameError", "PredicateFrame", "VerbForms", "build_qa_base",
    "extract_frames", "frame_questions", "generate_qa_base",
]
