"""COGS-style logical forms: data types, (de)serialization, role graphs.

Two surface styles are accepted by :func:`parse_lf`:

* ``compact`` (default output): ``*cake ( x _ 4 ) ; eat.agent ( x _ 2 , x _ 1 )``
* ``cogs``: the spacing of the released COGS files, ``* cake ( x _ 4 ) ; eat . agent ( x _ 2 , x _ 1 )``
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence, Union


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    name: str
    # token position of the introducing word; not part of identity
    anchor: int | None = field(default=None, compare=False)


Arg = Union[Var, Const]


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[Arg, ...]

    @property
    def is_unary(self) -> bool:
        return len(self.args) == 1

    @property
    def path(self) -> tuple[str, ...]:
        return tuple(self.predicate.split("."))


@dataclass(frozen=True)
class LogicalForm:
    definites: tuple[Atom, ...] = ()
    body: tuple[Atom, ...] = ()
    primitive: str | None = None

    @property
    def atoms(self) -> tuple[Atom, ...]:
        return self.definites + self.body

    def variables(self) -> set[int]:
        return {a.index for atom in self.atoms for a in atom.args if isinstance(a, Var)}


class LFSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


AND = " AND "
DEF_SEP = " ; "


def _arg_str(a: Arg) -> str:
    return f"x _ {a.index}" if isinstance(a, Var) else a.name


def _atom_str(atom: Atom, style: str, star: bool = False) -> str:
    pred = atom.predicate if style == "compact" else " . ".join(atom.path)
    if star:
        pred = ("*" if style == "compact" else "* ") + pred
    return f"{pred} ( {' , '.join(_arg_str(a) for a in atom.args)} )"


def serialize_lf(lf: LogicalForm, style: str = "compact") -> str:
    if style not in ("compact", "cogs"):
        raise ValueError(f"unknown style {style!r}")
    if lf.primitive is not None:
        return lf.primitive
    parts = [_atom_str(a, style, star=True) + DEF_SEP for a in lf.definites]
    return "".join(parts) + AND.join(_atom_str(a, style) for a in lf.body)


_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_'\-]*)|(\d+)|([()*,;._]))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise LFSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex or 0)
        out.append((m.group(m.lastindex or 0), start))
        pos = m.end()
    return out


def parse_lf(text: str) -> LogicalForm:
    """Parse either serialization style; lambda primitives are kept verbatim."""
    stripped = text.strip()
    if not stripped:
        raise LFSyntaxError("empty logical form", 0)
    if stripped.startswith("LAMBDA"):
        return LogicalForm(primitive=stripped)
    toks = _tokenize(stripped)
    if len(toks) == 1 and toks[0][0][0].isalpha():
        return LogicalForm(primitive=toks[0][0])
    i = 0

    def peek() -> str | None:
        return toks[i][0] if i < len(toks) else None

    def offset() -> int:
        return toks[i][1] if i < len(toks) else len(stripped)

    def expect(value: str) -> None:
        nonlocal i
        if peek() != value:
            raise LFSyntaxError(f"expected {value!r}, found {peek()!r}", offset())
        i += 1

    def name() -> str:
        nonlocal i
        tok = peek()
        if tok is None or not tok[0].isalpha():
            raise LFSyntaxError(f"expected a name, found {tok!r}", offset())
        i += 1
        return tok

    def arg() -> Arg:
        nonlocal i
        tok = name()
        if tok == "x" and peek() == "_":
            i += 1
            num = peek()
            if num is None or not num.isdigit():
                raise LFSyntaxError("malformed variable index", offset())
            i += 1
            return Var(int(num))
        if re.fullmatch(r"x_\d+", tok):
            return Var(int(tok[2:]))
        return Const(tok)

    def atom() -> Atom:
        nonlocal i
        parts = [name()]
        while peek() == ".":
            i += 1
            parts.append(name())
        expect("(")
        args = [arg()]
        while peek() == ",":
            i += 1
            args.append(arg())
        expect(")")
        if len(args) > 2:
            raise LFSyntaxError("atoms take one or two arguments", offset())
        return Atom(".".join(parts), tuple(args))

    definites: list[Atom] = []
    body: list[Atom] = []
    while peek() == "*":
        i += 1
        definites.append(atom())
        expect(";")
    if i < len(toks):
        body.append(atom())
        while peek() == "AND":
            i += 1
            body.append(atom())
    if i != len(toks):
        raise LFSyntaxError(f"unexpected {peek()!r}", offset())
    if not definites and not body:
        raise LFSyntaxError("no atoms", 0)
    for a in definites:
        if not a.is_unary or not isinstance(a.args[0], Var):
            raise LFSyntaxError(f"definite atom {a.predicate} must be unary over a variable", 0)
    return LogicalForm(tuple(definites), tuple(body))


def atom_sort_key(atom: Atom) -> tuple[int, int]:
    def pos(a: Arg) -> int:
        if isinstance(a, Var):
            return a.index
        return a.anchor if a.anchor is not None else -1

    second = pos(atom.args[1]) if len(atom.args) > 1 else -1
    return (pos(atom.args[0]), second)


# -- role graphs -----------------------------------------------------------

SRL_LABELS = ("Agent", "Theme", "Recipient", "Ccomp", "Xcomp", "Nmod", "DefN", "IndefN")


@dataclass(frozen=True)
class SRLGraph:
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, str, int], ...]

    def serialize(self) -> str:
        return " ; ".join(f"{s} {lab} {t}" for s, lab, t in self.edges)

    @classmethod
    def parse(cls, text: str) -> "SRLGraph":
        edges = []
        for rec in filter(None, (r.strip() for r in text.split(";"))):
            s, lab, t = rec.split()
            edges.append((int(s), lab, int(t)))
        nodes = sorted({e[0] for e in edges} | {e[2] for e in edges})
        return cls(tuple(nodes), tuple(sorted(edges)))


class SRLError(ValueError):
    pass


def _words(tokens: Sequence[str] | str) -> list[str]:
    toks = tokens.split() if isinstance(tokens, str) else list(tokens)
    return toks[:-1] if toks and toks[-1] == "." else toks


def resolve_arg(a: Arg, words: Sequence[str]) -> int:
    """Token index of an argument; constants without an anchor are looked up by surface."""
    if isinstance(a, Var):
        idx = a.index
    elif a.anchor is not None:
        idx = a.anchor
    else:
        hits = [i for i, w in enumerate(words) if w == a.name]
        if len(hits) != 1:
            what = "absent from" if not hits else "repeated in"
            raise SRLError(f"constant {a.name} is {what} the sentence")
        idx = hits[0]
    if not 0 <= idx < len(words):
        raise SRLError(f"variable index {idx} out of range for {len(words)} words")
    return idx


def unresolved_constants(lf: LogicalForm, tokens: Sequence[str] | str) -> set[str]:
    """Unanchored constants whose surface form is missing or repeated."""
    words = _words(tokens)
    names = {a.name for atom in lf.atoms for a in atom.args if isinstance(a, Const) and a.anchor is None}
    return {n for n in names if words.count(n) != 1}


def role_label(predicate: str) -> str:
    parts = predicate.split(".")
    if len(parts) >= 2 and parts[1] == "nmod":
        return "Nmod"
    label = parts[-1].capitalize()
    if label not in SRL_LABELS:
        raise SRLError(f"unknown role {parts[-1]!r}")
    return label


def srl_graph(lf: LogicalForm, tokens: Sequence[str] | str) -> SRLGraph:
    words = _words(tokens)
    if lf.primitive is not None:
        return SRLGraph((), ())
    edges: set[tuple[int, str, int]] = set()
    for a in lf.definites:
        i = resolve_arg(a.args[0], words)
        edges.add((i, "DefN", i))
    for a in lf.body:
        if a.is_unary:
            i = resolve_arg(a.args[0], words)
            edges.add((i, "IndefN", i))
        else:
            edges.add((resolve_arg(a.args[0], words), role_label(a.predicate), resolve_arg(a.args[1], words)))
    defs = {s for s, lab, _ in edges if lab == "DefN"}
    if any(lab == "IndefN" and s in defs for s, lab, _ in edges):
        raise SRLError("a noun is marked both definite and indefinite")
    nodes = sorted({e[0] for e in edges} | {e[2] for e in edges})
    return SRLGraph(tuple(nodes), tuple(sorted(edges)))
