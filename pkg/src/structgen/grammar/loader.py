"""Reading grammar and lexicon files.

Grammar files are line based::

    %start S
    %features tense=past|pres
    %coarse NP_* NP
    @vp_cp VP_cp[tense=?t] -> V_cp[tense=?t] CP[tense=!t] : ccomp

Rule ids (``@name``) are optional; unnamed rules get ``LHS.k``.
"""
from __future__ import annotations

import re
from importlib import resources
from pathlib import Path
from typing import Iterable

from .features import FeatureBundle, FeatureSpec
from .model import FeatureGrammar, GrammarError, LexEntry, Lexicon, Rule, SemOp, Symbol

_SYMBOL = re.compile(r"([A-Za-z_][\w\-]*)(?:\[([^\]]*)\])?")
_SEM_OPS = {"head", "det", "nmod", "prep", "role", "rev", "subj", "pend", "fill"}
_LEX_KINDS = {"noun", "name", "verb", "det", "prep", "none"}
_INDEXED = {"head": 0, "det": 0, "nmod": 0, "prep": 0, "pend": 0, "fill": 0}


def _parse_symbol(text: str, line: int, col: int, src: str) -> Symbol:
    m = _SYMBOL.fullmatch(text)
    if not m:
        raise GrammarError(f"malformed symbol {text!r}", line, col, src)
    specs = []
    if m.group(2) is not None:
        body = m.group(2).strip()
        if not body:
            raise GrammarError(f"empty feature list on {m.group(1)}", line, col, src)
        for part in body.split(","):
            feat, sep, val = part.partition("=")
            feat, val = feat.strip(), val.strip()
            if not sep or not feat or not val or val in ("?", "!"):
                raise GrammarError(f"malformed feature constraint {part.strip()!r}", line, col, src)
            specs.append((feat, FeatureSpec.parse(val)))
    return Symbol(m.group(1), tuple(sorted(specs, key=lambda p: p[0])))


def _split_symbols(text: str, line: int, offset: int, src: str) -> list[Symbol]:
    out = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        if tok.startswith(("'", '"')):
            raise GrammarError(f"quoted terminal {tok}: declare words in the lexicon", line,
                               offset + m.start() + 1, src)
        out.append(_parse_symbol(tok, line, offset + m.start() + 1, src))
    return out


def _parse_sem_op(text: str, line: int, src: str) -> SemOp:
    op, _, arg = text.partition("=")
    if op not in _SEM_OPS:
        raise GrammarError(f"unknown composition op {op!r}", line, None, src)
    if op in _INDEXED and not arg.isdigit():
        raise GrammarError(f"op {op} needs a child index", line, None, src)
    if op in ("role", "rev"):
        name, _, idx = arg.partition(":")
        if not name or not idx.isdigit():
            raise GrammarError(f"op {op} needs name:index", line, None, src)
    if op == "subj":
        name, _, idx = arg.partition("@")
        if not name or (idx and not idx.isdigit()):
            raise GrammarError("op subj needs name or name@index", line, None, src)
    return SemOp(op, arg)


def _op_indices(op: SemOp) -> list[int]:
    if op.op in _INDEXED:
        return [int(op.arg)]
    if op.op in ("role", "rev"):
        return [int(op.arg.partition(":")[2])]
    if op.op == "subj" and "@" in op.arg:
        return [int(op.arg.partition("@")[2])]
    return []


def parse_lexicon(text: str, source: str = "<lexicon>") -> list[LexEntry]:
    entries = []
    for n, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.startswith("#"):
            continue
        cols = raw.split("\t")
        if len(cols) != 4:
            raise GrammarError(f"expected 4 tab-separated columns, got {len(cols)}", n, None, source)
        surface, category, feats, lemma = (c.strip() for c in cols)
        if not surface or not category or not lemma:
            raise GrammarError("empty surface, category or lemma", n, None, source)
        try:
            bundle = FeatureBundle.parse(feats)
        except ValueError as exc:
            raise GrammarError(str(exc), n, None, source) from None
        entries.append(LexEntry(surface, category, bundle, lemma))
    return entries


def load_grammar(
    text: str,
    lexicon: str | Lexicon | Iterable[LexEntry] | None = None,
    *,
    base_dir: Path | None = None,
    name: str = "grammar",
    source: str = "<grammar>",
) -> FeatureGrammar:
    """Parse and validate grammar text.

    ``lexicon`` may be TSV text, a :class:`Lexicon`, or entries.  When omitted
    the ``%lexicon FILE`` directive is resolved against ``base_dir``.
    """
    start = None
    domains: dict[str, tuple[str, ...]] = {}
    coarse: list[tuple[str, str]] = []
    recursive: list[str] = []
    primitives: list[str] = []
    heldout: list[tuple[str, int]] = []
    recipes: dict[str, tuple[SemOp, ...]] = {}
    lexsem: list[tuple[str, str]] = []
    animate: list[str] = []
    lex_file = None
    rules: list[Rule] = []
    seen_ids: dict[str, int] = {}
    counters: dict[str, int] = {}

    for n, raw in enumerate(text.splitlines(), 1):
        stripped = raw.split("#", 1)[0].rstrip()
        if not stripped.strip():
            continue
        if stripped.lstrip().startswith("%"):
            parts = stripped.split()
            key, args = parts[0], parts[1:]
            if key == "%start" and len(args) == 1:
                start = args[0]
            elif key == "%features":
                for a in args:
                    feat, sep, vals = a.partition("=")
                    values = tuple(v for v in vals.split("|") if v)
                    if not sep or not feat or len(values) < 2:
                        raise GrammarError(f"malformed feature declaration {a!r}", n, None, source)
                    domains[feat] = values
            elif key == "%coarse" and len(args) == 2:
                coarse.append((args[0], args[1]))
            elif key == "%recursive":
                recursive.extend(args)
            elif key == "%primitive":
                primitives.extend(args)
            elif key == "%heldout":
                heldout.extend((a, n) for a in args)
            elif key == "%lexicon" and len(args) == 1:
                lex_file = args[0]
            elif key == "%animate":
                animate.extend(args)
            elif key == "%lexsem" and len(args) == 2:
                if args[1] not in _LEX_KINDS:
                    raise GrammarError(f"unknown lexical kind {args[1]!r}", n, None, source)
                lexsem.append((args[0], args[1]))
            elif key == "%sem" and args:
                if args[0] in recipes:
                    raise GrammarError(f"recipe {args[0]!r} defined twice", n, None, source)
                recipes[args[0]] = tuple(_parse_sem_op(a, n, source) for a in args[1:])
            else:
                raise GrammarError(f"unknown or malformed directive {key}", n, 1, source)
            continue

        line = stripped
        rule_id = None
        body_offset = 0
        m = re.match(r"\s*@(\S+)\s+", line)
        if m:
            rule_id = m.group(1)
            body_offset = m.end()
        body = line[body_offset:]
        if "->" not in body:
            raise GrammarError("expected '->'", n, body_offset + 1, source)
        left, right = body.split("->", 1)
        rhs_offset = body_offset + len(left) + 2
        tag = None
        tm = re.search(r"\s:\s*(\S+)\s*$", right)
        if tm:
            tag = tm.group(1)
            right = right[: tm.start()]
        lhs_syms = _split_symbols(left, n, body_offset, source)
        if len(lhs_syms) != 1:
            raise GrammarError("exactly one left-hand side symbol expected", n, body_offset + 1, source)
        rhs = _split_symbols(right, n, rhs_offset, source)
        if not rhs:
            raise GrammarError("empty right-hand side", n, rhs_offset + 1, source)
        lhs = lhs_syms[0]
        if rule_id is None:
            k = counters.get(lhs.name, 0)
            rule_id = f"{lhs.name}.{k}"
        counters[lhs.name] = counters.get(lhs.name, 0) + 1
        if rule_id in seen_ids:
            raise GrammarError(f"duplicate rule id {rule_id!r} (first on line {seen_ids[rule_id]})",
                               n, 1, source)
        seen_ids[rule_id] = n
        rules.append(Rule(rule_id, lhs, tuple(rhs), tag, n))

    if lexicon is None:
        if lex_file is None:
            raise GrammarError("no lexicon given and no %lexicon directive", None, None, source)
        path = (base_dir or Path.cwd()) / lex_file
        if not path.exists():
            raise GrammarError(f"lexicon file not found: {path}", None, None, source)
        lex = Lexicon(tuple(parse_lexicon(path.read_text(encoding="utf-8"), str(path))))
    elif isinstance(lexicon, Lexicon):
        lex = lexicon
    elif isinstance(lexicon, str):
        lex = Lexicon(tuple(parse_lexicon(lexicon)))
    else:
        lex = Lexicon(tuple(lexicon))

    grammar = FeatureGrammar(
        start=start or (rules[0].lhs.name if rules else ""),
        rules=tuple(rules),
        lexicon=lex,
        domains=domains,
        coarse_table=tuple(coarse),
        recursive=tuple(recursive),
        primitives=tuple(primitives),
        heldout=frozenset(h for h, _ in heldout),
        recipes=recipes,
        lexsem=tuple(lexsem),
        animate=tuple(animate),
        name=name,
    )
    _validate(grammar, heldout, source)
    return grammar


def _validate(g: FeatureGrammar, heldout: list[tuple[str, int]], src: str) -> None:
    if not g.rules:
        raise GrammarError("grammar has no rules", None, None, src)
    if not g.lexicon.entries:
        raise GrammarError("lexicon is empty", None, None, src)
    if g.start not in g.nonterminals:
        raise GrammarError(f"start symbol {g.start!r} is not the left side of any rule", None, None, src)
    cats = g.lexicon.categories
    overlap = cats & g.nonterminals
    if overlap:
        raise GrammarError(f"categories used both as rule heads and lexical: {sorted(overlap)}",
                           None, None, src)
    for r in g.rules:
        for sym in (r.lhs,) + r.rhs:
            if sym is not r.lhs and sym.name not in g.nonterminals and sym.name not in cats:
                raise GrammarError(f"undeclared symbol {sym.name}", r.line, None, src)
        var_feat: dict[str, str] = {}
        for sym in (r.lhs,) + r.rhs:
            for feat, spec in sym.specs:
                if feat not in g.domains:
                    raise GrammarError(f"undeclared feature {feat!r} on {sym.name}", r.line, None, src)
                if spec.kind == "const" and spec.value not in g.domains[feat]:
                    raise GrammarError(f"value {spec.value!r} not in domain of {feat}", r.line, None, src)
                if spec.kind != "const":
                    prev = var_feat.setdefault(spec.value, feat)
                    if prev != feat:
                        raise GrammarError(f"variable {spec.value} constrains both {prev} and {feat}",
                                           r.line, None, src)
        for sym in (r.lhs,) + r.rhs:
            for _feat, spec in sym.specs:
                if spec.kind == "neg" and not any(
                    s.kind == "var" and s.value == spec.value for x in (r.lhs,) + r.rhs for _, s in x.specs
                ):
                    raise GrammarError(f"negated variable !{spec.value} is never bound", r.line, None, src)
        if r.sem is not None:
            if r.sem not in g.recipes:
                raise GrammarError(f"dangling semantics tag {r.sem!r}", r.line, None, src)
            for op in g.recipes[r.sem]:
                for i in _op_indices(op):
                    if i >= len(r.rhs):
                        raise GrammarError(f"recipe {r.sem} refers to child {i} of a {len(r.rhs)}-ary rule",
                                           r.line, None, src)
    for rid, line in heldout:
        if rid not in g.rule_by_id:
            raise GrammarError(f"%heldout names unknown rule {rid!r}", line, None, src)
    for p in g.primitives:
        if p not in cats:
            raise GrammarError(f"%primitive category {p!r} has no lexical entries", None, None, src)
    for e in g.lexicon.entries:
        for feat, val in e.features.items():
            if feat not in g.domains or val not in g.domains[feat]:
                raise GrammarError(f"lexical entry {e.surface}/{e.category}: undeclared feature {feat}={val}",
                                   None, None, src)
    for _pat, target in g.coarse_table:
        if g.coarse(target) != target:
            raise GrammarError(f"coarse label {target!r} is itself remapped", None, None, src)


def load_grammar_file(path: str | Path, lexicon_path: str | Path | None = None) -> FeatureGrammar:
    path = Path(path)
    lex = Path(lexicon_path).read_text(encoding="utf-8") if lexicon_path else None
    g = load_grammar(path.read_text(encoding="utf-8"), lex, base_dir=path.parent,
                     name=path.stem, source=str(path))
    g.path = path
    return g


SHIPPED = ("cogs", "cc_cp", "rc_pp")
_CACHE: dict[str, FeatureGrammar] = {}


def shipped_path(name: str) -> Path:
    if name not in SHIPPED:
        raise KeyError(f"no shipped grammar {name!r}; choose from {SHIPPED}")
    return Path(str(resources.files("structgen") / "data" / f"{name}.grammar"))


def shipped_grammar(name: str) -> FeatureGrammar:
    """Load (and memoize) one of the bundled grammars: cogs, cc_cp, rc_pp."""
    if name not in _CACHE:
        _CACHE[name] = load_grammar_file(shipped_path(name))
    return _CACHE[name]
