"""QA-COGS-disamb: agreement-disambiguated attachment corpora.

cc_cp sentences have the shape ``N1 V1 that N2 V2 ... and V3``; V3
coordinates with whichever of V1 (high) or V2 (low) shares its tense.
rc_pp sentences have ``... Det N1 P Det N2 that AUX V``; the relative
clause attaches to whichever noun agrees in number with the auxiliary.

A cell of the 2x2 agreement grid is (coordinated-verb tense, main-verb
tense) for cc_cp and (object-head number, auxiliary number) for rc_pp.
One cell is held out and only occurs in the generalization split.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ..forge.bundle import IN_DISTRIBUTION, DatasetBundle
from ..grammar import (
    Derivation,
    FeatureBundle,
    FeatureGrammar,
    Tree,
    coarsen,
    get_sampler,
    is_valid,
    parse,
    pos_sequence,
    shipped_grammar,
)
from ..grammar.model import LexEntry
from .instances import QAInstance, span_text

CORPORA = ("cc_cp", "rc_pp")
LAYOUTS = ("cells", "separate")
QUESTION_STYLES = ("natural", "relation")
DEFAULT_COUNTS = (4000, 1000, 1000, 2000)
DEFAULT_GEN_CELL = {"cc_cp": ("past", "past"), "rc_pp": ("pl", "sg")}
EXPANSION = 4


class AttachmentError(ValueError):
    pass


class AmbiguousAttachment(AttachmentError):
    pass


class ContradictoryAttachment(AttachmentError):
    pass


class GenerationExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class AgreementCell:
    first: str
    second: str

    @property
    def name(self) -> str:
        return f"{self.first}-{self.second}"

    def __str__(self) -> str:
        return self.name


FEATURE = {"cc_cp": "tense", "rc_pp": "number"}
DOMAIN = {"cc_cp": ("past", "pres"), "rc_pp": ("sg", "pl")}


def all_cells(corpus: str) -> list[AgreementCell]:
    d = DOMAIN[corpus]
    return [AgreementCell(a, b) for a in d for b in d]


def parse_cell(corpus: str, value: str | Sequence[str] | AgreementCell) -> AgreementCell:
    """Accept ``"past,past"``, ``"past-past"``, a pair or a cell."""
    if corpus not in CORPORA:
        raise ValueError(f"unknown disamb corpus {corpus!r}")
    if isinstance(value, AgreementCell):
        cell = value
    else:
        parts = value.replace(",", "-").split("-") if isinstance(value, str) else list(value)
        if len(parts) != 2:
            raise ValueError(f"gen cell must name two values, got {value!r}")
        cell = AgreementCell(parts[0].strip(), parts[1].strip())
    if cell not in all_cells(corpus):
        raise ValueError(f"invalid gen cell {cell.name!r} for {corpus}; choose from "
                         f"{', '.join(c.name for c in all_cells(corpus))}")
    return cell


@dataclass(frozen=True)
class Attachment:
    site: str  # "high" or "low"
    spans: dict[str, tuple[int, int]]


def token_features(grammar: FeatureGrammar, words: Sequence[str], pos: Sequence[str]) -> list[FeatureBundle]:
    """Lexical features per word, taken from entries whose coarse category matches the tag."""
    out = []
    for i, (w, tag) in enumerate(zip(words, pos)):
        feats = {e.features for e in grammar.lexicon.lookup(w, initial=(i == 0)) if grammar.coarse(e.category) == tag}
        out.append(feats.pop() if len(feats) == 1 else FeatureBundle.of())
    return out


def _words(tree: Tree | Derivation) -> list[str]:
    return list(tree.tokens)


def _last(pos: Sequence[str], tag: str, before: int) -> int:
    for i in range(before - 1, -1, -1):
        if pos[i] == tag:
            return i
    raise AttachmentError(f"no {tag} before position {before}")


def _first(pos: Sequence[str], tag: str, after: int) -> int:
    for i in range(after + 1, len(pos)):
        if pos[i] == tag:
            return i
    raise AttachmentError(f"no {tag} after position {after}")


def _decide(main: str | None, inner: str | None, probe: str | None, what: str) -> str:
    if None in (main, inner, probe):
        raise ContradictoryAttachment(f"{what} feature missing")
    if main == inner:
        # the grammar forbids equal values at the two sites
        raise ContradictoryAttachment(f"both attachment sites have {what}={main}")
    sites = [s for s, v in (("high", main), ("low", inner)) if v == probe]
    if not sites:
        raise ContradictoryAttachment(f"{what}={probe} agrees with neither site")
    if len(sites) > 1:
        raise AmbiguousAttachment(f"{what}={probe} agrees with both sites")
    return sites[0]


def resolve_attachment(tree: Tree, features: Sequence[FeatureBundle], corpus: str = "cc_cp") -> Attachment:
    """Pick the agreement-consistent attachment from POS tags and word features.

    Only the preterminal layer of ``tree`` is consulted, so either candidate
    tree of an ambiguous string gives the same answer.
    """
    pos = pos_sequence(tree)
    n = len(pos)
    if len(features) != n:
        raise ValueError(f"{len(features)} feature bundles for {n} words")
    if corpus == "cc_cp":
        c = pos.index("C") if "C" in pos else -1
        k = pos.index("Conj") if "Conj" in pos else -1
        if c < 0 or k < c:
            raise AttachmentError("not a CP-plus-coordination sentence")
        v1, v2, v3 = _last(pos, "V", c), _first(pos, "V", c), _first(pos, "V", k)
        site = _decide(features[v1].get("tense"), features[v2].get("tense"), features[v3].get("tense"), "tense")
        if site == "high":
            spans = {"ccomp": (c, k - 1), "agent": (0, v1 - 1)}
        else:
            spans = {"ccomp": (c, n - 1), "agent": (c + 1, v2 - 1)}
        return Attachment(site, spans)
    if corpus == "rc_pp":
        c = pos.index("C") if "C" in pos else -1
        if c < 0:
            raise AttachmentError("no relative clause")
        aux = c + 1
        p = _last(pos, "P", c)
        n1, n2 = p - 1, c - 1
        if pos[n1] != "N" or pos[n2] != "N" or pos[p - 2] != "Det":
            raise AttachmentError("relative clause does not follow Det N P Det N")
        site = _decide(features[n1].get("number"), features[n2].get("number"), features[aux].get("number"), "number")
        spans = {"theme": (p - 2, n2) if site == "high" else (p + 1, n2)}
        return Attachment(site, spans)
    raise ValueError(f"unknown disamb corpus {corpus!r}")


# -- structural reading of gold trees ---------------------------------------

@dataclass
class _Node:
    tree: Tree
    start: int
    end: int
    parent: "_Node | None" = None
    kids: list["_Node"] = field(default_factory=list)


def _index(tree: Tree) -> list[_Node]:
    nodes: list[_Node] = []

    def walk(t: Tree, start: int, parent: _Node | None) -> int:
        node = _Node(t, start, start, parent)
        nodes.append(node)
        if parent is not None:
            parent.kids.append(node)
        if t.is_preterminal:
            return start + 1
        pos = start
        for c in t.children:
            pos = walk(c, pos, node)  # type: ignore[arg-type]
        node.end = pos - 1
        return pos

    walk(tree, 0, None)
    return nodes


def _ancestor(node: _Node, label: str) -> _Node:
    cur = node.parent
    while cur is not None and cur.tree.label != label:
        cur = cur.parent
    if cur is None:
        raise AttachmentError(f"no enclosing {label}")
    return cur


def tree_reading(tree: Tree, corpus: str) -> tuple[str | None, dict[str, tuple[int, int]]]:
    """Attachment site and answer spans read off a coarse gold tree.

    The site is None for sentences that contain only one of the two
    structures; the spans then cover whatever relation the sentence has.
    """
    nodes = _index(tree)
    spans: dict[str, tuple[int, int]] = {}
    site = None
    if corpus == "cc_cp":
        cps = [n for n in nodes if n.tree.label == "CP"]
        coords = [n for n in nodes if n.tree.label == "VP" and any(k.tree.label == "Conj" for k in n.kids)]
        if cps:
            spans["ccomp"] = (cps[0].start, cps[0].end)
        if coords:
            clause = _ancestor(coords[0], "S")
            subj = clause.kids[0]
            spans["agent"] = (subj.start, subj.end)
            if cps:
                inside = cps[0].start <= coords[0].start <= cps[0].end
                site = "low" if inside else "high"
        return site, spans
    if corpus == "rc_pp":
        rcs = [n for n in nodes if n.tree.label == "RC"]
        if rcs:
            host = rcs[0].parent.kids[0]  # type: ignore[union-attr]
            spans["theme"] = (host.start, host.end)
            has_pp = any(n.tree.label == "PP" for n in nodes)
            if has_pp:
                site = "high" if any(k.tree.label == "PP" for k in host.kids) else "low"
        else:
            vp = next(n for n in nodes if n.tree.label == "VP")
            obj = vp.kids[1]
            spans["theme"] = (obj.start, obj.end)
        return site, spans
    raise ValueError(f"unknown disamb corpus {corpus!r}")


def candidate_trees(grammar: FeatureGrammar, sentence: str) -> tuple[list[Derivation], list[Derivation]]:
    """Featureless parses of ``sentence`` and the subset passing the validator."""
    cands = parse(grammar, sentence, use_features=False)
    return cands, [t for t in cands if is_valid(t, grammar)]


def cell_of(corpus: str, tree: Tree, features: Sequence[FeatureBundle]) -> AgreementCell | None:
    pos = pos_sequence(tree)
    try:
        if corpus == "cc_cp":
            c, k = pos.index("C"), pos.index("Conj")
            v1, v3 = _last(pos, "V", c), _first(pos, "V", k)
            return AgreementCell(features[v3]["tense"], features[v1]["tense"])
        c = pos.index("C")
        p = _last(pos, "P", c)
        return AgreementCell(features[p - 1]["number"], features[c + 1]["number"])
    except (ValueError, KeyError, AttachmentError):
        return None


# -- corpus construction -----------------------------------------------------

@dataclass(frozen=True)
class DisambConfig:
    counts: tuple[int, int, int, int] = DEFAULT_COUNTS
    seed: int = 0
    gen_cell: str | None = None
    layout: str = "cells"
    question_style: str = "natural"
    attempts: int = 2000


@dataclass
class _Source:
    tree: Derivation
    words: list[str]
    lemmas: set[str]


class DisambBuilder:
    def __init__(self, corpus: str, grammar: FeatureGrammar | None = None, config: DisambConfig = DisambConfig()):
        if corpus not in CORPORA:
            raise ValueError(f"unknown disamb corpus {corpus!r}")
        if config.layout not in LAYOUTS:
            raise ValueError(f"layout must be one of {LAYOUTS}")
        if config.question_style not in QUESTION_STYLES:
            raise ValueError(f"question style must be one of {QUESTION_STYLES}")
        if any(c < 0 for c in config.counts) or len(config.counts) != 4:
            raise ValueError("counts must be four non-negative integers")
        self.corpus = corpus
        self.g = grammar or shipped_grammar(corpus)
        self.cfg = config
        self.gen_cell = parse_cell(corpus, config.gen_cell or DEFAULT_GEN_CELL[corpus])
        self.train_cells = [c for c in all_cells(corpus) if c != self.gen_cell]
        self.seen: set[tuple[str, str]] = set()
        self.base = get_sampler(self.g)
        lex = self.g.lexicon.by_category
        if corpus == "cc_cp":
            self.probe_entries = lex["V_unerg"]
            self.single = get_sampler(self.g, include_heldout=True,
                                      exclude_rules=["s_cp", "s_coord", "s_simple"])
        else:
            self.probe_entries = lex["V_pp"]
            self.aux = {e.features["number"]: e for e in lex["AUX"]}
            self.single = get_sampler(self.g, include_heldout=True,
                                      exclude_rules=["obj_plain", "obj_pp", "rc_high"])

    # sources ----------------------------------------------------------------
    def _source(self, tree: Derivation) -> _Source:
        leaves = list(tree.preterminals())
        return _Source(tree, [p.word or "" for p in leaves], {p.lemma or "" for p in leaves})

    def sample_source(self, rng: random.Random, cell: AgreementCell) -> _Source:
        """A sentence with one structure whose features fit ``cell``."""
        for _ in range(self.cfg.attempts):
            if self.corpus == "cc_cp":
                t = self.base.sample(rng, max_depth=1, start_features={"tense": cell.second})
                return self._source(t)
            t = self.base.sample(rng, max_depth=1)
            if "obj_pp" not in t.rule_ids():
                continue
            src = self._source(t)
            leaves = list(t.preterminals())
            p = max(i for i, lf in enumerate(leaves) if lf.label == "P")
            if leaves[p - 1].features.get("number") == cell.first:
                return src
        raise GenerationExhausted(f"no {self.corpus} source for cell {cell}")

    def _probes(self, rng: random.Random, src: _Source, cell: AgreementCell, k: int) -> list[LexEntry]:
        if self.corpus == "cc_cp":
            pool = [e for e in self.probe_entries if e.features.get("tense") == cell.first and e.lemma not in src.lemmas]
        else:
            pool = [e for e in self.probe_entries if e.lemma not in src.lemmas]
        if len(pool) < k:
            raise GenerationExhausted("not enough distinct verbs to extend the source")
        return rng.sample(pool, k)

    def _extend(self, src: _Source, probe: LexEntry, cell: AgreementCell) -> list[str]:
        if self.corpus == "cc_cp":
            return src.words + ["and", probe.surface, "."]
        return src.words + ["that", self.aux[cell.second].surface, probe.surface, "."]

    # questions ----------------------------------------------------------------
    def _question(self, words: list[str], role: str, gold: Tree) -> str:
        """Natural or relation-form question about ``role`` in ``words``."""
        rel = self.cfg.question_style == "relation"
        pos = pos_sequence(gold)
        if role == "ccomp":
            c = pos.index("C")
            v1 = _last(pos, "V", c)
            if rel:
                return f"What is the ccomp of {words[v1]} ?"
            subj = span_text(words, (0, v1 - 1))
            return f"What did {subj} {self._lemma(words[v1], v1)} ?"
        if role == "agent":
            v3 = _first(pos, "V", pos.index("Conj"))
            return f"Who is the agent of {words[v3]} ?" if rel else f"Who {words[v3]} ?"
        if role == "theme" and "C" in pos:
            c = pos.index("C")
            return f"What is the theme of {words[c + 2]} ?" if rel else f"What {words[c + 1]} {words[c + 2]} ?"
        if role == "theme":
            v = pos.index("V")
            if rel:
                return f"What is the theme of {words[v]} ?"
            return f"What did {span_text(words, (0, v - 1))} {self._lemma(words[v], v)} ?"
        raise ValueError(role)

    def _lemma(self, word: str, i: int) -> str:
        entries = [e for e in self.g.lexicon.lookup(word, initial=(i == 0)) if self.g.coarse(e.category) == "V"]
        return entries[0].lemma

    # instances ------------------------------------------------------------------
    def _instances(self, words: list[str], roles: Sequence[str], split: str, label: str,
                   combined: bool) -> list[QAInstance] | None:
        sentence = " ".join(words)
        cands, valid = candidate_trees(self.g, sentence)
        expected = 2 if combined else 1
        if len(cands) != expected or len(valid) != 1:
            raise AssertionError(f"{sentence!r}: {len(cands)} candidate trees, {len(valid)} valid")
        gold = coarsen(valid[0], self.g)
        site, spans = tree_reading(gold, self.corpus)
        cell = None
        if combined:
            feats = token_features(self.g, words[:-1], pos_sequence(gold))
            att = resolve_attachment(gold, feats, self.corpus)
            if att.site != site or any(att.spans[r] != spans[r] for r in roles):
                raise AssertionError(f"{sentence!r}: agreement rule disagrees with the valid tree")
            cell = cell_of(self.corpus, gold, feats)
        out = []
        for role in roles:
            q = self._question(words, role, gold)
            if (sentence, q) in self.seen:
                return None
            out.append(QAInstance(sentence, q, span_text(words, spans[role]), spans[role], label, split,
                                  cell.name if cell else None, site))
        for inst in out:
            self.seen.add((inst.context, inst.question))
        return out

    def _roles(self) -> tuple[str, ...]:
        return ("ccomp", "agent") if self.corpus == "cc_cp" else ("theme",)

    def combined(self, rng: random.Random, cell: AgreementCell, split: str, label: str,
                 expand: int) -> Iterator[QAInstance]:
        """Instances from sources of ``cell``; ``expand`` > 1 gives the generalization fan-out."""
        while True:
            src = self.sample_source(rng, cell)
            roles = self._roles()
            if expand == 1:
                probes = self._probes(rng, src, cell, 1)
                plan = [(probes[0], [rng.choice(roles)])]
            elif self.corpus == "cc_cp":
                probes = self._probes(rng, src, cell, expand // len(roles))
                plan = [(p, list(roles)) for p in probes]
            else:
                plan = [(p, list(roles)) for p in self._probes(rng, src, cell, expand)]
            batch: list[QAInstance] = []
            ok = True
            for probe, rs in plan:
                got = self._instances(self._extend(src, probe, cell), rs, split, label, combined=True)
                if got is None:
                    ok = False
                    break
                batch.extend(got)
            if ok:
                yield from batch

    def single_structure(self, rng: random.Random, split: str) -> Iterator[QAInstance]:
        """Alternating sentences with only one of the two structures."""
        turn = 0
        while True:
            if turn % 2 == 0:
                t = self.base.sample(rng, max_depth=1)
                if self.corpus == "rc_pp" and "obj_pp" not in t.rule_ids():
                    continue
            else:
                t = self.single.sample(rng, max_depth=1)
            words = [p.word or "" for p in t.preterminals()] + ["."]
            role = ("ccomp" if turn % 2 == 0 else "agent") if self.corpus == "cc_cp" else "theme"
            got = self._instances(words, [role], split, IN_DISTRIBUTION, combined=False)
            if got is not None:
                turn += 1
                yield from got

    def build(self) -> DatasetBundle[QAInstance]:
        n_train, n_dev, n_test, n_gen = self.cfg.counts
        splits: dict[str, list[QAInstance]] = {}
        for split, n in (("train", n_train), ("dev", n_dev), ("test", n_test)):
            rng = random.Random(f"{self.cfg.seed}:{self.corpus}:{split}")
            out: list[QAInstance] = []
            if self.cfg.layout == "cells":
                streams = {c: self.combined(rng, c, split, IN_DISTRIBUTION, 1) for c in self.train_cells}
                while len(out) < n:
                    out.append(next(streams[rng.choice(self.train_cells)]))
            else:
                stream = self.single_structure(rng, split)
                while len(out) < n:
                    out.append(next(stream))
            splits[split] = out
        rng = random.Random(f"{self.cfg.seed}:{self.corpus}:gen")
        stream = self.combined(rng, self.gen_cell, "gen", self.corpus, EXPANSION)
        splits["gen"] = [next(stream) for _ in range(n_gen)]
        return DatasetBundle(f"qa-{self.corpus}", splits)


def build_cc_cp(grammar: FeatureGrammar | None = None, counts: Sequence[int] = DEFAULT_COUNTS, seed: int = 0,
                gen_cell: str | Sequence[str] | None = None, **options) -> DatasetBundle[QAInstance]:
    cell = None if gen_cell is None else parse_cell("cc_cp", gen_cell).name
    cfg = DisambConfig(tuple(counts), seed, cell, **options)  # type: ignore[arg-type]
    return DisambBuilder("cc_cp", grammar, cfg).build()


def build_rc_pp(grammar: FeatureGrammar | None = None, counts: Sequence[int] = DEFAULT_COUNTS, seed: int = 0,
                gen_cell: str | Sequence[str] | None = None, **options) -> DatasetBundle[QAInstance]:
    cell = None if gen_cell is None else parse_cell("rc_pp", gen_cell).name
    cfg = DisambConfig(tuple(counts), seed, cell, **options)  # type: ignore[arg-type]
    return DisambBuilder("rc_pp", grammar, cfg).build()
