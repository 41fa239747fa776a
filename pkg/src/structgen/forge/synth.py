"""Synthesize a COGS-like corpus from the shipped grammar.

Training sentences are drawn with PP and CP depth capped at 2, without the
held-out subject-PP rules and without any generalization target word.  Each
lexical target appears once in training in its exposure context (or only as
a one-word primitive); generalization sentences place it in a new context by
swapping one leaf of a sampled training-style derivation.  Structural types
are sampled directly: held-out subject PPs, and CP or PP recursion at depths
beyond the training cap.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..compose import compose_lf
from ..grammar import Derivation, FeatureGrammar, SamplingError, get_sampler, sentence_of, shipped_grammar
from ..grammar.trees import leaf, replace_leaf
from ..logical_form import serialize_lf
from .bundle import COGS_TYPES, IN_DISTRIBUTION, DatasetBundle, Instance

# generalization target words; each is excluded from ordinary sampling
TARGETS = {
    "subj_to_obj_common": "hedgehog",
    "subj_to_obj_proper": "Lina",
    "obj_to_subj_common": "cockroach",
    "obj_to_subj_proper": "Charlie",
    "prim_to_subj_common": "shark",
    "prim_to_subj_proper": "Paula",
    "prim_to_obj_common": "shark",
    "prim_to_obj_proper": "Paula",
    "prim_to_inf_arg": "crawl",
    "obj_omitted_transitive_to_transitive": "baked",
    "unacc_to_transitive": "shattered",
    "double_object_dative_to_pp_dative": "teleported",
    "pp_dative_to_double_object_dative": "shipped",
    "active_to_passive": "blessed",
    "passive_to_active": "squeezed",
    "only_seen_as_transitive_subj_as_unacc_subj": "cobra",
    "only_seen_as_unacc_subj_as_unerg_subj": "hippo",
    "only_seen_as_unacc_subj_as_obj_omitted_transitive_subj": "hippo",
}


@dataclass(frozen=True)
class Slot:
    """A leaf together with its argument position and governing frame.

    ``position`` is one of subj, unacc_subj, obj, by, nmod, verb.  ``frame``
    is the semantics tag of the rule that introduces the governing verb and
    ``verb`` that verb's category.
    """

    index: int
    category: str
    position: str
    frame: str | None
    verb: str | None


def _heads(tree: Derivation, grammar: FeatureGrammar) -> tuple[dict[int, int], list[Derivation]]:
    """Head leaf index per node (keyed by id) and the leaves in order."""
    heads: dict[int, int] = {}
    leaves: list[Derivation] = []

    def walk(node: Derivation) -> int:
        if node.is_preterminal:
            leaves.append(node)
            heads[id(node)] = len(leaves) - 1
            return heads[id(node)]
        kid_heads = [walk(c) for c in node.children]
        rule = grammar.rule_by_id[node.rule_id or ""]
        h = kid_heads[0]
        for op in grammar.recipes.get(rule.sem or "", ()):
            if op.op == "head":
                h = kid_heads[int(op.arg)]
                break
        heads[id(node)] = h
        return h

    walk(tree)
    return heads, leaves


def argument_slots(tree: Derivation, grammar: FeatureGrammar) -> list[Slot]:
    heads, leaves = _heads(tree, grammar)
    parent_sem: dict[int, str] = {}
    out: list[Slot] = []

    def sem(node: Derivation) -> str:
        return grammar.rule_by_id[node.rule_id or ""].sem or ""

    def visit(node: Derivation) -> None:
        if node.is_preterminal:
            return
        tag = sem(node)
        for c in node.children:
            if c.is_preterminal:
                parent_sem[heads[id(c)]] = tag
        for c in node.children:
            visit(c)

    visit(tree)

    def frame(verb_idx: int) -> tuple[str | None, str | None]:
        return parent_sem.get(verb_idx), leaves[verb_idx].label

    def nominal(i: int) -> bool:
        return grammar.lexical_kind(leaves[i].label) in ("noun", "name")

    def record(node: Derivation) -> None:
        if node.is_preterminal:
            return
        tag = sem(node)
        ops = grammar.recipes.get(tag, ())
        verb_idx = heads[id(node)]
        for op in ops:
            if op.op == "fill":
                subj = heads[id(node.children[int(op.arg)])]
                v = heads[id(node)]
                if nominal(subj):
                    out.append(Slot(subj, leaves[subj].label, "subj", *frame(v)))
            elif op.op == "role":
                _, _, idx = op.arg.partition(":")
                name = op.arg.split(":")[0]
                arg = heads[id(node.children[int(idx)])]
                if not nominal(arg):
                    continue
                if tag == "unacc":
                    pos = "unacc_subj"
                elif name == "agent":
                    pos = "by"
                else:
                    pos = "obj"
                out.append(Slot(arg, leaves[arg].label, pos, *frame(verb_idx)))
            elif op.op == "nmod":
                arg = heads[id(node.children[int(op.arg)])]
                out.append(Slot(arg, leaves[arg].label, "nmod", None, None))
        for c in node.children:
            record(c)

    record(tree)
    for i, lf in enumerate(leaves):
        if grammar.lexical_kind(lf.label) == "verb":
            out.append(Slot(i, lf.label, "verb", parent_sem.get(i), lf.label))
    return sorted(out, key=lambda s: (s.index, s.position))


Pred = Callable[[Slot], bool]


def _noun(position: str, prefix: str, frame: str | None = None, verb: str | None = None) -> Pred:
    def p(s: Slot) -> bool:
        return (s.position == position and s.category.startswith(prefix)
                and (frame is None or s.frame == frame) and (verb is None or s.verb == verb))
    return p


def _verb(category: str, frame: str | None = None) -> Pred:
    return lambda s: s.position == "verb" and s.category == category and (frame is None or s.frame == frame)


ANIM = "N_common_animate_"
PROP = "N_prop_"
PRIMITIVE = None  # exposure as a one-word primitive

# type -> (generalization slot, exposure slot or PRIMITIVE)
LEXICAL_RULES: dict[str, tuple[Pred, Pred | None]] = {
    "subj_to_obj_common": (_noun("obj", ANIM), _noun("subj", ANIM)),
    "subj_to_obj_proper": (_noun("obj", PROP), _noun("subj", PROP)),
    "obj_to_subj_common": (_noun("subj", ANIM), _noun("obj", ANIM)),
    "obj_to_subj_proper": (_noun("subj", PROP), _noun("obj", PROP)),
    "prim_to_subj_common": (_noun("subj", ANIM), PRIMITIVE),
    "prim_to_subj_proper": (_noun("subj", PROP), PRIMITIVE),
    "prim_to_obj_common": (_noun("obj", ANIM), PRIMITIVE),
    "prim_to_obj_proper": (_noun("obj", PROP), PRIMITIVE),
    "prim_to_inf_arg": (_verb("V_inf"), PRIMITIVE),
    "obj_omitted_transitive_to_transitive": (_verb("V_trans_omissible", "trans"), _verb("V_trans_omissible", "intrans")),
    "unacc_to_transitive": (_verb("V_unacc", "trans"), _verb("V_unacc", "unacc")),
    "double_object_dative_to_pp_dative": (_verb("V_dat", "dat_pp"), _verb("V_dat", "dat_do")),
    "pp_dative_to_double_object_dative": (_verb("V_dat", "dat_do"), _verb("V_dat", "dat_pp")),
    "active_to_passive": (_verb("V_trans_not_omissible_pp"), _verb("V_trans_not_omissible")),
    "passive_to_active": (_verb("V_trans_not_omissible"), _verb("V_trans_not_omissible_pp")),
    "only_seen_as_transitive_subj_as_unacc_subj": (_noun("unacc_subj", ANIM), _noun("subj", ANIM, frame="trans")),
    "only_seen_as_unacc_subj_as_unerg_subj": (_noun("subj", ANIM, "intrans", "V_unerg"), _noun("unacc_subj", ANIM)),
    "only_seen_as_unacc_subj_as_obj_omitted_transitive_subj": (
        _noun("subj", ANIM, "intrans", "V_trans_omissible"), _noun("unacc_subj", ANIM)),
}

PRIMITIVE_CATEGORIES = ("N_prim", "N_prop_prim", "V_prim")


@dataclass(frozen=True)
class SynthConfig:
    seed: int = 0
    train: int = 24155
    dev: int = 3000
    test: int = 3000
    gen_per_type: int = 1000
    train_depth: int = 2
    gen_depth: tuple[int, int] = (3, 12)
    # one-word primitives of non-target words added to training
    extra_primitives: int = 40
    lf_style: str = "compact"
    types: tuple[str, ...] = COGS_TYPES
    attempts: int = 5000

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.train, self.dev, self.test, self.gen_per_type * len(self.types))


@dataclass
class SynthResult:
    bundle: DatasetBundle[Instance]
    trees: dict[str, list[Derivation]] = field(default_factory=dict)

    def parse_cache(self) -> dict[str, Derivation]:
        return {sentence_of(t, period=not t.is_preterminal): t
                for items in self.trees.values() for t in items}


class CorpusSynthesizer:
    def __init__(self, grammar: FeatureGrammar | None = None, config: SynthConfig = SynthConfig()):
        self.g = grammar or shipped_grammar("cogs")
        self.cfg = config
        self.targets = sorted(set(TARGETS.values()))
        self.base = get_sampler(self.g, exclude_tokens=self.targets)
        self.with_heldout = get_sampler(self.g, exclude_tokens=self.targets, include_heldout=True)
        self.caps = {"PP": config.train_depth, "CP": config.train_depth}

    def _rng(self, *parts: object) -> random.Random:
        return random.Random(":".join(str(p) for p in (self.cfg.seed, *parts)))

    def _instance(self, tree: Derivation, label: str, split: str) -> Instance:
        src = sentence_of(tree, period=not tree.is_preterminal)
        return Instance(src, serialize_lf(compose_lf(tree, self.g), self.cfg.lf_style), label, split)

    def sample_base(self, rng: random.Random) -> Derivation:
        return self.base.sample(rng, max_depth=self.cfg.train_depth, caps=self.caps)

    def _entry(self, category: str, surface: str):
        for e in self.g.lexicon.by_category.get(category, ()):
            if e.surface == surface:
                return e
        raise KeyError(f"{surface!r} has no {category} entry")

    def place(self, rng: random.Random, pred: Pred, word: str) -> Derivation:
        """Sample until some slot satisfies ``pred`` and put ``word`` there."""
        for _ in range(self.cfg.attempts):
            tree = self.sample_base(rng)
            slots = [s for s in argument_slots(tree, self.g) if pred(s)]
            if slots:
                s = rng.choice(slots)
                return replace_leaf(tree, s.index, self._entry(s.category, word))
        raise SamplingError(f"no slot for {word!r} after {self.cfg.attempts} samples")

    def structural(self, rng: random.Random, kind: str) -> Derivation:
        lo, hi = self.cfg.gen_depth
        if kind == "obj_pp_to_subj_pp":
            heldout = set(self.g.heldout)
            # single-clause sentences: the subject is everything before the verb
            caps = {"PP": self.cfg.train_depth, "CP": 0}
            for _ in range(self.cfg.attempts):
                t = self.with_heldout.sample(rng, max_depth=self.cfg.train_depth, caps=caps)
                if heldout & set(t.rule_ids()):
                    return t
            raise SamplingError("no subject PP sampled")
        depth = rng.randint(lo, hi)
        if kind == "cp_recursion":
            return self.base.sample(rng, max_depth=depth, caps={"PP": self.cfg.train_depth}, require=("CP", depth))
        if kind == "pp_recursion":
            # single-clause sentences keep the type about PP depth alone
            return self.base.sample(rng, max_depth=depth, caps={"CP": 0}, require=("PP", depth))
        raise ValueError(f"unknown structural type {kind!r}")

    def generalization(self, kind: str, n: int) -> list[Derivation]:
        rng = self._rng("gen", kind)
        if kind in LEXICAL_RULES:
            pred = LEXICAL_RULES[kind][0]
            return [self.place(rng, pred, TARGETS[kind]) for _ in range(n)]
        return [self.structural(rng, kind) for _ in range(n)]

    def exposures(self) -> list[Derivation]:
        out = []
        done: set[str] = set()
        rng = self._rng("exposure")
        for kind in self.cfg.types:
            if kind not in LEXICAL_RULES:
                continue
            word = TARGETS[kind]
            if word in done:
                continue
            done.add(word)
            exp = LEXICAL_RULES[kind][1]
            if exp is None:
                out.append(self.primitive(word))
            else:
                out.append(self.place(rng, exp, word))
        return out

    def primitive(self, word: str) -> Derivation:
        for cat in PRIMITIVE_CATEGORIES:
            for e in self.g.lexicon.by_category.get(cat, ()):
                if e.surface == word:
                    return leaf(e)
        raise KeyError(f"{word!r} is not a primitive")

    def extra_primitives(self) -> list[Derivation]:
        pool = sorted({e.surface for c in PRIMITIVE_CATEGORIES for e in self.g.lexicon.by_category.get(c, ())}
                      - set(self.targets))
        rng = self._rng("primitives")
        chosen = rng.sample(pool, min(self.cfg.extra_primitives, len(pool)))
        return [self.primitive(w) for w in chosen]

    def in_distribution(self, split: str, n: int) -> list[Derivation]:
        rng = self._rng(split)
        return [self.sample_base(rng) for _ in range(n)]

    def run(self) -> SynthResult:
        cfg = self.cfg
        extra = self.exposures() + self.extra_primitives()
        if len(extra) > cfg.train:
            raise ValueError(f"train size {cfg.train} is smaller than the {len(extra)} exposure items")
        train = self.in_distribution("train", cfg.train - len(extra)) + extra
        self._rng("train-order").shuffle(train)
        trees = {
            "train": train,
            "dev": self.in_distribution("dev", cfg.dev),
            "test": self.in_distribution("test", cfg.test),
        }
        splits: dict[str, list[Instance]] = {
            s: [self._instance(t, IN_DISTRIBUTION, s) for t in ts] for s, ts in trees.items()
        }
        gen_trees: list[Derivation] = []
        gen: list[Instance] = []
        for kind in cfg.types:
            for t in self.generalization(kind, cfg.gen_per_type):
                gen_trees.append(t)
                gen.append(self._instance(t, kind, "gen"))
        trees["gen"] = gen_trees
        splits["gen"] = gen
        return SynthResult(DatasetBundle("cogs-synth", splits), trees)


def synthesize(config: SynthConfig = SynthConfig(), grammar: FeatureGrammar | None = None) -> SynthResult:
    return CorpusSynthesizer(grammar, config).run()


def target_words() -> Iterable[str]:
    return sorted(set(TARGETS.values()))
