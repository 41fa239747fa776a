"""Regenerate the lexicon TSVs shipped in src/structgen/data.

    python scripts/build_lexicons.py

The output is deterministic: rows are written in a fixed order.
"""
from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
import cogs_vocab as V  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "structgen" / "data"

T = V.GEN_TARGETS
TARGET_NOUNS = [T["subj_only_noun"], T["prim_noun"], T["obj_only_noun"],
                T["trans_subj_only_noun"], T["unacc_subj_only_noun"]]
TARGET_NAMES = [T["subj_only_name"], T["prim_name"], T["obj_only_name"]]

# target verbs: (past, participle, lemma, categories)
TARGET_VERBS = [
    ("baked", "baked", "bake", "trans_omissible"),
    ("shattered", "shattered", "shatter", "unacc"),
    ("blessed", "blessed", "bless", "trans_not_omissible"),
    ("squeezed", "squeezed", "squeeze", "trans_not_omissible"),
    ("teleported", "teleported", "teleport", "dat"),
    ("shipped", "shipped", "ship", "dat"),
]

FUNCTION_WORDS = [
    ("the", "Det", "-", "the"),
    ("a", "Det", "-", "a"),
    ("that", "C", "-", "that"),
    ("was", "AUX", "-", "be"),
    ("by", "BY", "-", "by"),
    ("to", "P_iobj", "-", "to"),
    ("on", "P_on", "-", "on"),
    ("in", "P_in", "-", "in"),
    ("beside", "P_beside", "-", "beside"),
    ("to", "INF", "-", "to"),
]

IRREGULAR_PLURAL = {
    "knife": "knives", "leaf": "leaves", "shelf": "shelves", "wolf": "wolves",
    "mouse": "mice", "child": "children", "goose": "geese", "potato": "potatoes",
}
# mass or invariant nouns: their plural would be ambiguous or odd
NO_PLURAL = {
    "chalk", "glue", "soap", "wine", "beer", "gravel", "china", "soup", "storage",
    "sweetcorn", "yogurt", "liver", "sheep", "fish", "deer", "moose", "corpse",
}
ANIMATE_EXTRA = {
    "lion", "duck", "bear", "surgeon", "giant", "beast", "whale", "gardner", "fox",
    "trainee", "dragon", "monk", "headmaster", "philosopher", "foreigner", "worm",
    "chemist", "sailor", "genius", "baron", "murderer", "warrior", "monkey", "broker",
    "tiger", "dog", "cat", "bat",
}


def plural(noun: str) -> str:
    if noun in IRREGULAR_PLURAL:
        return IRREGULAR_PLURAL[noun]
    if noun.endswith(("s", "sh", "ch", "x", "z")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def third_singular(lemma: str) -> str:
    if lemma.endswith(("s", "sh", "ch", "x", "z", "o")):
        return lemma + "es"
    if lemma.endswith("y") and lemma[-2] not in "aeiou":
        return lemma[:-1] + "ies"
    return lemma + "s"


def _rows(words, category, lemma_of=lambda w: w, feats="-"):
    return [(w, category, feats, lemma_of(w)) for w in words]


def _lemma(w: str) -> str:
    return V.verbs_lemmas[w]


def cogs_rows():
    rows = list(FUNCTION_WORDS)
    animate = V.animate_nouns + TARGET_NOUNS
    names = V.proper_nouns + TARGET_NAMES
    for role in ("dobj", "iobj", "nsubj", "nsubjpass"):
        rows += _rows(animate, f"N_common_animate_{role}")
        rows += _rows(names, f"N_prop_{role}")
    for role in ("dobj", "nsubjpass"):
        rows += _rows(V.inanimate_nouns, f"N_common_inanimate_{role}")
    rows += _rows(V.on_nouns, "N_on")
    # "bowl" also occurs after "in" in a published COGS example
    rows += _rows(V.in_nouns + ["bowl"], "N_in")
    rows += _rows(V.beside_nouns, "N_beside")

    verb_sets = {
        "trans_omissible": (V.V_trans_omissible, V.V_trans_omissible_pp),
        "trans_not_omissible": (V.V_trans_not_omissible, V.V_trans_not_omissible_pp),
        "unacc": (V.V_unacc, V.V_unacc_pp),
        "dat": (V.V_dat, V.V_dat_pp),
    }
    for name, (past, pp) in verb_sets.items():
        extra = [t for t in TARGET_VERBS if t[3] == name]
        rows += _rows(past, f"V_{name}", _lemma)
        rows += [(p, f"V_{name}", "-", lem) for p, _, lem, _ in extra]
        rows += _rows(pp, f"V_{name}_pp", _lemma)
        rows += [(q, f"V_{name}_pp", "-", lem) for _, q, lem, _ in extra]
    rows += _rows(V.V_cp_taking, "V_cp_taking", _lemma)
    rows += _rows(V.V_inf_taking, "V_inf_taking", _lemma)
    rows += _rows(V.V_unerg, "V_unerg", _lemma)
    rows += _rows(V.V_inf + [T["prim_verb"]], "V_inf")

    # single-word primitive inputs
    rows += _rows(V.animate_nouns + V.inanimate_nouns + TARGET_NOUNS, "N_prim")
    rows += _rows(names, "N_prop_prim")
    rows += _rows(V.V_inf + [T["prim_verb"]], "V_prim")
    return rows


def _tensed(words, category, rows):
    seen = set()
    for w in words:
        lem = _lemma(w)
        if lem in seen:
            continue
        seen.add(lem)
        rows.append((w, category, "tense=past", lem))
        rows.append((third_singular(lem), category, "tense=pres", lem))


def cc_cp_rows():
    rows = [
        ("the", "Det", "-", "the"), ("a", "Det", "-", "a"), ("that", "C", "-", "that"),
        ("and", "CONJ", "-", "and"), ("to", "P_iobj", "-", "to"),
        ("on", "P_on", "-", "on"), ("in", "P_in", "-", "in"), ("beside", "P_beside", "-", "beside"),
    ]
    rows += _rows(V.animate_nouns, "N_anim")
    rows += _rows(V.inanimate_nouns, "N_inanim")
    rows += _rows(V.proper_nouns, "N_prop")
    rows += _rows(V.on_nouns, "N_on")
    rows += _rows(V.in_nouns, "N_in")
    rows += _rows(V.beside_nouns, "N_beside")
    _tensed(V.V_cp_taking, "V_cp", rows)
    _tensed(V.V_trans_omissible, "V_trans_omissible", rows)
    _tensed(V.V_trans_not_omissible, "V_trans_not_omissible", rows)
    _tensed(V.V_unacc, "V_unacc", rows)
    _tensed(V.V_unerg, "V_unerg", rows)
    _tensed(V.V_dat, "V_dat", rows)
    return rows


def rc_pp_rows():
    rows = [
        ("the", "Det", "-", "the"), ("a", "Det", "number=sg", "a"),
        ("that", "C", "-", "that"), ("was", "AUX", "number=sg", "be"),
        ("were", "AUX", "number=pl", "be"),
        ("on", "P", "-", "on"), ("in", "P", "-", "in"), ("beside", "P", "-", "beside"),
    ]
    rows += _rows(V.animate_nouns, "N_subj")
    rows += _rows(V.proper_nouns, "N_prop")
    animate = set(V.animate_nouns) | ANIMATE_EXTRA
    nouns = []
    for w in V.inanimate_nouns + V.on_nouns + V.in_nouns + V.beside_nouns:
        if w in animate or w in NO_PLURAL or w in nouns or w == "TV":
            continue
        nouns.append(w)
    plurals = {plural(w) for w in nouns}
    nouns = [w for w in nouns if w not in plurals]
    for w in nouns:
        rows.append((w, "N", "number=sg", w))
        rows.append((plural(w), "N", "number=pl", w))
    rows += _rows(V.V_trans_omissible + V.V_trans_not_omissible, "V_trans", _lemma)
    rows += _rows(V.V_trans_omissible_pp + V.V_trans_not_omissible_pp, "V_pp", _lemma)
    return rows


def write(rows, path: Path) -> None:
    seen = set()
    lines = []
    for row in rows:
        if row in seen:
            continue
        seen.add(row)
        lines.append("\t".join(row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{path.name}: {len(lines)} entries")


def main() -> None:
    write(cogs_rows(), DATA / "cogs.lex.tsv")
    write(cc_cp_rows(), DATA / "cc_cp.lex.tsv")
    write(rc_pp_rows(), DATA / "rc_pp.lex.tsv")


if __name__ == "__main__":
    main()
