from collections import Counter

import pytest

from structgen.forge import (
    COGS_LEX,
    COGS_STRUCT,
    GEN_TYPES,
    DatasetBundle,
    DerivationError,
    GenClass,
    Instance,
    SynthConfig,
    TSVFormatError,
    cogs_split_paths,
    derive_pos,
    derive_srl,
    derive_syntax,
    derive_syntax_enriched_input,
    gen_type,
    load_cogs_tsv,
    make_probe_split,
    synthesize,
    write_cogs_tsv,
)
from structgen.forge.synth import TARGETS
from structgen.grammar import coarsen, delinearize, label_depth, parse_unique

BABY = "The baby on a tray in the house screamed ."


def bundle(**splits):
    return DatasetBundle("t", {k: [Instance(*row, split=k) for row in v] for k, v in splits.items()})


# -- types and bundles ---------------------------------------------------------------

def test_struct_and_lex_partition():
    struct = {t for t, g in GEN_TYPES.items() if g.cls is GenClass.STRUCT}
    assert struct == {"obj_pp_to_subj_pp", "cp_recursion", "pp_recursion", "cc_cp", "rc_pp"}
    assert len(COGS_LEX) == 18 and len(COGS_STRUCT) == 3
    assert gen_type("subj_to_obj_common").cls is GenClass.LEX
    assert gen_type("in_distribution") is None


def test_gen_items_need_a_type():
    with pytest.raises(ValueError):
        DatasetBundle("t", {"gen": [Instance("Emma slept .", "x", "in_distribution", "gen")]})


def test_tsv_round_trip(tmp_path, small_synth):
    paths = write_cogs_tsv(small_synth.bundle, tmp_path)
    back = load_cogs_tsv(paths)
    assert back.sizes == small_synth.bundle.sizes
    assert back["gen"] == small_synth.bundle["gen"]


def test_two_column_line_is_an_error(tmp_path):
    p = tmp_path / "train.tsv"
    p.write_text("Emma slept .\tsleep.agent ( x _ 1 , Emma )\tin_distribution\nbroken\tline\n")
    with pytest.raises(TSVFormatError) as err:
        load_cogs_tsv({"train": p})
    assert err.value.line == 2


def test_empty_file_warns_and_gives_empty_split(tmp_path):
    p = tmp_path / "dev.tsv"
    p.write_text("")
    with pytest.warns(UserWarning):
        b = load_cogs_tsv({"dev": p})
    assert b.sizes["dev"] == 0


def test_unknown_gen_label_rejected(tmp_path):
    p = tmp_path / "gen.tsv"
    p.write_text("Emma slept .\tsleep.agent ( x _ 1 , Emma )\tnot_a_type\n")
    with pytest.raises(TSVFormatError):
        load_cogs_tsv({"gen": p})


def test_split_paths_convention(tmp_path):
    assert {k: v.name for k, v in cogs_split_paths(tmp_path).items()} == {
        "train": "train.tsv", "dev": "dev.tsv", "test": "test.tsv", "gen": "gen.tsv"}


# -- derivations ----------------------------------------------------------------------

def test_syntax_of_example_sentence(cogs):
    b = derive_syntax(bundle(train=[(BABY, "unused", "in_distribution")]), cogs)
    assert b["train"][0].target.startswith("( S ( NP ( Det The ) ( N baby ) ( PP ( P on )")
    assert b["train"][0].source == BABY


def test_primitive_linearizes_to_one_node(cogs):
    b = derive_syntax(bundle(train=[("Paula", "Paula", "in_distribution")]), cogs)
    assert b["train"][0].target == "( N Paula )"


def test_pos_of_example_sentence(cogs):
    b = derive_pos(bundle(train=[(BABY, "unused", "in_distribution")]), cogs)
    assert b["train"][0].target == "Det N P Det N P Det N V"


def test_srl_of_emma_slept(cogs):
    b = derive_srl(bundle(train=[("Emma slept .", "sleep.agent ( x _ 1 , Emma )", "in_distribution")]), cogs)
    assert b["train"][0].target == "1 Agent 0"


def test_srl_of_repeated_name_uses_the_parse(cogs):
    s = "Emma gave Emma a cake ."
    lf = ("give.agent ( x _ 1 , Emma ) AND give.recipient ( x _ 1 , Emma ) AND give.theme ( x _ 1 , x _ 4 ) "
          "AND cake ( x _ 4 )")
    b = derive_srl(bundle(train=[(s, lf, "in_distribution")]), cogs)
    assert b["train"][0].target == "1 Agent 0 ; 1 Recipient 2 ; 1 Theme 4 ; 4 IndefN 4"


def test_syntax_enriched_input(cogs):
    b = derive_syntax_enriched_input(bundle(train=[("A rose rolled .", "lf", "in_distribution")]), cogs)
    assert "( NP ( Det A ) ( N rose ) )" in b["train"][0].source
    assert b["train"][0].target == "lf"


def test_unparsable_sentence_carries_context(cogs):
    with pytest.raises(DerivationError) as err:
        derive_pos(bundle(train=[("Emma slept .", "x", "in_distribution"),
                                 ("slept Emma .", "x", "in_distribution")]), cogs)
    assert err.value.split == "train" and err.value.index == 1


def test_derivations_preserve_sizes_and_lengths(cogs, small_synth):
    cache = small_synth.parse_cache()
    src = small_synth.bundle
    pos = derive_pos(src, cogs, cache)
    syn = derive_syntax(src, cogs, cache)
    enriched = derive_syntax_enriched_input(src, cogs, cache)
    assert pos.sizes == syn.sizes == enriched.sizes == src.sizes
    for (split, items), (_, src_items) in zip(pos.items(), src.items()):
        for p, s in zip(items, src_items):
            words = [w for w in s.source.split() if w != "."]
            assert len(p.target.split()) == len(words)
            assert p.label == s.label and p.split == split
    for e, s in zip(enriched["gen"], src["gen"]):
        assert " ".join(delinearize(e.source).tokens) == s.source.rstrip(" .")


def test_srl_without_grammar_needs_locatable_names(small_synth):
    with pytest.raises(DerivationError, match="need a grammar"):
        derive_srl(small_synth.bundle)


def test_srl_edge_count_matches_atoms(cogs, small_synth):
    from structgen.logical_form import parse_lf
    srl = derive_srl(small_synth.bundle, cogs, small_synth.parse_cache())
    for d, s in zip(srl["test"], small_synth.bundle["test"]):
        lf = parse_lf(s.target)
        edges = [e for e in d.target.split(" ; ") if e]
        binary = len([a for a in lf.body if not a.is_unary])
        nouns = len([a for a in lf.atoms if a.is_unary])
        assert len(edges) == binary + nouns


# -- probe split -----------------------------------------------------------------------

def _gen_bundle(n, labels=("pp_recursion", "cp_recursion", "obj_pp_to_subj_pp")):
    rows = [(f"s{i}", f"t{i}", labels[i % len(labels)]) for i in range(n)]
    return bundle(train=[("a", "b", "in_distribution")], gen=rows)


def test_probe_sizes_for_full_gen_set():
    p = make_probe_split(_gen_bundle(21000))
    assert p.sizes == {"train": 1 + 12600, "dev": 2100, "test": 0, "gen": 6300}
    moved = p["train"][1:]
    assert all(x.split == "train" for x in moved) and all(x.label != "in_distribution" for x in moved)


def test_probe_all_to_train():
    p = make_probe_split(_gen_bundle(30), (1, 0, 0))
    assert p.sizes["gen"] == 0 and p.sizes["train"] == 31


def test_probe_is_deterministic_and_seeded():
    b = _gen_bundle(300)
    assert make_probe_split(b, seed=4) == make_probe_split(b, seed=4)
    assert make_probe_split(b, seed=4)["gen"] != make_probe_split(b, seed=5)["gen"]


def test_probe_stratified_keeps_type_shares():
    p = make_probe_split(_gen_bundle(300), stratified=True)
    assert Counter(x.label for x in p["gen"]) == {"pp_recursion": 30, "cp_recursion": 30, "obj_pp_to_subj_pp": 30}


def test_probe_bad_fractions():
    with pytest.raises(ValueError):
        make_probe_split(_gen_bundle(10), (0.5, 0.5, 0.5))


# -- synthesis -------------------------------------------------------------------------

def test_synth_counts(small_synth):
    assert small_synth.bundle.sizes == {"train": 1200, "dev": 60, "test": 60, "gen": 6 * 21}
    assert Counter(x.label for x in small_synth.bundle["gen"]) == {t: 6 for t in COGS_LEX + COGS_STRUCT}


def test_synth_is_deterministic(cogs):
    cfg = SynthConfig(seed=8, train=200, dev=10, test=10, gen_per_type=2)
    assert synthesize(cfg, cogs).bundle == synthesize(cfg, cogs).bundle


def test_train_respects_depth_caps_and_heldout_rules(cogs, small_synth):
    cache = small_synth.parse_cache()
    for inst in small_synth.bundle["train"]:
        if " " not in inst.source:
            continue
        tree = cache[inst.source]
        coarse = coarsen(tree, cogs)
        assert label_depth(coarse, "PP") <= 2 and label_depth(coarse, "CP") <= 2
        assert not set(tree.rule_ids()) & cogs.heldout


def test_structural_gen_depths(cogs, small_synth):
    cache = small_synth.parse_cache()
    for inst in small_synth.bundle["gen"]:
        if inst.label in ("pp_recursion", "cp_recursion"):
            label = "PP" if inst.label == "pp_recursion" else "CP"
            assert 3 <= label_depth(coarsen(cache[inst.source], cogs), label) <= 12
        if inst.label == "obj_pp_to_subj_pp":
            assert set(cache[inst.source].rule_ids()) & cogs.heldout


def test_lexical_targets_stay_out_of_train_contexts(small_synth):
    """Each target word occurs in train only as its single exposure (or primitive)."""
    train_sources = [x.source for x in small_synth.bundle["train"]]
    for word in set(TARGETS.values()):
        hits = [s for s in train_sources if word in s.split()]
        assert 1 <= len(hits) <= 2, word


def test_parse_cache_matches_parser(cogs, small_synth):
    cache = small_synth.parse_cache()
    for inst in small_synth.bundle["dev"][:20]:
        assert parse_unique(cogs, inst.source) == cache[inst.source]
