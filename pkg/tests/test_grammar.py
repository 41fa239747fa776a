import random

import pytest

from structgen.grammar import (
    GrammarError,
    ParseError,
    Tree,
    TreeSyntaxError,
    UnknownTokenError,
    check_derivation,
    coarsen,
    delinearize,
    get_sampler,
    is_valid,
    label_depth,
    linearize,
    load_grammar,
    parse,
    parse_unique,
    pos_sequence,
    sentence_of,
)

BABY = "The baby on a tray in the house screamed ."
BABY_TREE = ("( S ( NP ( Det The ) ( N baby ) ( PP ( P on ) ( NP ( Det a ) ( N tray ) ( PP ( P in ) "
             "( NP ( Det the ) ( N house ) ) ) ) ) ) ( VP ( V screamed ) ) )")

TOY = """S -> NP VP
VP -> V NP
VP -> V NP PP
NP -> NP PP
NP -> N
PP -> P NP
"""
TOY_LEX = "I\tN\t-\tI\nsaw\tV\t-\tsee\nman\tN\t-\tman\nwith\tP\t-\twith\ntelescope\tN\t-\ttelescope\n"


# -- loading -----------------------------------------------------------------------

def test_minimal_grammar_has_one_rule():
    g = load_grammar("S -> NP VP\n", "a\tNP\t-\ta\nb\tVP\t-\tb\n")
    assert len(g.rules) == 1
    assert g.start == "S"


def test_undeclared_symbol_is_named():
    with pytest.raises(GrammarError, match="Q"):
        load_grammar("S -> NP Q\n", "a\tNP\t-\ta\n")


def test_lexicon_needs_four_columns():
    with pytest.raises(GrammarError, match="4 tab-separated"):
        load_grammar("S -> NP VP\n", "a\tNP\ta\n")


def test_auto_rule_ids():
    g = load_grammar(TOY, TOY_LEX)
    assert [r.rule_id for r in g.rules][:3] == ["S.0", "VP.0", "VP.1"]


def test_cc_cp_lexicon_has_both_tenses(cc_cp_grammar):
    tenses = {e.features.get("tense") for e in cc_cp_grammar.lexicon.by_category["V_cp"]}
    assert tenses == {"past", "pres"}
    lemmas = {e.lemma: set() for e in cc_cp_grammar.lexicon.by_category["V_cp"]}
    for e in cc_cp_grammar.lexicon.by_category["V_cp"]:
        lemmas[e.lemma].add(e.features["tense"])
    assert all(v == {"past", "pres"} for v in lemmas.values())


# -- sampling ------------------------------------------------------------------------

def test_sampling_is_deterministic(cogs):
    s = get_sampler(cogs)
    a = [sentence_of(s.sample(random.Random(11), max_depth=3)) for _ in range(1)]
    b = [sentence_of(s.sample(random.Random(11), max_depth=3)) for _ in range(1)]
    assert a == b
    r1, r2 = random.Random(5), random.Random(5)
    assert [sentence_of(s.sample(r1, max_depth=2)) for _ in range(30)] == \
           [sentence_of(s.sample(r2, max_depth=2)) for _ in range(30)]


def test_rc_pp_depth_cap_one(rc_pp_grammar):
    s = get_sampler(rc_pp_grammar, include_heldout=True)
    rng = random.Random(2)
    for _ in range(200):
        t = coarsen(s.sample(rng, max_depth=1), rc_pp_grammar)
        assert label_depth(t, "PP") <= 1
        assert label_depth(t, "RC") <= 1


def _tenses_around_c(tree):
    leaves = list(tree.preterminals())
    c = next(i for i, p in enumerate(leaves) if p.label == "C")
    main = [p for p in leaves[:c] if p.label.startswith("V_")][-1]
    emb = next(p for p in leaves[c + 1:] if p.label.startswith("V_"))
    return main.features["tense"], emb.features["tense"]


def test_cc_cp_main_and_complement_tense_differ(cc_cp_grammar):
    s = get_sampler(cc_cp_grammar)
    rng = random.Random(4)
    for _ in range(300):
        t = s.sample(rng, max_depth=3)
        if any(p.label == "C" for p in t.preterminals()):
            main, emb = _tenses_around_c(t)
            assert main != emb


def test_required_depth_is_met(cogs):
    s = get_sampler(cogs)
    rng = random.Random(9)
    for k in (3, 5, 8):
        t = s.sample(rng, max_depth=k, caps={"CP": 0}, require=("PP", k))
        assert label_depth(coarsen(t, cogs), "PP") == k


def test_sampled_trees_validate(cogs):
    s = get_sampler(cogs, include_heldout=True)
    rng = random.Random(1)
    for _ in range(50):
        t = s.sample(rng, max_depth=3)
        assert check_derivation(t, cogs) == []


# -- parsing ----------------------------------------------------------------------

def test_example_sentence_has_unique_tree(cogs):
    assert len(parse(cogs, BABY)) == 1


def test_empty_input_is_an_error(cogs):
    with pytest.raises(ParseError):
        parse(cogs, "")


def test_unknown_token_reports_position(cogs):
    with pytest.raises(UnknownTokenError) as err:
        parse(cogs, "Emma zorbled .")
    assert err.value.position == 1


def test_toy_pp_attachment_ambiguity():
    g = load_grammar(TOY, TOY_LEX)
    trees = parse(g, "I saw man with telescope")
    assert len(trees) == 2
    assert len({linearize(coarsen(t, g)) for t in trees}) == 2


def test_featureless_parse_exposes_agreement_alternatives(rc_pp_grammar):
    s = "Emma ate the boxes in the house that was sketched ."
    assert len(parse(rc_pp_grammar, s)) == 1
    both = parse(rc_pp_grammar, s, use_features=False)
    assert len(both) == 2
    assert sum(is_valid(t, rc_pp_grammar) for t in both) == 1


# -- trees --------------------------------------------------------------------------

def test_coarse_linearization_of_example_sentence(cogs):
    assert linearize(coarsen(parse_unique(cogs, BABY), cogs)) == BABY_TREE


def test_pos_sequence_of_example_sentence(cogs):
    assert pos_sequence(parse_unique(cogs, BABY), cogs) == "Det N P Det N P Det N V".split()


def test_fine_label_coarsens(cogs):
    assert cogs.coarse("NP_animate_dobj_noPP") == "NP"
    assert cogs.coarse("V_trans_omissible_pp") == "V"


def test_coarsen_collapses_unary_chain(cogs):
    t = delinearize("( S ( NP ( NP ( Det a ) ( N b ) ) ) ( VP ( V c ) ) )")
    assert linearize(coarsen(t, cogs)) == "( S ( NP ( Det a ) ( N b ) ) ( VP ( V c ) ) )"


def test_coarsen_is_idempotent(cogs):
    once = coarsen(parse_unique(cogs, BABY), cogs)
    assert coarsen(once, cogs) == once


def test_single_leaf_linearization():
    assert linearize(Tree("Det", ("a",))) == "( Det a )"


@pytest.mark.parametrize("bad", ["( S", "S )", "( )", "( S ( NP a ) ) )", "( S a ( NP b ) )"])
def test_delinearize_rejects_malformed(bad):
    with pytest.raises(TreeSyntaxError):
        delinearize(bad)
