import pytest

from structgen.compose import CompositionError, compose_lf
from structgen.grammar import GrammarError, load_grammar, parse_unique
from structgen.logical_form import (
    Atom,
    Const,
    LFSyntaxError,
    LogicalForm,
    SRLError,
    SRLGraph,
    Var,
    parse_lf,
    serialize_lf,
    srl_graph,
)

HEDGEHOG = ("*cake ( x _ 4 ) ; hedgehog ( x _ 1 ) AND eat.agent ( x _ 2 , x _ 1 ) "
            "AND eat.theme ( x _ 2 , x _ 4 )")
AVA = ("*table ( x _ 9 ) ; see.agent ( x _ 1 , Ava ) AND see.theme ( x _ 1 , x _ 3 ) AND ball ( x _ 3 ) "
       "AND ball.nmod.in ( x _ 3 , x _ 6 ) AND bowl ( x _ 6 ) AND bowl.nmod.on ( x _ 6 , x _ 9 )")


def lf_of(grammar, sentence):
    return compose_lf(parse_unique(grammar, sentence), grammar)


def test_hedgehog_structure(cogs):
    lf = lf_of(cogs, "A hedgehog ate the cake .")
    assert lf.definites == (Atom("cake", (Var(4),)),)
    assert lf.body == (
        Atom("hedgehog", (Var(1),)),
        Atom("eat.agent", (Var(2), Var(1))),
        Atom("eat.theme", (Var(2), Var(4))),
    )
    assert serialize_lf(lf) == HEDGEHOG


def test_ava_nmod_chain(cogs):
    lf = lf_of(cogs, "Ava saw a ball in a bowl on the table .")
    assert serialize_lf(lf) == AVA
    assert Atom("bowl.nmod.on", (Var(6), Var(9))) in lf.body
    assert Atom("see.agent", (Var(1), Const("Ava"))) in lf.body


def test_primitive_is_the_word(cogs):
    lf = lf_of(cogs, "Paula")
    assert lf.primitive == "Paula"
    assert serialize_lf(lf) == "Paula"


def test_ccomp_and_xcomp(cogs):
    assert serialize_lf(lf_of(cogs, "Emma said that a girl slept .")) == (
        "say.agent ( x _ 1 , Emma ) AND say.ccomp ( x _ 1 , x _ 5 ) AND girl ( x _ 4 ) "
        "AND sleep.agent ( x _ 5 , x _ 4 )")
    assert serialize_lf(lf_of(cogs, "A boy wanted to run .")) == (
        "boy ( x _ 1 ) AND want.agent ( x _ 2 , x _ 1 ) AND want.xcomp ( x _ 2 , x _ 4 ) "
        "AND run.agent ( x _ 4 , x _ 1 )")


def test_cogs_style_round_trip():
    lf = parse_lf(HEDGEHOG)
    cogs_text = serialize_lf(lf, "cogs")
    assert cogs_text.startswith("* cake ( x _ 4 ) ; hedgehog ( x _ 1 ) AND eat . agent")
    assert parse_lf(cogs_text) == lf


def test_parse_compact():
    lf = parse_lf(HEDGEHOG)
    assert [a.predicate for a in lf.atoms] == ["cake", "hedgehog", "eat.agent", "eat.theme"]
    assert lf.variables() == {1, 2, 4}


def test_parse_primitive_and_lambda():
    assert parse_lf("Paula") == LogicalForm(primitive="Paula")
    lam = "LAMBDA a . LAMBDA b . LAMBDA e . paint.agent ( e , b )"
    assert parse_lf(lam).primitive == lam


@pytest.mark.parametrize("text", ["", "eat ( ( x", "eat.agent ( x _ 2 x _ 1 )", "* cake ( x _ 1 )",
                                  "a ( x _ 1 , x _ 2 , x _ 3 )", "a ( x _ 1 ) AND"])
def test_malformed_lf_has_offset(text):
    with pytest.raises(LFSyntaxError) as err:
        parse_lf(text)
    assert err.value.offset >= 0


def test_unknown_style():
    with pytest.raises(ValueError):
        serialize_lf(parse_lf(HEDGEHOG), "json")


# -- role graphs -----------------------------------------------------------------

def test_emma_slept_agent_edge(cogs):
    g = srl_graph(lf_of(cogs, "Emma slept ."), "Emma slept .")
    assert g.serialize() == "1 Agent 0"


def test_nmod_and_defn_edges(cogs):
    g = srl_graph(parse_lf(AVA), "Ava saw a ball in a bowl on the table .")
    assert (6, "Nmod", 9) in g.edges
    assert (9, "DefN", 9) in g.edges
    assert (3, "IndefN", 3) in g.edges


def test_no_definites_no_defn(cogs):
    g = srl_graph(lf_of(cogs, "A girl slept ."), "A girl slept .")
    assert all(lab != "DefN" for _, lab, _ in g.edges)


def test_edge_count_matches_atoms(cogs):
    s = "The girl gave a cake to Emma ."
    lf = lf_of(cogs, s)
    g = srl_graph(lf, s)
    assert len(g.edges) == len([a for a in lf.body if not a.is_unary]) + 2


def test_srl_text_round_trip():
    g = SRLGraph.parse("1 Agent 0 ; 1 Theme 3 ; 3 DefN 3")
    assert SRLGraph.parse(g.serialize()) == g


def test_repeated_constant_needs_anchor():
    lf = parse_lf("give.agent ( x _ 1 , Emma ) AND give.recipient ( x _ 1 , Emma ) AND give.theme ( x _ 1 , x _ 3 ) "
                  "AND cake ( x _ 3 )")
    with pytest.raises(SRLError, match="repeated"):
        srl_graph(lf, "Emma gave Emma a cake .")


def test_out_of_range_variable():
    with pytest.raises(SRLError):
        srl_graph(parse_lf("sleep.agent ( x _ 7 , Emma )"), "Emma slept .")


def test_dangling_recipe_rejected_at_load():
    with pytest.raises(GrammarError, match="dangling"):
        load_grammar("S -> N V : missing\n", "a\tN\t-\ta\nb\tV\t-\tb\n")


def test_untagged_rule_cannot_compose():
    g = load_grammar("%lexsem * noun\nS -> N V\n", "a\tN\t-\ta\nb\tV\t-\tb\n")
    with pytest.raises(CompositionError, match="recipe"):
        compose_lf(parse_unique(g, "a b"), g)


def test_verb_variable_is_its_token_position(cogs):
    # strict 0-based indexing: "burned" is token 5, not 3
    lf = lf_of(cogs, "The cake on the table burned .")
    assert serialize_lf(lf) == ("*cake ( x _ 1 ) ; *table ( x _ 4 ) ; cake.nmod.on ( x _ 1 , x _ 4 ) "
                                "AND burn.theme ( x _ 5 , x _ 1 )")
