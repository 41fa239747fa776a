"""Randomized invariants over sampled derivations."""
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from structgen.compose import compose_lf
from structgen.evaluation import exact_match
from structgen.grammar import (
    coarsen,
    delinearize,
    linearize,
    parse_unique,
    pos_sequence,
    sample_derivation,
    sentence_of,
)
from structgen.logical_form import SRLGraph, parse_lf, serialize_lf, srl_graph
from structgen.qa.instances import normalize_determiner

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
seeds = st.integers(min_value=0, max_value=2**31 - 1)
depths = st.integers(min_value=1, max_value=5)


@SETTINGS
@given(seed=seeds, depth=depths)
def test_linearize_round_trip(cogs, seed, depth):
    tree = coarsen(sample_derivation(cogs, depth, seed), cogs)
    assert delinearize(linearize(tree)) == tree


@SETTINGS
@given(seed=seeds, depth=depths)
def test_parse_recovers_sampled_tree(cogs, seed, depth):
    d = sample_derivation(cogs, depth, seed)
    assert coarsen(parse_unique(cogs, sentence_of(d)), cogs) == coarsen(d, cogs)


@SETTINGS
@given(seed=seeds, depth=depths, style=st.sampled_from(["compact", "cogs"]))
def test_lf_serialize_round_trip(cogs, seed, depth, style):
    lf = compose_lf(sample_derivation(cogs, depth, seed), cogs)
    text = serialize_lf(lf, style)
    again = parse_lf(text)
    assert serialize_lf(again, "compact") == serialize_lf(lf, "compact")
    assert serialize_lf(again, style) == text


@SETTINGS
@given(seed=seeds, depth=depths)
def test_pos_length_matches_words(cogs, seed, depth):
    d = sample_derivation(cogs, depth, seed)
    assert len(pos_sequence(coarsen(d, cogs))) == len(sentence_of(d, period=False).split())


@SETTINGS
@given(seed=seeds, depth=depths)
def test_srl_round_trip(cogs, seed, depth):
    d = sample_derivation(cogs, depth, seed)
    lf = compose_lf(d, cogs)
    g = srl_graph(lf, sentence_of(d))
    assert SRLGraph.parse(g.serialize()) == g
    n = len(sentence_of(d, period=False).split())
    assert all(0 <= i < n for i in g.nodes)


words = st.lists(st.sampled_from(["the", "The", "a", "A", "boy", "cake", "Emma", "on"]), min_size=1, max_size=6)


@given(words)
def test_exact_match_reflexive(ws):
    s = " ".join(ws)
    assert exact_match(s, s, "strict") and exact_match(s, s, "extractive")


@given(words)
def test_normalize_determiner_idempotent(ws):
    s = " ".join(ws)
    once = normalize_determiner(s)
    assert normalize_determiner(once) == once
    assert once.lower() == s.lower()
    assert exact_match(s, once, "extractive")


@given(words, words)
def test_strict_implies_extractive(a, b):
    x, y = " ".join(a), " ".join(b)
    if exact_match(x, y, "strict"):
        assert exact_match(x, y, "extractive")
