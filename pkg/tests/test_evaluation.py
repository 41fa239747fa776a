import json

import pytest

from structgen.evaluation import (
    DEPTHS,
    AlignmentMismatch,
    EvalReport,
    Score,
    aggregate_runs,
    depth_report,
    evaluate,
    exact_match,
    read_predictions,
    write_predictions,
)
from structgen.forge import DatasetBundle, Instance
from structgen.forge.derive import derive_syntax


def gen_bundle(rows):
    return DatasetBundle("t", {"gen": [Instance(s, t, lab, "gen") for s, t, lab in rows]})


ROWS = [("a", "x y", "pp_recursion"), ("b", "z", "pp_recursion"), ("c", "q", "subj_to_obj_common"),
        ("d", "r", "prim_to_inf_arg")]


def test_exact_match_modes():
    assert exact_match("a b", "a b")
    assert not exact_match("a b", "a c")
    assert exact_match("the boy", "The boy", "extractive")
    assert not exact_match("the boy", "The boy", "strict")
    assert exact_match("a  b ", "a b")
    with pytest.raises(ValueError):
        exact_match("a", "a", "fuzzy")


def test_evaluate_cells():
    rep = evaluate(["x y", "wrong", "q", "nope"], gen_bundle(ROWS))
    assert rep.per_type["pp_recursion"] == Score(1, 2)
    assert rep.struct == {"pp_recursion": 50.0}
    assert rep.lex_mean == 50.0
    assert rep.overall == 50.0
    d = rep.to_dict()
    assert d["per_type"]["subj_to_obj_common"]["accuracy"] == 100.0
    assert d["overall_weighting"] == "instance"


def test_type_averaged_flag():
    rows = ROWS[:3]
    preds = ["x y", "z", "wrong"]
    assert evaluate(preds, gen_bundle(rows)).overall == pytest.approx(200 / 3)
    assert evaluate(preds, gen_bundle(rows), type_averaged=True).overall == 50.0


def test_all_empty_predictions_score_zero():
    rep = evaluate([""] * 4, gen_bundle(ROWS))
    assert rep.overall == 0 and all(s.correct == 0 for s in rep.per_type.values())


def test_length_mismatch():
    with pytest.raises(AlignmentMismatch):
        evaluate(["a"], gen_bundle(ROWS))


def test_render_one_decimal_and_integer():
    rep = evaluate(["x y", "z", "wrong", "r"], gen_bundle(ROWS))
    assert "75.0" in rep.render()
    assert " 75 " in rep.render(integer=True) + " "


def test_oracle_syntax_is_perfect(cogs, small_synth):
    syn = derive_syntax(small_synth.bundle, cogs, small_synth.parse_cache())
    rep = evaluate([x.target for x in syn["gen"]], syn)
    assert rep.overall == 100.0 and all(s.accuracy == 100.0 for s in rep.per_type.values())


# -- depth buckets --------------------------------------------------------------------

def test_depth_buckets(cogs, small_synth):
    gen = small_synth.bundle["gen"]
    gold = [x.target for x in gen]
    rep = depth_report(gold, small_synth.bundle, cogs, "PP", cache=small_synth.parse_cache())
    assert tuple(rep.buckets) == DEPTHS == tuple(range(3, 13))
    assert sum(s.total for s in rep.buckets.values()) == sum(x.label == "pp_recursion" for x in gen)
    assert all(s.correct == s.total for s in rep.buckets.values())
    assert rep.to_tsv().splitlines()[0] == "depth\taccuracy\tn"


def test_depth_three_only(cogs):
    from structgen.grammar import coarsen, label_depth, parse_unique
    sents = ["Emma saw a cat on the table in the house beside a chair .",
             "Emma saw a cat on the table in the house beside a chair on a stage ."]
    assert [label_depth(coarsen(parse_unique(cogs, s), cogs), "PP") for s in sents] == [3, 4]
    bundle = gen_bundle([(s, "gold", "pp_recursion") for s in sents])
    rep = depth_report(["gold", "bad"], bundle, cogs, "PP")
    assert rep.buckets[3].accuracy == 100.0
    assert rep.buckets[4].accuracy == 0.0
    assert all(rep.buckets[d].total == 0 for d in DEPTHS if d > 4)


def test_depth_kind_validation(cogs):
    with pytest.raises(ValueError):
        depth_report([], gen_bundle([]), cogs, "NP")


# -- run aggregation ----------------------------------------------------------------------

def test_identical_runs_have_zero_std():
    rep = evaluate(["x y", "z", "q", "r"], gen_bundle(ROWS))
    agg = aggregate_runs([rep] * 5)
    assert agg.n == 5 and all(v == 0 for v in agg.std.values())


def test_two_runs_mean_and_sample_std():
    a = EvalReport({"pp_recursion": Score(0, 1)})
    b = EvalReport({"pp_recursion": Score(1, 1)})
    agg = aggregate_runs([a, b])
    assert agg.mean["pp_recursion"] == 50.0
    assert round(agg.std["pp_recursion"], 2) == 70.71


def test_single_run_convention():
    rep = evaluate(["x y", "z", "q", "r"], gen_bundle(ROWS))
    agg = aggregate_runs([rep])
    assert agg.mean == rep.cells() and set(agg.std.values()) == {0.0}


def test_mismatched_runs():
    with pytest.raises(ValueError):
        aggregate_runs([EvalReport({"a": Score(1, 1)}), EvalReport({"b": Score(1, 1)})])
    with pytest.raises(ValueError):
        aggregate_runs([])


# -- prediction files ------------------------------------------------------------------------

@pytest.mark.parametrize("suffix", [".txt", ".json"])
def test_prediction_file_round_trip(tmp_path, suffix):
    preds = ["a b", "", "( S ( N x ) )"]
    path = write_predictions(preds, tmp_path / f"p{suffix}")
    assert read_predictions(path) == preds
    if suffix == ".json":
        assert json.loads(path.read_text())[1] == {"id": 1, "prediction": ""}


def test_multiline_prediction_rejected(tmp_path):
    with pytest.raises(ValueError):
        write_predictions(["a\nb"], tmp_path / "p.txt")
