import pytest

from owarank.dataset import GroundTruth, RankingDataset
from owarank.harness import (
    METRICS,
    PAPER_METHODS,
    aggregate_dataset,
    compare,
    comparison_markdown,
    dumps,
    evaluate_ranking,
    improvement,
)

TRUTH = GroundTruth("Data Structure", [f"DS{i}" for i in range(1, 17)])


def test_aggregate_dataset(ds_dataset):
    [r] = aggregate_dataset(ds_dataset, "mpf")
    assert r.items[0] == "DS9"
    assert aggregate_dataset(RankingDataset(["U1"], []), "mpf") == []


def test_evaluate_ranking_course_mismatch(ds_dataset):
    [r] = aggregate_dataset(ds_dataset, "mpf")
    with pytest.raises(ValueError, match="mismatch"):
        evaluate_ranking(r, GroundTruth("Networks", ["DS1"]))


def test_improvement_directions():
    assert improvement("mae", 2.0, 4.0) == 50.0
    assert improvement("mae", 4.0, 2.0) == -100.0
    assert improvement("p_at_k", 0.9, 0.6) == pytest.approx(50.0)
    assert improvement("fpr_at_k", 0.0, 0.0) == 0.0
    assert improvement("fpr_at_k", 0.1, 0.0) is None
    with pytest.raises(ValueError):
        improvement("ndcg", 1, 1)


def test_compare_structure(ds_dataset):
    rep = compare(ds_dataset, [TRUTH], PAPER_METHODS, "mpf", 10)
    assert rep.methods == PAPER_METHODS
    assert all(len(rep.reports[m]) == 1 for m in rep.methods)
    assert set(rep.improvements) == set(PAPER_METHODS) - {"mpf"}
    assert all(set(row) == set(METRICS) for row in rep.improvements.values())
    for base, row in rep.improvements.items():
        for metric, cell in row.items():
            assert cell == improvement(metric, rep.means["mpf"][metric], rep.means[base][metric])
    md = comparison_markdown(rep)
    assert "| MAE |" in md and "P@10" in md


def test_compare_identical_methods_zero(ds_dataset):
    rep = compare(ds_dataset, [TRUTH], ["mpf", "mpf"], "mpf")
    assert rep.methods == ("mpf", "mpf#2")
    assert all(v == 0.0 for v in rep.improvements["mpf#2"].values())


def test_compare_errors(ds_dataset):
    with pytest.raises(ValueError):
        compare(ds_dataset, [TRUTH], ["mpf"], "mpf")
    with pytest.raises(ValueError):
        compare(ds_dataset, [TRUTH], ["mpf", "pas"], "quantifier:most")
    with pytest.raises(ValueError):
        compare(ds_dataset, [GroundTruth("other", ["x"])], ["mpf", "pas"], "mpf")


def test_dumps_is_stable(ds_dataset):
    rep = compare(ds_dataset, [TRUTH])
    assert dumps(rep.to_dict()) == dumps(compare(ds_dataset, [TRUTH]).to_dict())
