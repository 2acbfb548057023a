"""
Scoring rankings against an expert list
=======================================

There is no published expert ranking for these books, so this builds a
synthetic one: each book is judged by its single best placement.  The five
methods are then scored on all eight measures and the proposed method is
compared with each baseline.
"""

from owarank import GroundTruth, RankedPair, WeightVector, build_score_matrix, evaluate, rank_items
from owarank.fixtures import data_structures
from owarank.harness import PAPER_METHODS, compare, comparison_markdown

ds = data_structures()
course = ds.courses[0]
matrix = build_score_matrix(course, ds.roster)

best_placement = WeightVector.from_values([1] + [0] * (len(ds.roster) - 1), "max")
expert = rank_items(matrix, "mpf", course.course, weights=best_placement).items
print("synthetic expert ranking:", " ".join(expert))

predicted = rank_items(matrix, "mpf").items
report = evaluate(RankedPair(predicted, expert), k=10, course=course.course, method="mpf")
print("\nmpf vs expert:", report)

result = compare(ds, [GroundTruth(course.course, expert)], PAPER_METHODS, proposed="mpf", k=10)
print()
print(comparison_markdown(result))
