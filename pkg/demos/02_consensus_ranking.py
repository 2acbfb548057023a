"""
Consensus ranking of data-structure books
=========================================

Seven universities, ranked best first, each list their recommended books.
Positions become scores (1, 0.9375, 0.875, ...), every book's row of scores
is sorted and combined with most-preferred-first weights, and the books are
ordered by the result.
"""

import numpy as np

from owarank import build_score_matrix, rank_items
from owarank.fixtures import UNIVERSITIES, data_structures

ds = data_structures()
course = ds.courses[0]

print("rankers:")
for r in ds.roster:
    print(f"  {r}: {UNIVERSITIES[r]:<16} {', '.join(course.list_of(r))}")

matrix = build_score_matrix(course, ds.roster)
np.set_printoptions(linewidth=120)
print("\npositional scores (items x rankers):")
for item, row in zip(matrix.items, matrix.scores):
    print(f"  {item:<5}", " ".join(f"{x:6.4f}" for x in row))

for method in ("mpf", "quantifier:most", "pas"):
    result = rank_items(matrix, method, course.course)
    print(f"\n{method}:")
    for pos, (item, score) in enumerate(result.entries, start=1):
        print(f"  {pos:2d}. {item:<5} {score:.6f}")

# DS2 has a single 1.0 from U2; after sorting that value meets the largest
# weight, so its score is 0.25 rather than 0.2142 (= second weight).
