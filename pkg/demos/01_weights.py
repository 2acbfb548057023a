"""
Weight vectors for seven ranked sources
=======================================

Quantifier-guided weights depend only on the share of arguments that
satisfy a fuzzy condition, so they can give nothing to the largest
argument.  Most-preferred-first weights decrease linearly and always favour
the first position.
"""

from owarank import QUANTIFIERS, most_preferred_first_weights, quantifier_weights

U = 7

print(f"{'method':<22}" + "".join(f"{'W' + str(k):>9}" for k in range(1, U + 1)))
for name, q in QUANTIFIERS.items():
    w = quantifier_weights(q, U)
    print(f"{name:<22}" + "".join(f"{x:9.4f}" for x in w.weights))

mpf = most_preferred_first_weights(U)
print(f"{'most-preferred-first':<22}" + "".join(f"{x:9.4f}" for x in mpf.weights))

# exact values: (7, 6, ..., 1) / 28
print("\nexact mpf weights:", ", ".join(str(x) for x in mpf.exact))

# "most" leaves the top position empty for every m >= 4
for m in range(4, 11):
    print(f"most, m={m:2d}: W1 = {quantifier_weights(QUANTIFIERS['most'], m).exact[0]}")
