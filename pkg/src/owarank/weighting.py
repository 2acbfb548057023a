"""OWA weight vectors.

Two generators are provided:

* relative fuzzy linguistic quantifiers, ``W_k = Q(k/m) - Q((k-1)/m)``
  where ``Q`` is the piecewise-linear membership with knots ``(a, b)``;
* most-preferred-first weights, ``W_k = (u + 1 - k) / N`` with
  ``N = u(u+1)/2``, which always favour the best ranked source.

Weights are computed with :class:`fractions.Fraction` so they sum to exactly
one; floats are only produced on export.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Iterable

import numpy as np

__all__ = [
    "Quantifier",
    "WeightVector",
    "MOST",
    "AT_LEAST_HALF",
    "AS_MANY_AS_POSSIBLE",
    "QUANTIFIERS",
    "quantifier_membership",
    "quantifier_weights",
    "most_preferred_first_weights",
    "uniform_weights",
]


SUM_TOLERANCE = Fraction(1, 10**12)


def _exact(x) -> Fraction:
    # decimal literals like 0.3 should mean 3/10, not the nearest double
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (float, np.floating)):
        return Fraction(repr(float(x)))
    if isinstance(x, np.integer):
        return Fraction(int(x))
    return Fraction(x)


@dataclass(frozen=True)
class Quantifier:
    """Relative quantifier with membership knots ``0 <= a < b <= 1``."""

    name: str
    a: Fraction
    b: Fraction

    def __init__(self, name: str, a, b):
        a, b = _exact(a), _exact(b)
        if not (0 <= a < b <= 1):
            raise ValueError(f"quantifier {name!r}: need 0 <= a < b <= 1, got a={a}, b={b}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __call__(self, r) -> Fraction:
        return quantifier_membership(self, r)


MOST = Quantifier("most", "0.3", "0.8")
AS_MANY_AS_POSSIBLE = Quantifier("as-many-as-possible", "0.5", "1")
AT_LEAST_HALF = Quantifier("at-least-half", "0", "0.5")

QUANTIFIERS: dict[str, Quantifier] = {q.name: q for q in (MOST, AT_LEAST_HALF, AS_MANY_AS_POSSIBLE)}


@dataclass(frozen=True)
class WeightVector:
    """Normalized OWA weights, ``exact`` holds the rational values."""

    exact: tuple[Fraction, ...]
    provenance: str

    def __post_init__(self):
        if not self.exact:
            raise ValueError("weight vector must be non-empty")
        if any(w < 0 or w > 1 for w in self.exact):
            raise ValueError("weights must lie in [0, 1]")
        # generated vectors sum to exactly 1; user-supplied floats get 1e-12 slack
        if abs(sum(self.exact) - 1) > SUM_TOLERANCE:
            raise ValueError(f"weights must sum to 1, got {float(sum(self.exact))!r}")

    @property
    def weights(self) -> np.ndarray:
        return np.array([float(w) for w in self.exact])

    def __len__(self) -> int:
        return len(self.exact)

    def __iter__(self):
        return iter(self.weights)

    def __array__(self, dtype=None, copy=None):
        return self.weights if dtype is None else self.weights.astype(dtype)

    @classmethod
    def from_values(cls, values: Iterable, provenance: str = "custom") -> "WeightVector":
        return cls(tuple(_exact(v) for v in values), provenance)


def quantifier_membership(q: Quantifier, r) -> Fraction | float:
    """Degree ``Q(r)`` to which the proportion ``r`` satisfies ``q``.

    Returns an exact :class:`~fractions.Fraction` for rational input and a
    float for float input.
    """
    as_float = isinstance(r, (float, np.floating))
    if not isinstance(r, Real):
        raise TypeError(f"r must be a real number, got {type(r).__name__}")
    x = _exact(r) if as_float else Fraction(r)
    if not 0 <= x <= 1:
        raise ValueError(f"r must lie in [0, 1], got {r}")
    if x < q.a:
        out = Fraction(0)
    elif x > q.b:
        out = Fraction(1)
    else:
        out = (x - q.a) / (q.b - q.a)
    return float(out) if as_float else out


def quantifier_weights(q: Quantifier, m: int) -> WeightVector:
    """Quantifier-guided OWA weights for ``m`` arguments."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    steps = [quantifier_membership(q, Fraction(k, m)) for k in range(m + 1)]
    return WeightVector(tuple(hi - lo for lo, hi in zip(steps, steps[1:])), q.name)


def most_preferred_first_weights(u: int) -> WeightVector:
    """Rank-proportional weights, largest for the first position.

    >>> [str(w) for w in most_preferred_first_weights(3).exact]
    ['1/2', '1/3', '1/6']
    """
    if isinstance(u, bool) or not isinstance(u, int) or u < 1:
        raise ValueError(f"u must be a positive integer, got {u!r}")
    total = u * (u + 1) // 2
    return WeightVector(tuple(Fraction(u + 1 - k, total) for k in range(1, u + 1)), "most-preferred-first")


def uniform_weights(m: int) -> WeightVector:
    if m < 1:
        raise ValueError("m must be >= 1")
    return WeightVector((Fraction(1, m),) * m, "uniform")
