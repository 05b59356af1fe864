"""Hassett weight vectors, GIT polarizations and the map from divisor classes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .exact import fmt_vec, q, qvec
from .picard import DivisorClass


@dataclass(frozen=True)
class WeightVector:
    """Weights ``a_1..a_n``; no range check, since boundary images contain zeros."""

    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", qvec(self.a))
        if not self.a:
            raise ValueError("weight vector must be nonempty")

    def __len__(self) -> int:
        return len(self.a)

    @property
    def total(self) -> Fraction:
        return sum(self.a, Fraction(0))

    @property
    def is_admissible(self) -> bool:
        """``0 < a_i <= 1`` for every i."""
        return all(0 < x <= 1 for x in self.a)

    @property
    def is_democratic_sum(self) -> bool:
        return self.is_admissible and self.total == 2

    def to_json(self) -> list:
        return fmt_vec(self.a)


@dataclass(frozen=True)
class Polarization:
    b: tuple

    def __post_init__(self):
        b = tuple(int(x) for x in self.b)
        if len(b) < 3:
            raise ValueError(f"need at least 3 weights, got {len(b)}")
        if any(x <= 0 for x in b):
            raise ValueError("polarization entries must be positive integers")
        object.__setattr__(self, "b", b)

    @property
    def total(self) -> int:
        return sum(self.b)

    def to_json(self) -> list:
        return list(self.b)


def phi(D: DivisorClass) -> WeightVector:
    """Weights ``a_j = (y + x_j) / ((m+1) y + sum x)``, the last one closing the sum to 2."""
    m = D.model.m
    if D.model.s != m + 2:
        raise ValueError(f"phi is defined on X^{m}_{m + 2}, got s={D.model.s}")
    den = (m + 1) * D.y + sum(D.x, Fraction(0))
    if den == 0:
        raise ZeroDivisionError("divisor lies on the hyperplane (m+1)y + sum x = 0")
    a = [(D.y + xj) / den for xj in D.x]
    a.append(2 - sum(a, Fraction(0)))
    return WeightVector(tuple(a))


def weights_from_polarization(b: Polarization) -> WeightVector:
    total = b.total
    return WeightVector(tuple(Fraction(2 * x, total) for x in b.b))


def polarization_from_weights(a: WeightVector) -> Polarization:
    if a.total != 2:
        raise ValueError(f"weights must sum to 2, got {a.total}")
    if any(x <= 0 for x in a.a):
        raise ValueError("weights must be positive")
    M = 1
    for x in a.a:
        M = lcm(M, x.denominator)
    return Polarization(tuple(int(x * M) for x in a.a))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def weight_wall_sides(a: WeightVector, grouped: bool = False) -> list:
    """Side of every wall ``sum_{i in I} a_i = 1`` with ``2 <= |I| <= n/2``.

    Ungrouped: ``(I, sign)`` with 1-based ``I``.  Grouped: one entry
    ``(values, sign, count)`` per multiset of weights picked out by I.
    """
    n = len(a)
    out = []
    counts = Counter()
    for size in range(2, n // 2 + 1):
        for I in combinations(range(1, n + 1), size):
            sgn = _sign(sum((a.a[i - 1] for i in I), Fraction(0)) - 1)
            if grouped:
                counts[(tuple(sorted(a.a[i - 1] for i in I)), sgn)] += 1
            else:
                out.append((I, sgn))
    if grouped:
        out = [(vals, sgn, c) for (vals, sgn), c in sorted(counts.items(), key=lambda kv: (len(kv[0][0]), kv[0]))]
    return out


def reduction_admissible(A: WeightVector, B: WeightVector) -> bool:
    """Whether A dominates B componentwise."""
    if len(A) != len(B):
        raise ValueError(f"length mismatch: {len(A)} != {len(B)}")
    return all(x >= y for x, y in zip(A.a, B.a))


def weight_vector(values) -> WeightVector:
    return WeightVector(tuple(q(v) for v in values))
