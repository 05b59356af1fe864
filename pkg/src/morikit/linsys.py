"""Linear systems of hypersurfaces with assigned multiplicities at general points.

``LinearSystem(n, d, mults)`` is the system of degree ``d`` hypersurfaces of
P^n with multiplicity ``mults[i]`` at the i-th of ``len(mults)`` general
points.  Subset sums over the points are grouped by multiplicity, so systems
with repeated multiplicities cost polynomial rather than exponential time.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial

from .exact import QPolynomial, binom0, binomial_poly, kernel_basis, rank


class KumarClampWarning(UserWarning):
    """A Kumar multiplicity came out negative and was replaced by 0."""


class HilbertAssumptionWarning(UserWarning):
    """The Hilbert polynomial was requested outside the proven range s <= n+1."""


@dataclass(frozen=True)
class LinearSystem:
    n: int
    d: int
    mults: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(x) for x in self.mults))
        if self.n < 1:
            raise ValueError(f"ambient dimension must be at least 1, got {self.n}")
        if self.d < 0:
            raise ValueError(f"degree must be non-negative, got {self.d}")
        if any(x < 0 for x in self.mults):
            raise ValueError("multiplicities must be non-negative")

    @property
    def s(self) -> int:
        return len(self.mults)

    def scaled(self, t: int) -> "LinearSystem":
        return LinearSystem(self.n, t * self.d, tuple(t * x for x in self.mults))

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "mults": list(self.mults)}

    @classmethod
    def from_json(cls, data: dict) -> "LinearSystem":
        return cls(int(data["n"]), int(data["d"]), tuple(int(x) for x in data["mults"]))

    def __str__(self) -> str:
        counts = Counter(self.mults)
        parts = []
        for value in sorted(counts, reverse=True):
            c = counts[value]
            parts.append(f"{value}^{c}" if c > 1 else str(value))
        return f"L_{{{self.n},{self.d}}}({','.join(parts)})"


def k_value(L: LinearSystem, I) -> int:
    """``max(sum_{i in I} m_i - r d, 0)`` with ``r = |I| - 1``; I is 1-based."""
    I = tuple(I)
    if not I:
        raise ValueError("index set must be nonempty")
    if len(set(I)) != len(I) or any(i < 1 or i > L.s for i in I):
        raise ValueError(f"indices must be distinct and lie in 1..{L.s}")
    r = len(I) - 1
    return max(sum(L.mults[i - 1] for i in I) - r * L.d, 0)


def subset_classes(L: LinearSystem):
    """Yield ``(r, k, count)`` for every class of nonempty point subsets.

    Subsets are grouped by how many points of each multiplicity they use;
    ``count`` is the number of subsets in the class.  Ordered by (r, class).
    """
    counts = sorted(Counter(L.mults).items())
    values = [v for v, _ in counts]
    sizes = [c for _, c in counts]
    classes = []
    for pick in product(*(range(c + 1) for c in sizes)):
        size = sum(pick)
        if size == 0:
            continue
        r = size - 1
        total = sum(v * p for v, p in zip(values, pick))
        weight = 1
        for c, p in zip(sizes, pick):
            weight *= comb(c, p)
        classes.append((r, pick, max(total - r * L.d, 0), weight))
    classes.sort(key=lambda item: (item[0], item[1]))
    for r, _, k, weight in classes:
        yield r, k, weight


def linear_virtual_dim(L: LinearSystem) -> int:
    """Alternating binomial sum over point subsets (binomials vanish below n)."""
    n = L.n
    total = comb(n + L.d, n)
    for r, k, weight in subset_classes(L):
        term = binom0(n + k - r - 1, n)
        if term:
            total += (-1) ** (r + 1) * weight * term
    return total


def linear_expected_dim(L: LinearSystem) -> int:
    """``max(linear_virtual_dim, -1)``; no containment test against other systems."""
    return max(linear_virtual_dim(L), -1)


@dataclass(frozen=True)
class HilbertData:
    polynomial: QPolynomial
    degree: int
    N: int
    n: int
    # s == n + 2: outside the range the formula is proven for, used as asserted
    beyond_proof: bool = field(default=False)

    def __call__(self, t) -> Fraction:
        return self.polynomial(t)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "polynomial": self.polynomial.to_json(),
            "degree": str(self.degree),
            "N": str(self.N),
            "beyond_proof": self.beyond_proof,
        }


def _finish(poly: QPolynomial, degree: int, n: int, beyond: bool) -> HilbertData:
    if poly(0) != 1:
        raise ArithmeticError(f"Hilbert polynomial has h(0) = {poly(0)}, expected 1")
    lead = poly.leading * factorial(n) if poly.degree == n else Fraction(0)
    if lead != degree:
        raise ArithmeticError(f"degree {degree} disagrees with n! * leading coefficient {lead}")
    h1 = poly(1)
    return HilbertData(poly, degree, int(h1) - 1, n, beyond)


def hilbert(L: LinearSystem) -> HilbertData:
    """Hilbert polynomial and degree of the closure of the image of P^n under L."""
    n, d = L.n, L.d
    if L.s > n + 2:
        raise ValueError(f"need at most n+2 = {n + 2} points, got {L.s}")
    beyond = L.s == n + 2
    poly = binomial_poly(d, n, n)
    degree = d**n
    for r, k, weight in subset_classes(L):
        if k == 0:
            continue
        sign = (-1) ** (r + 1)
        poly = poly + binomial_poly(k, n - r - 1, n) * (sign * weight)
        degree += sign * weight * k**n
    return _finish(poly, degree, n, beyond)


def sigma_system(g: int) -> LinearSystem:
    """Degree g forms on P^{2g-1} with multiplicity g-1 at 2g+1 points."""
    if g < 2:
        raise ValueError("g must be at least 2")
    return LinearSystem(2 * g - 1, g, (g - 1,) * (2 * g + 1))


def mu_system(g: int) -> LinearSystem:
    """Degree 2g+1 forms on P^{2g} with multiplicity 2g-1 at 2g+2 points."""
    if g < 1:
        raise ValueError("g must be at least 1")
    return LinearSystem(2 * g, 2 * g + 1, (2 * g - 1,) * (2 * g + 2))


def hilbert_sigma_odd(g: int) -> HilbertData:
    """Closed form for the odd-dimensional quotient, of dimension 2g-1."""
    if g < 2:
        raise ValueError("g must be at least 2")
    n = 2 * g - 1
    poly = binomial_poly(g, 2 * g - 1, n)
    degree = g**n
    for r in range(g - 1):
        sign = (-1) ** (r + 1)
        c = comb(2 * g + 1, r + 1)
        poly = poly + binomial_poly(g - r - 1, 2 * g - 1 - r - 1, n) * (sign * c)
        degree += sign * c * (g - r - 1) ** n
    return _finish(poly, degree, n, True)


def hilbert_sigma_even(g: int) -> HilbertData:
    """Closed form for the even-dimensional quotient, of dimension 2g."""
    if g < 1:
        raise ValueError("g must be at least 1")
    n = 2 * g
    poly = binomial_poly(2 * g + 1, 2 * g, n)
    degree = (2 * g + 1) ** n
    for r in range((2 * g - 1) // 2 + 1):
        sign = (-1) ** (r + 1)
        c = comb(2 * g + 2, r + 1)
        poly = poly + binomial_poly(2 * g - 2 * r - 1, 2 * g - r - 1, n) * (sign * c)
        degree += sign * c * (2 * g - 2 * r - 1) ** n
    return _finish(poly, degree, n, True)


def kumar_system(b) -> LinearSystem:
    """Linear system on P^{n-3} realizing the GIT quotient of (P^1)^n polarized by b.

    The last entry of ``b`` plays the distinguished role; the i-th of the
    first n-1 points gets the multiplicity attached to ``b[i]``.
    """
    b = tuple(int(x) for x in b)
    n = len(b)
    if n < 5:
        raise ValueError(f"need at least 5 weights, got {n}")
    if any(x <= 0 for x in b):
        raise ValueError("weights must be positive integers")
    total = sum(b)
    for i, bi in enumerate(b):
        if bi >= total - bi:
            raise ValueError(f"b_{i + 1} = {bi} is not smaller than the sum of the others")
    bn = b[-1]
    if total % 2 == 0:
        half = total // 2
        d = half - bn
        raw = [half - bi - bn for bi in b[:-1]]
    else:
        d = total - 2 * bn
        raw = [total - 2 * bi - 2 * bn for bi in b[:-1]]
    if any(x < 0 for x in raw):
        warnings.warn(
            f"negative multiplicities {raw} for b={b} clamped to 0",
            KumarClampWarning,
            stacklevel=2,
        )
    return LinearSystem(n - 3, d, tuple(max(x, 0) for x in raw))


def section_relation_matrix(g: int) -> list:
    """0/1 matrix with rows indexed by (g-2)-subsets J and columns by g-subsets I of {1..2g}.

    The entry is 1 iff J is contained in I.  Rows and columns are in
    lexicographic order.
    """
    if g < 2:
        raise ValueError("g must be at least 2")
    pts = range(1, 2 * g + 1)
    cols = [frozenset(I) for I in combinations(pts, g)]
    rows = [frozenset(J) for J in combinations(pts, g - 2)]
    return [[1 if J <= I else 0 for I in cols] for J in rows]


def section_space_dim_odd(g: int) -> int:
    """Dimension of the space of squarefree degree-g forms obeying the subset relations."""
    M = section_relation_matrix(g)
    return len(M[0]) - rank(M)


def section_space_basis(g: int) -> list:
    """Kernel of the relation matrix; coefficient vectors indexed by g-subsets of {1..2g}."""
    M = section_relation_matrix(g)
    return kernel_basis(M)


def subsets_brute_force_vdim(L: LinearSystem) -> int:
    """Subset-by-subset version of :func:`linear_virtual_dim`, exponential in s."""
    n = L.n
    total = comb(n + L.d, n)
    idx = range(1, L.s + 1)
    for size in range(1, L.s + 1):
        r = size - 1
        for I in combinations(idx, size):
            total += (-1) ** (r + 1) * binom0(n + k_value(L, I) - r - 1, n)
    return total
