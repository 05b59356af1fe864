"""Divisor and curve classes on the blow-up X^m_s of P^m at s general points.

Divisors are written ``D = y H + sum x_i E_i`` and stored as ``(y, x_1..x_s)``;
the multiplicity of the corresponding linear system at ``p_i`` is ``-x_i``.
Curves are ``C = a l + sum c_i e_i``.  Point indices are 1-based throughout,
as in the usual notation ``p_1, ..., p_s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .exact import fmt, fmt_vec, q, qvec, rank


@dataclass(frozen=True)
class BlowupModel:
    m: int
    s: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"m must be at least 2, got {self.m}")
        if self.s < 1:
            raise ValueError(f"s must be at least 1, got {self.s}")

    @property
    def rank(self) -> int:
        return self.s + 1

    def to_json(self) -> dict:
        return {"m": self.m, "s": self.s}


@dataclass(frozen=True)
class DivisorClass:
    model: BlowupModel
    y: Fraction
    x: tuple

    def __post_init__(self):
        object.__setattr__(self, "y", q(self.y))
        object.__setattr__(self, "x", qvec(self.x))
        if len(self.x) != self.model.s:
            raise ValueError(f"expected {self.model.s} exceptional coefficients, got {len(self.x)}")

    @classmethod
    def from_vector(cls, model: BlowupModel, v) -> "DivisorClass":
        v = list(v)
        return cls(model, v[0], tuple(v[1:]))

    @classmethod
    def from_degree_mults(cls, model: BlowupModel, d, mults) -> "DivisorClass":
        return cls(model, d, tuple(-q(mi) for mi in mults))

    @property
    def vector(self) -> tuple:
        return (self.y,) + self.x

    @property
    def degree(self) -> Fraction:
        return self.y

    @property
    def mults(self) -> tuple:
        return tuple(-xi for xi in self.x)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_model(self.model, other.model)
        return DivisorClass(self.model, self.y + other.y, tuple(a + b for a, b in zip(self.x, other.x)))

    def __mul__(self, k) -> "DivisorClass":
        k = q(k)
        return DivisorClass(self.model, k * self.y, tuple(k * a for a in self.x))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"model": self.model.to_json(), "y": fmt(self.y), "x": fmt_vec(self.x)}

    @classmethod
    def from_json(cls, data: dict) -> "DivisorClass":
        model = BlowupModel(int(data["model"]["m"]), int(data["model"]["s"]))
        return cls(model, q(data["y"]), qvec(data["x"]))


@dataclass(frozen=True)
class CurveClass:
    model: BlowupModel
    a: Fraction
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", q(self.a))
        object.__setattr__(self, "c", qvec(self.c))
        if len(self.c) != self.model.s:
            raise ValueError(f"expected {self.model.s} exceptional coefficients, got {len(self.c)}")

    @classmethod
    def from_vector(cls, model: BlowupModel, v) -> "CurveClass":
        v = list(v)
        return cls(model, v[0], tuple(v[1:]))

    @property
    def vector(self) -> tuple:
        return (self.a,) + self.c

    def to_json(self) -> dict:
        return {"model": self.model.to_json(), "a": fmt(self.a), "c": fmt_vec(self.c)}

    @classmethod
    def from_json(cls, data: dict) -> "CurveClass":
        model = BlowupModel(int(data["model"]["m"]), int(data["model"]["s"]))
        return cls(model, q(data["a"]), qvec(data["c"]))


def _check_model(a: BlowupModel, b: BlowupModel) -> None:
    if a != b:
        raise ValueError(f"model mismatch: {a} vs {b}")


def pair(D: DivisorClass, C: CurveClass) -> Fraction:
    """Intersection number: H.l = 1, E_i.e_i = -1, all mixed products 0."""
    _check_model(D.model, C.model)
    return C.a * D.y - sum((ci * xi for ci, xi in zip(C.c, D.x)), Fraction(0))


def transport(v) -> tuple:
    """Swap between divisor coordinates and dot-product coordinates of curves.

    ``pair(D, C) == dot(D.vector, transport(C.vector))``; the map is an
    involution, so it also sends a divisor-space normal to a curve class.
    """
    v = tuple(v)
    return (v[0],) + tuple(-x for x in v[1:])


def default_base(model: BlowupModel) -> tuple:
    return tuple(range(1, model.m + 2))


def cremona_pushforward(D: DivisorClass, base=None) -> DivisorClass:
    """Push ``D`` forward along the standard Cremona map centred at ``base``.

    ``base`` holds the m+1 (1-based) indices of the coordinate points.
    Points off the base are untouched.
    """
    model = D.model
    m = model.m
    base = default_base(model) if base is None else tuple(sorted(set(base)))
    if len(base) != m + 1:
        raise ValueError(f"Cremona base must have {m + 1} distinct indices, got {len(base)}")
    if any(i < 1 or i > model.s for i in base):
        raise ValueError(f"base indices must lie in 1..{model.s}")
    d = D.y
    mu = list(D.mults)
    total = sum((mu[i - 1] for i in base), Fraction(0))
    new_d = d * m - total
    new_mu = list(mu)
    for i in base:
        new_mu[i - 1] = d * (m - 1) - (total - mu[i - 1])
    return DivisorClass.from_degree_mults(model, new_d, new_mu)


def anticanonical(model: BlowupModel) -> DivisorClass:
    return DivisorClass(model, model.m + 1, (-(model.m - 1),) * model.s)


def hyperplane(model: BlowupModel) -> DivisorClass:
    return DivisorClass(model, 1, (0,) * model.s)


def exceptional(model: BlowupModel, i: int) -> DivisorClass:
    x = [0] * model.s
    x[i - 1] = 1
    return DivisorClass(model, 0, tuple(x))


def contracted_rnc_classes(g: int) -> list:
    """Classes ``(g-1) l - e_{i_1} - ... - e_{i_g}`` on X^{2g-1}_{2g+1}."""
    if g < 2:
        raise ValueError("g must be at least 2")
    model = BlowupModel(2 * g - 1, 2 * g + 1)
    out = []
    for I in combinations(range(model.s), g):
        c = [0] * model.s
        for i in I:
            c[i] = -1
        out.append(CurveClass(model, g - 1, tuple(c)))
    return out


def sigma_polarization(g: int) -> DivisorClass:
    """The class ``g H - (g-1) sum E_i`` on X^{2g-1}_{2g+1}."""
    model = BlowupModel(2 * g - 1, 2 * g + 1)
    return DivisorClass(model, g, (-(g - 1),) * model.s)


def span_rank(classes) -> int:
    return rank([c.vector for c in classes])


def picard_rank_stage(s: int, c: int) -> int:
    """Rank after blowing up every linear span of at most ``c+1`` of the ``s`` points.

    Centres of dimension ``j`` are spans of ``j+1`` points, so the rank is
    ``1 + sum_{j=0}^{c} binom(s, j+1)``.
    """
    if c < 0:
        raise ValueError("maximal centre dimension must be non-negative")
    if s < 0:
        raise ValueError("number of points must be non-negative")
    return 1 + sum(comb(s, j + 1) for j in range(c + 1))
