"""Exact polyhedral cones over the rationals.

An :class:`HCone` is ``{x : n.x >= 0 for every normal n}``; a :class:`VCone`
is ``span(lineality) + cone(rays)``.  Conversion between the two is done by
the double description method on integer vectors, with the inequalities
inserted in lexicographic order, so results do not depend on input order.

Pairings other than the dot product are handled by the caller transforming
coordinates before and after (see :mod:`morikit.picard`).
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import dot, fmt_vec, primitive, project_away, q, qvec, rank, row_space_basis

DEFAULT_RAY_CAP = 2_000_000
RAY_CAP_ENV = "MORIKIT_RAY_CAP"


class ResourceLimitExceeded(RuntimeError):
    """Raised when the double description run holds more rays than allowed."""


def default_cap() -> int:
    raw = os.environ.get(RAY_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_RAY_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{RAY_CAP_ENV} must be a positive integer, got {raw!r}") from None
    if cap <= 0:
        raise ValueError(f"{RAY_CAP_ENV} must be a positive integer, got {raw!r}")
    return cap


def _dedupe(vectors) -> tuple:
    seen = set()
    out = []
    for v in vectors:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class HCone:
    dim: int
    normals: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be positive")
        canon = []
        for n in self.normals:
            if len(n) != self.dim:
                raise ValueError(f"normal {n!r} has length {len(n)}, expected {self.dim}")
            p = primitive(n)
            if any(p):
                canon.append(p)
        object.__setattr__(self, "normals", _dedupe(canon))

    def values(self, v) -> tuple:
        if len(v) != self.dim:
            raise ValueError(f"point has length {len(v)}, expected {self.dim}")
        v = qvec(v)
        return tuple(dot(n, v) for n in self.normals)

    def contains(self, v) -> bool:
        return all(x >= 0 for x in self.values(v))

    def to_json(self) -> dict:
        return {"dim": self.dim, "normals": [fmt_vec(n) for n in self.normals]}

    @classmethod
    def from_json(cls, data: dict) -> "HCone":
        return cls(int(data["dim"]), tuple(qvec(n) for n in data["normals"]))


@dataclass(frozen=True)
class VCone:
    dim: int
    rays: tuple = ()
    lineality: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be positive")
        for v in self.rays + self.lineality:
            if len(v) != self.dim:
                raise ValueError(f"vector {v!r} has length {len(v)}, expected {self.dim}")

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "rays": [fmt_vec(r) for r in self.rays],
            "lineality": [fmt_vec(v) for v in self.lineality],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VCone":
        return make_vcone(
            int(data["dim"]),
            [qvec(r) for r in data["rays"]],
            [qvec(v) for v in data.get("lineality", [])],
        )


def make_vcone(dim: int, rays, lineality=()) -> VCone:
    """Build a :class:`VCone` from arbitrary generators, keeping extreme rays only."""
    gens = [primitive(r) for r in rays]
    normals = [g for g in gens if any(g)]
    for v in lineality:
        p = primitive(v)
        normals.extend([p, tuple(-x for x in p)])
    # cone(gens) + span(lin) is the dual of the H-cone whose normals are those vectors
    return dual(HCone(dim, tuple(normals)))


class Position(enum.Enum):
    INTERIOR = "INTERIOR"
    BOUNDARY = "BOUNDARY"
    OUTSIDE = "OUTSIDE"


@dataclass(frozen=True)
class Classification:
    position: Position
    # active normals for BOUNDARY, violated normals for OUTSIDE (indices into c.normals)
    indices: tuple = ()
    values: tuple = field(default=(), compare=False)

    def __str__(self) -> str:
        return self.position.value


def classify_point(c: HCone, v) -> Classification:
    vals = c.values(v)
    neg = tuple(i for i, x in enumerate(vals) if x < 0)
    if neg:
        return Classification(Position.OUTSIDE, neg, vals)
    zero = tuple(i for i, x in enumerate(vals) if x == 0)
    if zero:
        return Classification(Position.BOUNDARY, zero, vals)
    return Classification(Position.INTERIOR, (), vals)


def _idot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _iprim(v) -> tuple:
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _double_description(dim: int, normals, cap: int):
    """Return (rays, lineality) of ``{x : A x >= 0}`` as integer vectors."""
    order = sorted(normals)
    lin = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    rays: list[tuple] = []
    zsets: list[int] = []
    processed: list[tuple] = []
    rank_cache: dict[int, int] = {}

    def mask_rank(mask: int) -> int:
        r = rank_cache.get(mask)
        if r is None:
            rows = [processed[i] for i in range(len(processed)) if mask >> i & 1]
            r = rank(rows) if rows else 0
            rank_cache[mask] = r
        return r

    for a in order:
        bit = 1 << len(processed)
        lvals = [_idot(a, l) for l in lin]
        piv = next((i for i, x in enumerate(lvals) if x), None)
        if piv is not None:
            l0 = lin[piv]
            s0 = lvals[piv]
            if s0 < 0:
                l0 = tuple(-x for x in l0)
                s0 = -s0
            new_lin = []
            for i, l in enumerate(lin):
                if i == piv:
                    continue
                t = lvals[i]
                new_lin.append(_iprim(tuple(s0 * x - t * y for x, y in zip(l, l0))))
            new_rays = []
            for r in rays:
                t = _idot(a, r)
                new_rays.append(_iprim(tuple(s0 * x - t * y for x, y in zip(r, l0))))
            # l0 was lineality, so every earlier normal vanishes on it
            rays = new_rays + [l0]
            zsets = [z | bit for z in zsets] + [bit - 1]
            lin = new_lin
            processed.append(a)
            rank_cache.clear()
            continue

        vals = [_idot(a, r) for r in rays]
        pos = [i for i, x in enumerate(vals) if x > 0]
        neg = [i for i, x in enumerate(vals) if x < 0]
        zer = [i for i, x in enumerate(vals) if x == 0]
        if not neg:
            zsets = [z | bit if vals[i] == 0 else z for i, z in enumerate(zsets)]
            processed.append(a)
            continue
        target = dim - len(lin) - 2
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zer]
        new_z = [zsets[i] for i in pos] + [zsets[i] | bit for i in zer]
        for i in pos:
            zi = zsets[i]
            ri = rays[i]
            vi = vals[i]
            for j in neg:
                common = zi & zsets[j]
                if bin(common).count("1") < target:
                    continue
                if mask_rank(common) != target:
                    continue
                vj = vals[j]
                rj = rays[j]
                new_rays.append(_iprim(tuple(vi * y - vj * x for x, y in zip(ri, rj))))
                new_z.append(common | bit)
                if len(new_rays) > cap:
                    raise ResourceLimitExceeded(
                        f"double description exceeded the ray cap of {cap}"
                    )
        rays, zsets = new_rays, new_z
        processed.append(a)
        if len(rays) > cap:
            raise ResourceLimitExceeded(f"double description exceeded the ray cap of {cap}")
    return rays, lin


def h_to_v(c: HCone, cap: int | None = None) -> VCone:
    """Extreme rays and lineality space of an H-cone."""
    if cap is None:
        cap = default_cap()
    rays, lin = _double_description(c.dim, c.normals, cap)
    lin_basis = row_space_basis(lin) if lin else []
    canon = set()
    for r in rays:
        p = primitive(project_away(r, lin_basis)) if lin_basis else primitive(r)
        if any(p):
            canon.add(p)
    return VCone(c.dim, tuple(sorted(canon)), tuple(lin_basis))


def v_to_h(v: VCone, cap: int | None = None) -> HCone:
    """Irredundant inequality description of a V-cone.

    The lineality of the result (equations) appears as pairs ``n, -n``.
    """
    facets = h_to_v(_generators_as_normals(v), cap)
    normals = list(facets.rays)
    for l in facets.lineality:
        normals.append(l)
        normals.append(tuple(-x for x in l))
    return HCone(v.dim, tuple(normals))


def _generators_as_normals(v: VCone) -> HCone:
    normals = list(v.rays)
    for l in v.lineality:
        normals.append(tuple(l))
        normals.append(tuple(-q(x) for x in l))
    return HCone(v.dim, tuple(normals))


def dual(c, cap: int | None = None):
    """Dual cone under the dot product.

    ``HCone -> VCone``: the cone generated by the normals, reduced to its
    extreme rays.  ``VCone -> HCone``: the rays and +/- lineality as normals.
    """
    if isinstance(c, HCone):
        inner = h_to_v(c, cap)
        return h_to_v(_generators_as_normals(inner), cap)
    if isinstance(c, VCone):
        return _generators_as_normals(c)
    raise TypeError(f"expected HCone or VCone, got {type(c).__name__}")


def same_cone(a: HCone, b: HCone, cap: int | None = None) -> bool:
    """Point-set equality of two H-cones by mutual ray containment."""
    if a.dim != b.dim:
        return False
    va, vb = h_to_v(a, cap), h_to_v(b, cap)
    for src, other in ((va, b), (vb, a)):
        for r in src.rays:
            if not other.contains(r):
                return False
        for l in src.lineality:
            if any(x != 0 for x in other.values(l)):
                return False
    return True


def vcone_equal(a: VCone, b: VCone) -> bool:
    """Equality of canonical V-representations."""
    return (
        a.dim == b.dim
        and set(a.rays) == set(b.rays)
        and set(a.lineality) == set(b.lineality)
    )
