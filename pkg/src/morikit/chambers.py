"""Cones of divisors of X^m_{m+2} and its Mori chamber arrangement.

Coordinates are ``(y, x_1, ..., x_{m+2})`` for ``D = y H + sum x_i E_i``.
Walls are integer normals oriented so that the anticanonical class is on
their non-negative side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .cones import HCone, Position, VCone, classify_point, dual, h_to_v
from .exact import primitive
from .picard import BlowupModel, DivisorClass, anticanonical, transport


@dataclass(frozen=True)
class Wall:
    m: int
    k: int
    I: tuple
    kind: str
    normal: tuple = field(compare=False)

    def label(self) -> dict:
        return {"k": self.k, "I": list(self.I), "kind": self.kind}

    def value(self, v):
        return sum(a * b for a, b in zip(self.normal, v))


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")


def _vec(m: int, y: int, coeffs: dict) -> tuple:
    v = [y] + [0] * (m + 2)
    for i, c in coeffs.items():
        v[i] += c
    return tuple(v)


def wall_normal(m: int, k: int, I, kind: str) -> tuple:
    """Integer normal of the k-wall indexed by I (1-based), before orientation."""
    if kind == "A":
        return _vec(m, 2 - k, {i: -1 for i in I})
    if kind == "B":
        v = [m - k + 1] + [1] * (m + 2)
        for i in I:
            v[i] -= 1
        return tuple(v)
    raise ValueError(f"unknown wall kind {kind!r}")


def _make_wall(m: int, k: int, I: tuple, kind: str) -> Wall:
    n = wall_normal(m, k, I, kind)
    antik = anticanonical(BlowupModel(m, m + 2)).vector
    if sum(a * b for a, b in zip(n, antik)) < 0:
        n = tuple(-a for a in n)
    return Wall(m, k, I, kind, n)


def k_range(m: int) -> range:
    return range(2, (m + 3) // 2 + 1)


def walls_for_k(m: int, k: int) -> list:
    pts = range(1, m + 3)
    out = [_make_wall(m, k, I, "A") for I in combinations(pts, k - 1)]
    out += [_make_wall(m, k, I, "B") for I in combinations(pts, k)]
    return out


def walls(m: int) -> list:
    """Every wall of the arrangement, ordered by (k, kind, I)."""
    _check_m(m)
    out = []
    for k in k_range(m):
        out.extend(walls_for_k(m, k))
    return out


def listed_eff_normals(m: int) -> list:
    """The m+3 inequalities ``y + x_i >= 0`` and ``m y + sum x_i >= 0``.

    These are only part of the facets of the effective cone; see :func:`eff_cone`.
    """
    _check_m(m)
    out = [_vec(m, 1, {i: 1}) for i in range(1, m + 3)]
    out.append(tuple([m] + [1] * (m + 2)))
    return out


def eff_cone(m: int) -> HCone:
    """Effective cone of X^m_{m+2}, i.e. the cone over :func:`eff_generators`.

    Facets: ``y + x_i >= 0``, ``m y + sum x >= 0``, ``y >= 0`` and
    ``m y + sum_{j != i} x_j >= 0``.
    """
    normals = listed_eff_normals(m)
    normals.append(_vec(m, 1, {}))
    for i in range(1, m + 3):
        v = [m] + [1] * (m + 2)
        v[i] = 0
        normals.append(tuple(v))
    return HCone(m + 3, tuple(normals))


def eff_generators(m: int) -> VCone:
    """Exceptional divisors and hyperplanes through m of the points."""
    _check_m(m)
    rays = [_vec(m, 0, {i: 1}) for i in range(1, m + 3)]
    rays += [_vec(m, 1, {i: -1 for i in I}) for I in combinations(range(1, m + 3), m)]
    return VCone(m + 3, tuple(sorted(primitive(r) for r in rays)))


def mov_cone(m: int) -> HCone:
    _check_m(m)
    normals = [w.normal for w in walls_for_k(m, 2) if w.kind == "B"]
    normals += [_vec(m, 0, {i: -1}) for i in range(1, m + 3)]
    normals += list(eff_cone(m).normals)
    return HCone(m + 3, tuple(normals))


def nef_cone(m: int) -> HCone:
    _check_m(m)
    normals = [_vec(m, 0, {i: -1}) for i in range(1, m + 3)]
    normals += [_vec(m, 1, {i: 1, j: 1}) for i, j in combinations(range(1, m + 3), 2)]
    return HCone(m + 3, tuple(normals))


def fano_walls(m: int) -> list:
    """The walls with k = g + 1 (m = 2g or m = 2g - 1)."""
    _check_m(m)
    g = (m + 1) // 2
    return walls_for_k(m, g + 1)


def fano_chamber(m: int) -> HCone:
    """Nef cone of the Fano model of X^m_{m+2}; m must be even."""
    if m % 2:
        raise ValueError("the Fano chamber exists for even m only; use fano_locus for odd m")
    return HCone(m + 3, tuple(w.normal for w in fano_walls(m)))


def fano_locus(m: int) -> list:
    """Hyperplanes whose intersection contains the anticanonical class; m odd."""
    if m % 2 == 0:
        raise ValueError("the Fano locus is defined for odd m; use fano_chamber for even m")
    return fano_walls(m)


def fano_cone(m: int) -> HCone:
    """Fano chamber for even m; for odd m the linear locus as a pair of half-spaces per wall."""
    if m % 2 == 0:
        return fano_chamber(m)
    normals = []
    for w in fano_locus(m):
        normals.append(w.normal)
        normals.append(tuple(-a for a in w.normal))
    return HCone(m + 3, tuple(normals))


@dataclass(frozen=True)
class ChamberReport:
    in_eff: object
    in_mov: object
    in_nef: object
    in_fano: object
    active_walls: tuple
    violated_walls: tuple

    def to_json(self) -> dict:
        return {
            "in_eff": self.in_eff.position.value,
            "in_mov": self.in_mov.position.value,
            "in_nef": self.in_nef.position.value,
            "in_fano": self.in_fano.position.value,
            "active_walls": [w.label() for w in self.active_walls],
            "violated_walls": [w.label() for w in self.violated_walls],
        }


def locate_divisor(D: DivisorClass) -> ChamberReport:
    m = D.model.m
    if D.model.s != m + 2:
        raise ValueError(f"expected a class on X^{m}_{m + 2}, got s={D.model.s}")
    v = D.vector
    active, violated = [], []
    for w in walls(m):
        val = w.value(v)
        if val == 0:
            active.append(w)
        elif val < 0:
            violated.append(w)
    return ChamberReport(
        in_eff=classify_point(eff_cone(m), v),
        in_mov=classify_point(mov_cone(m), v),
        in_nef=classify_point(nef_cone(m), v),
        in_fano=classify_point(fano_cone(m), v),
        active_walls=tuple(active),
        violated_walls=tuple(violated),
    )


def flip_type(w: Wall, m: int | None = None) -> tuple:
    """Dimensions (flipped, inserted) of the small modification across ``w``."""
    m = w.m if m is None else m
    if w.k < 3:
        raise ValueError("k = 2 walls bound the movable cone and are divisorial, not flips")
    if 2 * w.k > m + 3:
        raise ValueError(f"k = {w.k} is out of range for m = {m}")
    return (w.k - 2, m + 1 - w.k)


@dataclass(frozen=True)
class FlipStage:
    i: int
    center_dim: int
    center_count: int
    inserted_dim: int

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "center_dim": self.center_dim,
            "center_count": self.center_count,
            "inserted_dim": self.inserted_dim,
        }


def flip_sequence(g: int) -> list:
    """Flips taking X^{2g}_{2g+2} to its Fano model, in order."""
    if g < 1:
        raise ValueError("g must be at least 1")
    return [FlipStage(i, i, comb(2 * g + 2, i + 1), 2 * g - 1 - i) for i in range(1, g)]


@dataclass(frozen=True)
class RayReport:
    count: int
    rays: tuple  # curve-class vectors (a, c_1, ..., c_s); empty when not enumerated
    labels: tuple

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "rays": [[str(x) for x in r] for r in self.rays],
            "labels": list(self.labels),
        }


def _curve_rays_of_dual(c: HCone, cap):
    """Rays of the dual of ``c`` under the intersection pairing, in curve coordinates."""
    v = dual(c, cap)
    if v.lineality:
        raise RuntimeError("dual cone unexpectedly has lineality")
    return [primitive(transport(r)) for r in v.rays]


def ne_extremal_rays(g: int, enumerate_rays: bool | None = None, cap: int | None = None) -> RayReport:
    """Extremal rays of the Mori cone of the Fano model of X^{2g}_{2g+2}.

    The count is always returned; rays are enumerated (as the dual of the
    Fano chamber) by default only for g <= 2.
    """
    if g < 1:
        raise ValueError("g must be at least 1")
    count = comb(2 * g + 3, g + 1)
    if enumerate_rays is None:
        enumerate_rays = g <= 2
    fw = fano_walls(2 * g)
    if not enumerate_rays:
        labels = tuple({**w.label(), "family": "D" if w.kind == "A" else "C"} for w in fw)
        return RayReport(count, (), labels)
    rays = _curve_rays_of_dual(fano_chamber(2 * g), cap)
    by_normal = {primitive(w.normal): w for w in fw}
    labels = []
    for r in rays:
        w = by_normal[primitive(transport(r))]
        labels.append({**w.label(), "family": "D" if w.kind == "A" else "C"})
    if len(rays) != count:
        raise RuntimeError(f"enumerated {len(rays)} rays, expected {count}")
    return RayReport(count, tuple(rays), tuple(labels))


def _eff_facet_label(m: int, n: tuple) -> str:
    y, xs = n[0], n[1:]
    ones = [i + 1 for i, x in enumerate(xs) if x == 1]
    if y == 1 and len(ones) == 1:
        return f"line through p_{ones[0]}"
    if y == 1 and not ones:
        return "general line"
    if y == m and len(ones) == m + 2:
        return f"degree-{m} rational normal curve through all points"
    if y == m and len(ones) == m + 1:
        missing = next(i + 1 for i, x in enumerate(xs) if x == 0)
        return f"degree-{m} rational normal curve through all points except p_{missing}"
    return "unlabelled"


def moving_curve_rays(g: int, cap: int | None = None) -> tuple:
    """Dual of the effective cone of X^{2g}_{2g+2} in curve coordinates, with labels."""
    if g < 1:
        raise ValueError("g must be at least 1")
    m = 2 * g
    rays = _curve_rays_of_dual(eff_cone(m), cap)
    labels = tuple(_eff_facet_label(m, primitive(transport(r))) for r in rays)
    return VCone(m + 3, tuple(rays)), labels
