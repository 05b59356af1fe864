"""Numeric invariants of the symmetric GIT quotient of m+3 points on the line."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .linsys import hilbert_sigma_even, hilbert_sigma_odd


@dataclass(frozen=True)
class FactSheet:
    m: int
    parity: str
    g: int
    canonical_multiple: int
    pic_rank: int
    class_group_rank: int | None
    singular_count: int
    sing_multiplicity: int | None
    gplane_counts: dict
    distinguished_points: int | None
    aut_order: int
    degree: int
    N: int

    def to_json(self) -> dict:
        def s(x):
            return None if x is None else str(x)

        return {
            "m": self.m,
            "parity": self.parity,
            "g": self.g,
            "canonical_multiple": str(self.canonical_multiple),
            "pic_rank": str(self.pic_rank),
            "class_group_rank": s(self.class_group_rank),
            "singular_count": str(self.singular_count),
            "sing_multiplicity": s(self.sing_multiplicity),
            "gplane_counts": {k: str(v) for k, v in self.gplane_counts.items()},
            "distinguished_points": s(self.distinguished_points),
            "aut_order": str(self.aut_order),
            "degree": str(self.degree),
            "N": str(self.N),
        }


def facts(m: int) -> FactSheet:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if m % 2:
        g = (m + 1) // 2
        h = hilbert_sigma_odd(g)
        return FactSheet(
            m=m,
            parity="odd",
            g=g,
            canonical_multiple=-2,
            pic_rank=1,
            class_group_rank=2 * g + 2,
            singular_count=comb(2 * g + 1, g),
            sing_multiplicity=factorial(2 * g - 2) // factorial(g - 1) ** 2,
            gplane_counts={"span": comb(2 * g + 1, g + 1), "exceptional": 2 * g + 1},
            distinguished_points=None,
            aut_order=factorial(2 * g + 2),
            degree=h.degree,
            N=h.N,
        )
    g = m // 2
    h = hilbert_sigma_even(g)
    return FactSheet(
        m=m,
        parity="even",
        g=g,
        canonical_multiple=-1,
        pic_rank=2 * g + 3,
        class_group_rank=None,
        singular_count=0,
        sing_multiplicity=None,
        gplane_counts={"C": comb(2 * g + 2, g + 1), "D": comb(2 * g + 2, g)},
        distinguished_points=factorial(2 * g + 3) // (2 * factorial(g + 1) ** 2),
        aut_order=factorial(2 * g + 3),
        degree=h.degree,
        N=h.N,
    )
