"""Exact rational arithmetic: vectors, matrices and univariate polynomials.

Scalars are :class:`fractions.Fraction`.  Vectors are tuples, matrices are
sequences of equal-length tuples.  Nothing here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
QVector = tuple  # tuple[Fraction, ...]
QMatrix = Sequence[Sequence]


def q(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch.isspace() for ch in text):
            raise ValueError(f"malformed rational {value!r}")
        try:
            return Fraction(text)
        except ValueError:
            raise ValueError(f"malformed rational {value!r}") from None
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def qvec(values: Iterable) -> tuple:
    return tuple(q(v) for v in values)


def fmt(x) -> str:
    """Serialize a rational as ``"p/q"`` (``"p"`` when the denominator is 1)."""
    x = q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def fmt_vec(v) -> list:
    return [fmt(x) for x in v]


def dot(u, v):
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), 0)


def primitive(v, *, signed: bool = False) -> tuple:
    """Integer vector on the same ray as ``v`` with coprime entries.

    Only positive rescaling is used unless ``signed`` is set, in which case
    the first nonzero entry is also made positive (for lines, not rays).
    The zero vector maps to a zero integer vector.
    """
    fr = [q(x) for x in v]
    den = 1
    for x in fr:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(ints)
    ints = [a // g for a in ints]
    if signed:
        for a in ints:
            if a:
                if a < 0:
                    ints = [-b for b in ints]
                break
    return tuple(ints)


def _bitlen(x: Fraction) -> int:
    return (abs(x.numerator) * x.denominator).bit_length()


def _echelon_int(rows: list[list[int]]) -> list[list[int]]:
    """Fraction-free row echelon form of an integer matrix (rows are content-free).

    Pivot: leftmost column with a nonzero entry among the remaining rows; among
    those rows, the one whose pivot entry has the smallest bit length.
    """
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    done: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        cands = [r for r in rows if r[col]]
        if not cands:
            col += 1
            continue
        piv = min(cands, key=lambda r: (abs(r[col]).bit_length(), r))
        rows.remove(piv)
        p = piv[col]
        nxt = []
        for r in rows:
            a = r[col]
            if a:
                r = [p * x - a * y for x, y in zip(r, piv)]
                g = 0
                for x in r:
                    g = gcd(g, x)
                if g == 0:
                    continue
                if g > 1:
                    r = [x // g for x in r]
            nxt.append(r)
        rows = nxt
        done.append(piv)
        col += 1
    return done


def _int_rows(M) -> list[list[int]]:
    return [list(primitive(row)) for row in M]


def rank(M) -> int:
    """Exact rank over the rationals."""
    M = list(M)
    if not M:
        return 0
    return len(_echelon_int(_int_rows(M)))


def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [[q(x) for x in r] for r in M]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        cands = [i for i in range(top, len(rows)) if rows[i][col] != 0]
        if not cands:
            continue
        best = min(cands, key=lambda i: (_bitlen(rows[i][col]), i))
        rows[top], rows[best] = rows[best], rows[top]
        pv = rows[top][col]
        rows[top] = [x / pv for x in rows[top]]
        for i in range(len(rows)):
            if i != top and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[top])]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def kernel_basis(M, ncols: int | None = None) -> list[tuple]:
    """Basis of ``{v : M v = 0}`` as primitive, sign-normalized integer vectors.

    ``ncols`` is needed only when ``M`` has no rows.
    """
    M = [list(r) for r in M]
    if ncols is None:
        if not M:
            raise ValueError("ncols required for a matrix without rows")
        ncols = len(M[0])
    if any(len(r) != ncols for r in M):
        raise ValueError("matrix is not rectangular")
    R, pivots = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(primitive(v, signed=True))
    return basis


def row_space_basis(M) -> list[tuple]:
    """Canonical basis of the row space (reduced echelon rows, made primitive)."""
    R, _ = rref(M)
    return [primitive(r, signed=True) for r in R]


def mat_vec(M, v) -> tuple:
    return tuple(dot(row, v) for row in M)


def project_away(v, basis) -> tuple:
    """Orthogonal projection of ``v`` onto the complement of ``span(basis)``."""
    if not basis:
        return tuple(q(x) for x in v)
    B = [[q(x) for x in b] for b in basis]
    k = len(B)
    gram = [[dot(B[i], B[j]) for j in range(k)] for i in range(k)]
    rhs = [dot(B[i], v) for i in range(k)]
    aug = [gram[i] + [rhs[i]] for i in range(k)]
    R, piv = rref(aug)
    coef = [Fraction(0)] * k
    for row, p in zip(R, piv):
        coef[p] = row[-1]
    out = [q(x) for x in v]
    for c, b in zip(coef, B):
        if c:
            out = [x - c * y for x, y in zip(out, b)]
    return tuple(out)


@dataclass(frozen=True)
class QPolynomial:
    """Univariate polynomial with rational coefficients, lowest degree first."""

    coefficients: tuple = ()

    def __post_init__(self):
        cs = [q(c) for c in self.coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, t):
        t = q(t)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (n - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (n - len(other.coefficients))
        return QPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return QPolynomial(tuple(out))

    __rmul__ = __mul__

    def to_json(self) -> list:
        return fmt_vec(self.coefficients)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coef = fmt(c)
            if mono and c == 1:
                coef = ""
            elif mono and c == -1:
                coef = "-"
            elif mono:
                coef = f"({coef})*" if "/" in coef else f"{coef}*"
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    return QPolynomial.constant(x)


def binomial_poly(alpha: int, beta: int, n: int) -> QPolynomial:
    """``binom(alpha*t + beta, n)`` as a polynomial in ``t``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = QPolynomial.constant(1)
    for i in range(n):
        p = p * QPolynomial((beta - i, alpha))
    return p * Fraction(1, factorial(n))


def binom0(a: int, n: int) -> int:
    """Integer binomial that vanishes whenever ``a < n`` (including negative ``a``)."""
    if n < 0 or a < n:
        return 0
    num = 1
    for i in range(n):
        num *= a - i
    return num // factorial(n)
