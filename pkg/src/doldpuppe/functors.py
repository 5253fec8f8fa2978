"""Symmetric, exterior and tensor powers on free modules, and their cross-effects.

Bases of F(Z^m) are index tuples:

* ``sym``: weakly increasing tuples, lexicographic
* ``ext``: strictly increasing tuples, lexicographic
* ``tensor``: all tuples, lexicographic

For F applied to a direct sum, a basis monomial *uses* a summand when one of
its indices lies in that summand's block.  The cross-effect indexed by a set
of summands is spanned by the monomials using exactly those summands, which
is the image of the deviation of the block projections.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from .linalg import ValidationError, mat_add, mat_scale, matmul, shape, transpose, zeros

FAMILIES = ("sym", "ext", "tensor")
_NAMES = {"sym": "Sym", "ext": "Ext", "tensor": "T"}


def _sort_sign(idx):
    """Sort ``idx``; return ``(sign, sorted)`` or ``(0, None)`` on a repeat."""
    idx = list(idx)
    sign = 1
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    if any(x == y for x, y in zip(idx, idx[1:])):
        return 0, None
    return sign, tuple(idx)


@dataclass(frozen=True)
class PolynomialFunctor:
    family: str
    degree: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown functor family {self.family!r}")
        if self.degree < 1:
            raise ValueError("functor degree must be at least 1")

    @classmethod
    def parse(cls, text: str) -> "PolynomialFunctor":
        """Parse ``"sym:2"``, ``"ext:3"`` or ``"tensor:2"``."""
        try:
            family, degree = text.split(":")
            return cls(family.strip().lower(), int(degree))
        except ValueError as exc:
            raise ValueError(f"bad functor {text!r}: {exc}") from None

    def __str__(self):
        return f"{self.family}:{self.degree}"

    @property
    def name(self) -> str:
        return f"{_NAMES[self.family]}{self.degree}"

    def with_degree(self, e: int) -> "PolynomialFunctor":
        return PolynomialFunctor(self.family, e)

    def basis(self, m: int) -> tuple[tuple[int, ...], ...]:
        return _basis(self.family, self.degree, m)

    def rank(self, m: int) -> int:
        return len(self.basis(m))

    def normalize(self, idx):
        """Map an index tuple to ``(sign, basis monomial)``; sign 0 if it vanishes."""
        if self.family == "sym":
            return 1, tuple(sorted(idx))
        if self.family == "ext":
            return _sort_sign(idx)
        return 1, tuple(idx)

    def image(self, columns, monomial) -> dict:
        """F(g) applied to one basis monomial; ``columns[j]`` is ``{i: g[i][j]}``."""
        out: dict = {}
        for choice in product(*(columns[j].items() for j in monomial)):
            coeff = 1
            for _, c in choice:
                coeff *= c
            sign, key = self.normalize(i for i, _ in choice)
            if sign:
                out[key] = out.get(key, 0) + sign * coeff
        return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _basis(family: str, d: int, m: int):
    if family == "sym":
        return tuple(combinations_with_replacement(range(m), d))
    if family == "ext":
        return tuple(combinations(range(m), d))
    return tuple(product(range(m), repeat=d))


def sparse_columns(g, cols: int | None = None) -> list[dict]:
    r, c = shape(g, cols)
    out = [dict() for _ in range(c)]
    for i, row in enumerate(g):
        for j, x in enumerate(row):
            if x:
                out[j][i] = x
    return out


def apply_functor(F: PolynomialFunctor, g, rows: int | None = None, cols: int | None = None):
    """Matrix of F(g) on the monomial bases; ``g`` maps Z^cols -> Z^rows."""
    r, c = shape(g, cols)
    if rows is not None and g and rows != r:
        raise ValidationError("row count does not match the matrix")
    r = rows if rows is not None else r
    src, tgt = F.basis(c), F.basis(r)
    index = {mono: a for a, mono in enumerate(tgt)}
    columns = sparse_columns(g, c)
    out = zeros(len(tgt), len(src))
    for b, mono in enumerate(src):
        for key, v in F.image(columns, mono).items():
            out[index[key]][b] = v
    return out


def deviation(F: PolynomialFunctor, fs, rows: int | None = None, cols: int | None = None):
    """F(f_1 | ... | f_m): the inclusion-exclusion sum over non-empty subsets."""
    if not fs:
        raise ValueError("deviation needs at least one map")
    shapes = {shape(f, cols) for f in fs}
    if len(shapes) != 1:
        raise ValidationError("deviation arguments must share a shape")
    r, c = shapes.pop()
    r = rows if rows is not None else r
    m = len(fs)
    total = zeros(F.rank(r), F.rank(c))
    for size in range(1, m + 1):
        for sub in combinations(fs, size):
            acc = zeros(r, c)
            for f in sub:
                acc = mat_add(acc, f)
            total = mat_add(total, mat_scale((-1) ** (m - size), apply_functor(F, acc, r, c)))
    return total


# ---------------------------------------------------------------------------
# direct sums

def offsets(ranks) -> list[int]:
    out, pos = [], 0
    for m in ranks:
        out.append(pos)
        pos += m
    return out


def injection(ranks, alpha):
    """i^alpha : sum of A_j (j in alpha) -> sum of all A_j; ``alpha`` 1-based."""
    off = offsets(ranks)
    total = sum(ranks)
    width = sum(ranks[j - 1] for j in alpha)
    m = zeros(total, width)
    col = 0
    for j in alpha:
        for t in range(ranks[j - 1]):
            m[off[j - 1] + t][col] = 1
            col += 1
    return m


def projection(ranks, alpha):
    return transpose(injection(ranks, alpha), sum(ranks[j - 1] for j in alpha))


def psi(ranks, j):
    """Idempotent of the full sum keeping only the j-th summand (1-based)."""
    total = sum(ranks)
    m = zeros(total, total)
    o = offsets(ranks)[j - 1]
    for t in range(ranks[j - 1]):
        m[o + t][o + t] = 1
    return m


@dataclass(frozen=True)
class CrossEffectSummand:
    """cr_r(F)(A_1, ..., A_r) for free arguments of the given ranks.

    ``basis`` entries are, for sym/ext, tuples of per-slot monomials (local
    indices) grouped by multidegree; for tensor, tuples of ``(slot, index)``
    pairs, one per tensor position.
    """

    functor: PolynomialFunctor
    ranks: tuple[int, ...]
    basis: tuple

    @property
    def arity(self) -> int:
        return len(self.ranks)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def ambient(self, slot_offsets) -> list[tuple[int, ...]]:
        """Each basis element as a monomial of F(ambient sum).

        ``slot_offsets`` must be increasing, so concatenating slot monomials
        gives sorted tuples and no exterior signs arise.
        """
        if self.functor.family == "tensor":
            return [tuple(slot_offsets[s] + t for s, t in elem) for elem in self.basis]
        return [tuple(slot_offsets[s] + t for s, mono in enumerate(elem) for t in mono)
                for elem in self.basis]


def _compositions(d: int, r: int):
    """Tuples of r positive integers summing to d, lexicographic."""
    for cuts in combinations(range(1, d), r - 1):
        bounds = (0, *cuts, d)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


@lru_cache(maxsize=None)
def cross_effect(F: PolynomialFunctor, ranks: tuple[int, ...]) -> CrossEffectSummand:
    r = len(ranks)
    d = F.degree
    basis: list = []
    if 1 <= r <= d and all(ranks):
        if F.family == "tensor":
            for f in product(range(r), repeat=d):
                if len(set(f)) == r:
                    for idx in product(*(range(ranks[s]) for s in f)):
                        basis.append(tuple(zip(f, idx)))
        else:
            for e in _compositions(d, r):
                slot_bases = [F.with_degree(e_j).basis(m) for e_j, m in zip(e, ranks)]
                basis.extend(product(*slot_bases))
    return CrossEffectSummand(F, tuple(ranks), tuple(basis))


def embedding(F: PolynomialFunctor, ranks, alpha):
    """Matrix of cr(A_j, j in alpha) -> F(A_1 + ... + A_s)."""
    summand = cross_effect(F, tuple(ranks[j - 1] for j in alpha))
    off = offsets(ranks)
    monos = summand.ambient([off[j - 1] for j in alpha])
    index = {mono: a for a, mono in enumerate(F.basis(sum(ranks)))}
    m = zeros(len(index), summand.rank)
    for b, mono in enumerate(monos):
        m[index[mono]][b] = 1
    return m


def decompose(F: PolynomialFunctor, ranks):
    """One ``(alpha, summand, embedding)`` per non-empty alpha with |alpha| <= d.

    Subsets selecting a rank-zero summand are omitted.
    """
    s = len(ranks)
    out = []
    for size in range(1, min(s, F.degree) + 1):
        for alpha in combinations(range(1, s + 1), size):
            if all(ranks[j - 1] for j in alpha):
                summand = cross_effect(F, tuple(ranks[j - 1] for j in alpha))
                out.append((alpha, summand, embedding(F, ranks, alpha)))
    return out


def induced_map(F: PolynomialFunctor, g, src_ranks, tgt_ranks, alpha_src, alpha_tgt):
    """The (alpha_tgt, alpha_src) block of F(g) between cross-effect summands."""
    rows, cols = sum(tgt_ranks), sum(src_ranks)
    if g and (len(g) != rows or any(len(row) != cols for row in g)):
        raise ValidationError("map does not match the summand ranks")
    if not g:
        g = zeros(rows, cols)
    Fg = apply_functor(F, g, rows, cols)
    src = cross_effect(F, tuple(src_ranks[j - 1] for j in alpha_src)).rank
    tgt = cross_effect(F, tuple(tgt_ranks[j - 1] for j in alpha_tgt)).rank
    emb = embedding(F, src_ranks, alpha_src)
    proj = transpose(embedding(F, tgt_ranks, alpha_tgt), tgt)
    return matmul(proj, matmul(Fg, emb, F.rank(cols), src), F.rank(rows), src)
