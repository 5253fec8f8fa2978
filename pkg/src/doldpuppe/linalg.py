"""Exact integer linear algebra.

Matrices are plain lists of rows holding Python ints, so entries never
overflow.  The orientation everywhere in the package is "columns index the
source basis, rows index the target basis".
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ValidationError(ValueError):
    """Raised for malformed user input (shapes, non-complexes, ...)."""


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> list[list[int]]:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def shape(m, cols: int | None = None) -> tuple[int, int]:
    """Return ``(rows, cols)``.  A matrix with no rows needs ``cols`` given."""
    if not m:
        return 0, (cols or 0)
    return len(m), len(m[0])


def transpose(m, cols: int | None = None) -> list[list[int]]:
    r, c = shape(m, cols)
    return [[m[i][j] for i in range(r)] for j in range(c)]


def matmul(a, b, inner: int | None = None, cols: int | None = None) -> list[list[int]]:
    """Product ``a @ b``; only non-zero entries of either factor are visited.

    ``inner`` and ``cols`` disambiguate shapes when one factor has no rows.
    """
    ra, ca = shape(a, inner)
    rb, cb = shape(b, cols)
    if ca != rb:
        raise ValidationError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    sparse_b = [[(j, y) for j, y in enumerate(row) if y] for row in b]
    out = zeros(ra, cb)
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if x:
                for j, y in sparse_b[k]:
                    acc[j] += x * y
    return out


def is_zero(m) -> bool:
    return all(not x for row in m for x in row)


def mat_add(a, b) -> list[list[int]]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: int, a) -> list[list[int]]:
    return [[c * x for x in row] for row in a]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class _Smith:
    """In-place diagonalisation ``L @ M @ R == D`` with unimodular L, R.

    The inverses of L and R are tracked alongside so that
    ``M == Linv @ D @ Rinv`` can be read off without a matrix inversion.
    """

    def __init__(self, m, cols: int | None = None, track: bool = True):
        self.rows, self.cols = shape(m, cols)
        self.D = [list(r) for r in m]
        self.track = track
        if track:
            self.L = identity(self.rows)
            self.Linv = identity(self.rows)
            self.R = identity(self.cols)
            self.Rinv = identity(self.cols)

    # 2x2 unimodular transforms on a pair of rows / columns; det is +-1.
    def rows2(self, i, j, p, q, r, s):
        D = self.D
        ri, rj = D[i], D[j]
        D[i] = [p * a + q * b for a, b in zip(ri, rj)]
        D[j] = [r * a + s * b for a, b in zip(ri, rj)]
        if self.track:
            L = self.L
            li, lj = L[i], L[j]
            L[i] = [p * a + q * b for a, b in zip(li, lj)]
            L[j] = [r * a + s * b for a, b in zip(li, lj)]
            det = p * s - q * r
            for row in self.Linv:
                a, b = row[i], row[j]
                row[i] = (s * a - r * b) * det
                row[j] = (-q * a + p * b) * det

    def cols2(self, i, j, p, q, r, s):
        # new col_i = p*col_i + r*col_j ; new col_j = q*col_i + s*col_j
        for row in self.D:
            a, b = row[i], row[j]
            if a or b:
                row[i] = p * a + r * b
                row[j] = q * a + s * b
        if self.track:
            for row in self.R:
                a, b = row[i], row[j]
                row[i] = p * a + r * b
                row[j] = q * a + s * b
            det = p * s - q * r
            Ri = self.Rinv
            ri, rj = Ri[i], Ri[j]
            Ri[i] = [(s * a - q * b) * det for a, b in zip(ri, rj)]
            Ri[j] = [(-r * a + p * b) * det for a, b in zip(ri, rj)]

    def add_row(self, i, j, c):
        """row_i += c * row_j"""
        self.rows2(i, j, 1, c, 0, 1)

    def add_col(self, i, j, c):
        """col_i += c * col_j"""
        self.cols2(i, j, 1, 0, c, 1)

    def swap_rows(self, i, j):
        if i != j:
            self.rows2(i, j, 0, 1, 1, 0)

    def swap_cols(self, i, j):
        if i != j:
            self.cols2(i, j, 0, 1, 1, 0)

    def negate_row(self, i):
        D = self.D
        D[i] = [-x for x in D[i]]
        if self.track:
            self.L[i] = [-x for x in self.L[i]]
            for row in self.Linv:
                row[i] = -row[i]

    def run(self) -> int:
        D = self.D
        m, n = self.rows, self.cols
        active = n  # columns >= active are known zero in rows >= t
        t = 0
        while t < m and t < active:
            # find a column with a nonzero entry at or below row t
            j = t
            while j < active:
                if any(D[i][j] for i in range(t, m)):
                    break
                active -= 1
                self.swap_cols(j, active)
            if j >= active:
                break
            self.swap_cols(t, j)
            while True:
                # pivot: smallest nonzero |entry| in column t (rows >= t)
                p = min((i for i in range(t, m) if D[i][t]), key=lambda i: abs(D[i][t]))
                self.swap_rows(t, p)
                piv = D[t][t]
                dirty = False
                for i in range(t + 1, m):
                    if D[i][t]:
                        self.add_row(i, t, -(D[i][t] // piv))
                        if D[i][t]:
                            dirty = True
                if dirty:
                    continue
                for j in range(t + 1, n):
                    if D[t][j]:
                        self.add_col(j, t, -(D[t][j] // piv))
                        if D[t][j]:
                            dirty = True
                if dirty:
                    # bring the smallest remainder of row t into the pivot slot
                    q = min((j for j in range(t, n) if D[t][j]), key=lambda j: abs(D[t][j]))
                    self.swap_cols(t, q)
                    continue
                break
            if D[t][t] < 0:
                self.negate_row(t)
            t += 1
        r = t
        # enforce the divisibility chain d_1 | d_2 | ...
        for i in range(r):
            for j in range(i + 1, r):
                a, b = D[i][i], D[j][j]
                if b % a:
                    x, y, g = xgcd(a, b)
                    self.rows2(i, j, x, y, -b // g, a // g)
                    self.cols2(i, j, 1, -y * b // g, 1, x * a // g)
        return r


def smith_normal_form(m, cols: int | None = None):
    """Return ``(U, D, V)`` with ``m == U @ D @ V``, U and V unimodular.

    ``D`` is diagonal (same shape as ``m``) with non-negative entries, each
    nonzero entry dividing the next.
    """
    s = _Smith(m, cols)
    s.run()
    return s.Linv, s.D, s.Rinv


def invariant_factors(m, cols: int | None = None) -> list[int]:
    s = _Smith(m, cols, track=False)
    r = s.run()
    return [s.D[i][i] for i in range(r)]


def rank(m, cols: int | None = None) -> int:
    return len(invariant_factors(m, cols))


def kernel_basis(m, cols: int | None = None) -> list[list[int]]:
    """Integer basis of the kernel of ``m``, as a list of column vectors."""
    s = _Smith(m, cols)
    r = s.run()
    return [[s.R[i][j] for i in range(s.cols)] for j in range(r, s.cols)]


def free_cokernel(m, rows: int, cols: int | None = None):
    """Projection and lift for ``Z^rows / colspan(m)`` when that quotient is free.

    Returns ``(P, L)`` with ``P @ L == I``, ``P`` killing the column span of
    ``m``.  Raises ``ValidationError`` if the quotient has torsion.
    """
    if rows == 0:
        return [], []
    if not m:
        m = [[] for _ in range(rows)]
        cols = 0
    s = _Smith(m, cols)
    r = s.run()
    if any(s.D[i][i] != 1 for i in range(r)):
        raise ValidationError("quotient is not free")
    proj = [list(s.L[i]) for i in range(r, rows)]
    lift = [[s.Linv[i][j] for j in range(r, rows)] for i in range(rows)]
    return proj, lift


def rank_mod_p(m, p: int) -> int:
    rows = [[x % p for x in row] for row in m]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int
    torsion: tuple[int, ...] = field(default=())

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def check_complex(ranks, differentials) -> None:
    """Validate shapes and ``d_{k-1} d_k == 0``; ``differentials[k-1]`` is d_k."""
    if len(differentials) != max(len(ranks) - 1, 0):
        raise ValidationError(
            f"expected {max(len(ranks) - 1, 0)} differentials, got {len(differentials)}"
        )
    for k, d in enumerate(differentials, start=1):
        if len(d) != ranks[k - 1] or any(len(row) != ranks[k] for row in d):
            raise ValidationError(
                f"differential {k} must be {ranks[k - 1]}x{ranks[k]}"
            )
    for k in range(2, len(ranks)):
        prod = matmul(differentials[k - 2], differentials[k - 1], ranks[k - 1], ranks[k])
        if not is_zero(prod):
            raise ValidationError(f"d_{k - 1} o d_{k} != 0")


def homology(ranks, differentials, n: int) -> HomologyGroup:
    """H_n of the complex; torsion comes from the invariant factors of d_{n+1}."""
    check_complex(ranks, differentials)
    if n < 0 or n >= len(ranks):
        return HomologyGroup(0)
    rank_out = rank(differentials[n - 1], ranks[n]) if n >= 1 else 0
    if n + 1 < len(ranks):
        factors = invariant_factors(differentials[n], ranks[n + 1])
    else:
        factors = []
    free = ranks[n] - rank_out - len(factors)
    return HomologyGroup(free, tuple(f for f in factors if f > 1))


def homology_mod_p(ranks, differentials, n: int, p: int) -> int:
    """Dimension of H_n after reducing all matrices mod the prime ``p``."""
    check_complex(ranks, differentials)
    if n < 0 or n >= len(ranks):
        return 0
    out = rank_mod_p(differentials[n - 1], p) if n >= 1 else 0
    inn = rank_mod_p(differentials[n], p) if n + 1 < len(ranks) else 0
    return ranks[n] - out - inn
