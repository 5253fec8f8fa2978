"""Order-preserving maps [n] -> [k] encoded by their fibre sizes.

A monotone map ``mu: [n] -> [k]`` is stored as the tuple
``(|mu^-1(0)|, ..., |mu^-1(k)|)``: ``k + 1`` non-negative entries summing to
``n + 1``.  Surjections are exactly the tuples with no zero entry.  Tuples of
equal length are ordered lexicographically, which is Python's native tuple
order.

Ordinals of surjections are 1-based, matching the row labels of the
face/degeneracy tables.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate, combinations, combinations_with_replacement
from math import comb

MAX_N = 64


def binomial(n: int, k: int) -> int:
    """Binomial coefficient that is zero for negative arguments."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _check_n(n: int) -> None:
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the supported maximum {MAX_N}")


def source_top(p) -> int:
    """The ``n`` of the source ``[n]`` of the map encoded by ``p``."""
    return sum(p) - 1


def is_surjective(p) -> bool:
    return all(x > 0 for x in p)


def compare(a, b) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    if len(a) != len(b) or sum(a) != sum(b):
        raise ValueError(f"cannot compare maps of different shape: {a} vs {b}")
    return (a > b) - (a < b)


def _from_cuts(cuts, n: int) -> tuple[int, ...]:
    # cuts are the fibre maxima of all but the last fibre
    bounds = [-1, *cuts, n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


@lru_cache(maxsize=None)
def enumerate_surjections(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All of Sur([n],[k]) in increasing order."""
    _check_n(n)
    if k < 0 or k > n:
        return ()
    return tuple(_from_cuts(c, n) for c in combinations(range(n), k))


@lru_cache(maxsize=None)
def enumerate_maps(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All of Mor([n],[k]) in increasing order."""
    _check_n(n)
    if k < 0 or n < 0:
        return ()
    return tuple(_from_cuts(c, n) for c in combinations_with_replacement(range(-1, n + 1), k))


@lru_cache(maxsize=None)
def _ordinals(n: int, k: int) -> dict:
    return {p: i for i, p in enumerate(enumerate_surjections(n, k), start=1)}


def ordinal(p) -> int:
    """1-based position of the surjection ``p`` in Sur([n],[k])."""
    try:
        return _ordinals(source_top(p), len(p) - 1)[tuple(p)]
    except KeyError:
        raise ValueError(f"{p} is not a surjection") from None


def surjection(n: int, k: int, ordinal: int) -> tuple[int, ...]:
    surj = enumerate_surjections(n, k)
    if not 1 <= ordinal <= len(surj):
        raise IndexError(f"ordinal {ordinal} out of range for Sur([{n}],[{k}])")
    return surj[ordinal - 1]


def _split(p, i: int) -> int:
    """Index ``j`` of the entry ``d = p[j]`` with ``|x| < i+1 <= |x| + d``."""
    total = 0
    for j, d in enumerate(p):
        if total < i + 1 <= total + d:
            return j
        total += d
    raise AssertionError("unreachable")


def compose_degeneracy(p, i: int) -> tuple[int, ...]:
    """``mu * sigma_i`` for ``mu: [n-1] -> [k]``; ``i`` in ``0..n-1``."""
    n = sum(p)
    if not 0 <= i <= n - 1:
        raise IndexError(f"degeneracy index {i} out of range 0..{n - 1}")
    j = _split(p, i)
    return (*p[:j], p[j] + 1, *p[j + 1:])


def compose_face(p, i: int) -> tuple[int, ...]:
    """``mu * delta_i`` for ``mu: [n] -> [k]``; ``i`` in ``0..n``.

    The result may be improper (one fibre emptied).
    """
    n = sum(p) - 1
    if not 0 <= i <= n or n < 1:
        raise IndexError(f"face index {i} out of range 0..{n}")
    j = _split(p, i)
    return (*p[:j], p[j] - 1, *p[j + 1:])


def factor_nonsurjective(p) -> tuple[int, tuple[int, ...]]:
    """Write a map with exactly one empty fibre as ``delta_j * mu_hat``.

    Returns ``(j, mu_hat)`` where ``j`` is the position of the zero entry.
    """
    zeros = [j for j, x in enumerate(p) if x == 0]
    if not zeros:
        raise ValueError(f"{p} is surjective; nothing to factor")
    if len(zeros) > 1:
        raise ValueError(f"{p} has {len(zeros)} empty fibres; only one is supported")
    j = zeros[0]
    return j, (*p[:j], *p[j + 1:])


def _prefix_sums(p) -> set[int]:
    return {0, *accumulate(p)}


def _check_index(n: int, k: int, i: int) -> None:
    _check_n(n)
    if not 0 <= i <= n:
        raise IndexError(f"index {i} out of range 0..{n}")
    if not 0 <= k <= n:
        raise IndexError(f"k={k} out of range 0..{n}")


@lru_cache(maxsize=None)
def s_set(n: int, k: int, i: int) -> tuple[int, ...]:
    """Ordinals of surjections whose fibre sizes start with a partition of i+1."""
    _check_index(n, k, i)
    return tuple(
        o for o, p in enumerate(enumerate_surjections(n, k), start=1) if i + 1 in _prefix_sums(p)
    )


@lru_cache(maxsize=None)
def s_tilde_set(n: int, k: int, i: int) -> tuple[int, ...]:
    """Ordinals of surjections of the form ``(x, 1, y)`` with ``|x| == i``."""
    _check_index(n, k, i)
    out = []
    for o, p in enumerate(enumerate_surjections(n, k), start=1):
        sums = _prefix_sums(p)
        if i in sums and i + 1 in sums:
            out.append(o)
    return tuple(out)


def s_complement(n: int, k: int, i: int) -> tuple[int, ...]:
    inside = set(s_set(n, k, i))
    return tuple(o for o in range(1, binomial(n, k) + 1) if o not in inside)


def triangle(p) -> tuple[int, ...]:
    """The fibre maxima of all fibres but the last, as a sorted tuple."""
    if not is_surjective(p):
        raise ValueError(f"{p} is not a surjection")
    return tuple(s - 1 for s in accumulate(p[:-1]))


def from_triangle(subset, n: int) -> tuple[int, ...]:
    """Inverse of :func:`triangle` for a subset of ``{0, ..., n-1}``."""
    cuts = sorted(subset)
    if cuts and (cuts[0] < 0 or cuts[-1] >= n or len(set(cuts)) != len(cuts)):
        raise ValueError(f"{subset} is not a subset of 0..{n - 1}")
    return _from_cuts(cuts, n)


# ---------------------------------------------------------------------------
# the x / x* tables

EMPTY, CROSS, CROSS_STAR = "", "x", "x*"


def table_grid(n: int, k: int) -> list[list[str]]:
    """Rows indexed by ordinal, columns by i = 0..n."""
    surj = enumerate_surjections(n, k)
    grid = [[EMPTY] * (n + 1) for _ in surj]
    for i in range(n + 1):
        tilde = set(s_tilde_set(n, k, i))
        for o in s_set(n, k, i):
            grid[o - 1][i] = CROSS_STAR if o in tilde else CROSS
    return grid


def render_table(n: int, k: int) -> str:
    surj = enumerate_surjections(n, k)
    grid = table_grid(n, k)
    labels = [f"{o:>2} ({','.join(map(str, p))})" for o, p in enumerate(surj, start=1)]
    width = max([len(s) for s in labels] + [0])
    marks = {EMPTY: "", CROSS: "×", CROSS_STAR: "×*"}
    lines = [f"Table for (n,k)=({n},{k}):",
             " " * width + " |" + "|".join(f"{i:^4}" for i in range(n + 1)) + "|"]
    lines.append("-" * len(lines[-1]))
    for label, row in zip(labels, grid):
        lines.append(label.ljust(width) + " |" + "|".join(f"{marks[c]:^4}" for c in row) + "|")
    return "\n".join(lines)
