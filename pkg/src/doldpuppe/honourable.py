"""Honourable families of subsets of {0, ..., n-1}.

A surjection [n] -> [k] corresponds, through its fibre maxima, to a
k-element subset of {0, ..., n-1}.  A family of surjections is honourable
when these subsets cover {0, ..., n-1}; honourable families index the
non-degenerate cross-effect summands of a Dold-Puppe complex.

Sets are sorted tuples.  The order on sets puts larger sets first and
breaks ties lexicographically, so the empty set (the image of the unique
surjection onto [0]) is the largest set of all.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .simplex import binomial, from_triangle, ordinal

UNDERLINE = "̲"


def set_key(x) -> tuple:
    return (-len(x), tuple(x))


def sort_family(family) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(x)) for x in family), key=set_key))


def family_key(family) -> list:
    return [set_key(x) for x in family]


@lru_cache(maxsize=None)
def powerset(n: int, include_empty: bool = False) -> tuple[tuple[int, ...], ...]:
    """All subsets of {0..n-1} in increasing order."""
    sets = [c for size in range(n, -1 if include_empty else 0, -1)
            for c in combinations(range(n), size)]
    return tuple(sets)


def is_honourable(family, n: int) -> bool:
    covered = set()
    for x in family:
        covered.update(x)
    return covered == set(range(n))


def is_superfluous(x, family) -> bool:
    """True when dropping ``x`` from ``family`` leaves the union unchanged."""
    others = set()
    dropped = False
    for y in family:
        if y == x and not dropped:
            dropped = True
            continue
        others.update(y)
    return set(x) <= others


def underline_scan(family):
    """Run the underlining scan over a sorted family.

    Returns ``(superfluous set or None, underlined)`` where ``underlined[r]``
    is the set of underlined elements of the r-th set when the scan stopped.
    """
    family = sort_family(family)
    marks = [set() for _ in family]

    def full():
        for r, x in enumerate(family):
            if marks[r] >= set(x):
                return x
        return None

    if () in family:
        return (), marks
    for r in range(1, len(family)):
        earlier = set().union(*family[:r])
        for i in family[r]:
            if i in earlier:
                for t in range(r + 1):
                    if i in family[t]:
                        marks[t].add(i)
                hit = full()
                if hit is not None:
                    return hit, marks
    return None, marks


def find_superfluous(family):
    """The first set found superfluous by the underlining scan, or ``None``."""
    return underline_scan(family)[0]


def has_superfluous(family) -> bool:
    return find_superfluous(family) is not None


def _extension(prefix, after, n: int, max_card: int):
    """Smallest non-empty set above ``after`` that keeps ``prefix + [y]`` irredundant."""
    bound = set_key(after)
    for y in powerset(n):
        if len(y) > max_card or set_key(y) <= bound:
            continue
        if not has_superfluous((*prefix, y)):
            return y
    return None


def enumerate_families(n: int, start=None, max_sets: int | None = None):
    """Yield the list T_1, T_2, ... of irredundant families, in order.

    Starts at the single set ``start`` (default {0..n-1}).  Sets larger than
    ``start`` never appear.  With ``max_sets`` the search never grows a
    family beyond that many sets.
    """
    if n < 1:
        return
    start = tuple(range(n)) if start is None else tuple(sorted(start))
    max_card = len(start)
    last = (n - 1,)
    current = [start]
    while True:
        yield tuple(current)
        if len(current) == 1 and current[0] == last:
            return
        nxt = None
        if not is_honourable(current, n) and (max_sets is None or len(current) < max_sets):
            y = _extension(current, current[-1], n, max_card)
            if y is not None:
                nxt = [*current, y]
        if nxt is None:
            # replace the latest possible position by its next admissible set
            for s in range(len(current) - 1, -1, -1):
                y = _extension(current[:s], current[s], n, max_card)
                if y is not None:
                    nxt = [*current[:s], y]
                    break
        if nxt is None:
            return
        current = nxt


def enumerate_minimal_honourable(n: int, start=None, max_sets: int | None = None):
    """Minimal honourable families, in enumeration order."""
    return [T for T in enumerate_families(n, start, max_sets) if is_honourable(T, n)]


def complete_with_nonminimal(minimal, n: int, max_sets: int, max_card: int):
    """All honourable families with at most ``max_sets`` sets of size <= ``max_card``.

    Every honourable family contains a minimal one, so it suffices to add
    extra sets (the empty set included) to each minimal family.
    """
    pool = [x for x in powerset(n, include_empty=True) if len(x) <= max_card]
    seen = set()
    for base in minimal:
        if len(base) > max_sets or any(len(x) > max_card for x in base):
            continue
        rest = [x for x in pool if x not in base]
        for extra in range(0, max_sets - len(base) + 1):
            for add in combinations(rest, extra):
                seen.add(sort_family((*base, *add)))
    return sorted(seen, key=family_key)


def honourable_families(n: int, max_sets: int, max_card: int):
    """All honourable families relevant to a complex of length ``max_card``
    under a functor of degree ``max_sets``."""
    if n == 0:
        return [((),)] if max_sets >= 1 else []
    start = tuple(range(min(n, max_card)))
    if not start:
        return []
    minimal = enumerate_minimal_honourable(n, start, max_sets)
    return complete_with_nonminimal(minimal, n, max_sets, max_card)


def slots(family, n: int) -> list[tuple[int, int]]:
    """The ``(k, ordinal)`` of the surjection behind each set of the family."""
    return [(len(x), ordinal(from_triangle(x, n))) for x in family]


def honourable_existence(counts, n: int | None = None):
    """Greedy witness of an honourable family with ``counts[k]`` sets of size k.

    Returns ``None`` when ``sum(k * counts[k]) < n``.
    """
    counts = list(counts)
    n = len(counts) - 1 if n is None else n
    for k, a in enumerate(counts):
        if a > binomial(n, k) or a < 0:
            raise ValueError(f"cannot choose {a} distinct {k}-subsets of {n} elements")
    if sum(k * a for k, a in enumerate(counts)) < n:
        return None
    uncovered = set(range(n))
    chosen = []
    for k in range(len(counts) - 1, -1, -1):
        taken = set()
        for _ in range(counts[k]):
            best = max(
                (c for c in combinations(range(n), k) if c not in taken),
                key=lambda c: (len(uncovered & set(c)), [-v for v in c]),
            )
            taken.add(best)
            chosen.append(best)
            uncovered -= set(best)
    return sort_family(chosen)


def render_family(family, marks=None) -> str:
    if marks is None:
        _, marks = underline_scan(family)
        family = sort_family(family)
    parts = []
    for x, m in zip(family, marks):
        inner = ",".join(f"{i}{UNDERLINE}" if i in m else str(i) for i in x)
        parts.append("{" + inner + "}" if x else "∅")
    return " < ".join(parts)

