"""The simplicial object Gamma(C.) of a bounded chain complex.

Gamma(C.)_n is the sum of one copy of C_k for every surjection [n] -> [k].
Copies are laid out with ``k`` descending and, inside each ``k``, by
ordinal ascending; this layout fixes every matrix produced here.

Face and degeneracy operators are built as :class:`BlockMap` values from
the S-set bookkeeping of :mod:`doldpuppe.simplex`, without composing maps.
:func:`block_map_direct` composes maps explicitly and serves as a check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .chain import ChainComplex
from .linalg import ValidationError, zeros
from .simplex import (
    binomial,
    compose_degeneracy,
    compose_face,
    enumerate_surjections,
    factor_nonsurjective,
    is_surjective,
    ordinal,
    s_complement,
    s_set,
    s_tilde_set,
)

IDENTITY, BOUNDARY = "identity", "boundary"


class Copy(NamedTuple):
    k: int
    ordinal: int


class BlockEntry(NamedTuple):
    target: Copy
    source: Copy
    tag: str


@dataclass(frozen=True)
class BlockMap:
    """A map Gamma_source_level -> Gamma_target_level, copy by copy.

    An ``identity`` entry sends a copy of C_k to a copy of C_k; a
    ``boundary`` entry sends it to a copy of C_{k-1} through d_k.
    """

    source_level: int
    target_level: int
    entries: tuple[BlockEntry, ...]


def copies(C: ChainComplex, n: int) -> list[Copy]:
    """The copies making up Gamma(C.)_n in layout order (zero ranks kept)."""
    return [Copy(k, o) for k in range(min(n, C.length), -1, -1)
            for o in range(1, binomial(n, k) + 1)]


def layout(C: ChainComplex, n: int) -> dict[Copy, int]:
    """Offset of each copy's first basis vector inside Gamma(C.)_n."""
    offsets, pos = {}, 0
    for c in copies(C, n):
        offsets[c] = pos
        pos += C.rank(c.k)
    return offsets


def gamma_rank(C: ChainComplex, n: int) -> int:
    if n < 0:
        raise ValueError("level must be non-negative")
    return sum(binomial(n, k) * C.rank(k) for k in range(min(n, C.length) + 1))


def _levels(C, n):
    return range(min(n, C.length) + 1)


def degeneracy_op(C: ChainComplex, n: int, i: int) -> BlockMap:
    """s_i : Gamma_{n-1} -> Gamma_n."""
    if not 0 <= i <= n - 1:
        raise IndexError(f"degeneracy s_{i} undefined at level {n}")
    entries = []
    for k in _levels(C, n - 1):
        targets = s_complement(n, k, i)
        for m, o in enumerate(targets, start=1):
            entries.append(BlockEntry(Copy(k, o), Copy(k, m), IDENTITY))
    return BlockMap(n - 1, n, tuple(entries))


def face_op_zero(C: ChainComplex, n: int) -> BlockMap:
    """d_0 : Gamma_n -> Gamma_{n-1}: b_{k,l} = d(c_{k+1,l}) + c_{k, C(n-1,k-1)+l}."""
    if n < 1:
        raise IndexError("d_0 needs n >= 1")
    entries = []
    for k in _levels(C, n - 1):
        shift = binomial(n - 1, k - 1)
        for l in range(1, binomial(n - 1, k) + 1):
            if k + 1 <= C.length:
                entries.append(BlockEntry(Copy(k, l), Copy(k + 1, l), BOUNDARY))
            entries.append(BlockEntry(Copy(k, l), Copy(k, shift + l), IDENTITY))
    return BlockMap(n, n - 1, tuple(entries))


def face_op_mid(C: ChainComplex, n: int, i: int) -> BlockMap:
    """d_i : Gamma_n -> Gamma_{n-1} for 0 < i < n."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"d_{i} is not a middle face at level {n}")
    entries = []
    for k in _levels(C, n - 1):
        alpha = s_complement(n, k, i)
        tilde = set(s_tilde_set(n, k, i))
        beta = [o for o in s_set(n, k, i) if o not in tilde]
        position = {o: m for m, o in enumerate(s_set(n - 1, k, i - 1))}
        for l in range(1, binomial(n - 1, k) + 1):
            entries.append(BlockEntry(Copy(k, l), Copy(k, alpha[l - 1]), IDENTITY))
            if l in position:
                entries.append(BlockEntry(Copy(k, l), Copy(k, beta[position[l]]), IDENTITY))
    return BlockMap(n, n - 1, tuple(entries))


def face_op_last(C: ChainComplex, n: int) -> BlockMap:
    """d_n : Gamma_n -> Gamma_{n-1}."""
    if n < 1:
        raise IndexError("d_n needs n >= 1")
    entries = []
    for k in _levels(C, n - 1):
        tilde = set(s_tilde_set(n, k, n))
        beta = [o for o in s_set(n, k, n) if o not in tilde]
        for l, o in enumerate(beta, start=1):
            entries.append(BlockEntry(Copy(k, l), Copy(k, o), IDENTITY))
    return BlockMap(n, n - 1, tuple(entries))


def face_op(C: ChainComplex, n: int, i: int) -> BlockMap:
    if not 0 <= i <= n or n < 1:
        raise IndexError(f"face d_{i} undefined at level {n}")
    if i == 0:
        return face_op_zero(C, n)
    if i == n:
        return face_op_last(C, n)
    return face_op_mid(C, n, i)


def block_map_direct(C: ChainComplex, n: int, i: int, kind: str) -> BlockMap:
    """Same operators by composing each surjection with delta_i / sigma_i."""
    entries = []
    if kind == "degeneracy":
        for k in _levels(C, n - 1):
            for p in enumerate_surjections(n - 1, k):
                entries.append(BlockEntry(Copy(k, ordinal(compose_degeneracy(p, i))),
                                          Copy(k, ordinal(p)), IDENTITY))
        return BlockMap(n - 1, n, tuple(sorted(entries)))
    for k in _levels(C, n):
        for p in enumerate_surjections(n, k):
            q = compose_face(p, i)
            src = Copy(k, ordinal(p))
            if is_surjective(q):
                entries.append(BlockEntry(Copy(k, ordinal(q)), src, IDENTITY))
            else:
                j, hat = factor_nonsurjective(q)
                if j == 0:
                    entries.append(BlockEntry(Copy(k - 1, ordinal(hat)), src, BOUNDARY))
    return BlockMap(n, n - 1, tuple(sorted(entries)))


def as_matrix(b: BlockMap, C: ChainComplex) -> list[list[int]]:
    rows = gamma_rank(C, b.target_level)
    cols = gamma_rank(C, b.source_level)
    tgt, src = layout(C, b.target_level), layout(C, b.source_level)
    m = zeros(rows, cols)
    for e in b.entries:
        if e.target not in tgt or e.source not in src:
            raise ValidationError(f"block entry {e} does not fit the complex")
        r0, c0 = tgt[e.target], src[e.source]
        if e.tag == IDENTITY:
            for j in range(C.rank(e.source.k)):
                m[r0 + j][c0 + j] += 1
        else:
            d = C.d(e.source.k)
            for a, row in enumerate(d):
                for j, x in enumerate(row):
                    if x:
                        m[r0 + a][c0 + j] += x
    return m


def face_matrix(C: ChainComplex, n: int, i: int) -> list[list[int]]:
    return as_matrix(face_op(C, n, i), C)


def degeneracy_matrix(C: ChainComplex, n: int, i: int) -> list[list[int]]:
    return as_matrix(degeneracy_op(C, n, i), C)


# ---------------------------------------------------------------------------
# symbolic rendering in the style (c1+c2, c3; b1; a)

def _letter(k: int) -> str:
    return "abcdefghijklmnopqrstuvwxyz"[k]


def _symbol(C: ChainComplex, level: int, c: Copy) -> str:
    if binomial(level, c.k) == 1:
        return _letter(c.k)
    return f"{_letter(c.k)}{c.ordinal}"


def render(b: BlockMap, C: ChainComplex) -> str:
    """Write the image of a generic element, one ``;``-separated block per k."""
    terms: dict[Copy, list] = {}
    for e in b.entries:
        terms.setdefault(e.target, []).append(e)
    blocks = []
    for k in reversed(_levels(C, b.target_level)):
        if C.rank(k) == 0:
            continue
        cells = []
        for o in range(1, binomial(b.target_level, k) + 1):
            es = sorted(terms.get(Copy(k, o), []), key=lambda e: (e.tag != BOUNDARY, e.source.ordinal))
            parts = []
            for e in es:
                if e.tag == BOUNDARY and C.rank(e.source.k) == 0:
                    continue
                s = _symbol(C, b.source_level, e.source)
                parts.append(f"∂({s})" if e.tag == BOUNDARY else s)
            cells.append("+".join(parts) or "0")
        blocks.append(", ".join(cells))
    return "(" + "; ".join(blocks) + ")"
