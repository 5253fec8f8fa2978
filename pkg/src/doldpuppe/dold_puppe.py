"""The Dold-Puppe complex N F Gamma(C.) of a bounded complex of free modules.

In degree n the complex is the sum, over honourable families of
surjections, of the cross-effect of F evaluated at the corresponding
copies of C_k inside Gamma(C.)_n.  Everything else in F(Gamma(C.)_n) is
degenerate, so the quotient is realised by projecting onto these
summands.  :func:`quotient_oracle` forms the quotient directly instead and
is used to cross-check :func:`build`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import honourable as hon
from .chain import ChainComplex
from .functors import PolynomialFunctor, apply_functor, cross_effect, sparse_columns
from .gamma import Copy, degeneracy_matrix, face_matrix, gamma_rank, layout
from .linalg import (
    ValidationError,
    free_cokernel,
    homology,
    invariant_factors,
    is_zero,
    mat_add,
    mat_scale,
    matmul,
    zeros,
)


class ConsistencyError(RuntimeError):
    """A built complex failed an internal check such as Delta o Delta == 0."""


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds the configured size limit."""


def _letter(k: int) -> str:
    return "ABCDEFGHIJKLMNOPQRSTUVWXYZ"[k]


def _copy_name(k: int, o: int) -> str:
    return _letter(k) if k == 0 else f"{_letter(k)}{o}"


@dataclass(frozen=True)
class DPSummand:
    """One cross-effect summand of the Dold-Puppe complex in degree ``n``."""

    n: int
    family: tuple[tuple[int, ...], ...]
    slots: tuple[Copy, ...]
    functor: PolynomialFunctor
    ranks: tuple[int, ...]

    @property
    def cross_effect(self):
        return cross_effect(self.functor, self.ranks)

    @property
    def rank(self) -> int:
        return self.cross_effect.rank

    @property
    def name(self) -> str:
        args = [_copy_name(k, o) for k, o in self.slots]
        r, d = len(args), self.functor.degree
        if r == 1:
            return f"{self.functor.name}({args[0]})"
        if r == d and self.functor.family != "tensor":
            return "⊗".join(args)
        return f"cr{r}({self.functor.name})({','.join(args)})"

    def to_dict(self) -> dict:
        return {
            "family": [list(x) for x in self.family],
            "slots": [{"k": k, "ordinal": o} for k, o in self.slots],
            "rank": self.rank,
            "name": self.name,
        }


def dp_degree(F: PolynomialFunctor, C: ChainComplex, n: int) -> list[DPSummand]:
    """The non-zero summands of the Dold-Puppe complex in degree ``n``, in order."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    out = []
    for family in hon.honourable_families(n, F.degree, C.length):
        slots = tuple(Copy(k, o) for k, o in hon.slots(family, n))
        ranks = tuple(C.rank(k) for k, _ in slots)
        s = DPSummand(n, family, slots, F, ranks)
        if s.rank:
            out.append(s)
    return out


def _ambient_monomials(summand: DPSummand, offsets: dict) -> list[tuple[int, ...]]:
    return summand.cross_effect.ambient([offsets[c] for c in summand.slots])


def _index(summands, offsets):
    """Map each ambient monomial of the given summands to its position in the sum."""
    index, pos = {}, 0
    for s in summands:
        for mono in _ambient_monomials(s, offsets):
            index[mono] = pos
            pos += 1
    return index, pos


def dp_face(F: PolynomialFunctor, C: ChainComplex, n: int, i: int, source=None, target=None):
    """The map Q_n -> Q_{n-1} induced by d_i: F(d_i) followed by projection."""
    source = dp_degree(F, C, n) if source is None else source
    target = dp_degree(F, C, n - 1) if target is None else target
    src_off, tgt_off = layout(C, n), layout(C, n - 1)
    tgt_index, rows = _index(target, tgt_off)
    columns = sparse_columns(face_matrix(C, n, i), gamma_rank(C, n))
    cols = sum(s.rank for s in source)
    out = zeros(rows, cols)
    col = 0
    for s in source:
        for mono in _ambient_monomials(s, src_off):
            for key, v in F.image(columns, mono).items():
                row = tgt_index.get(key)
                if row is not None:
                    out[row][col] += v
            col += 1
    return out


def dp_differential(F: PolynomialFunctor, C: ChainComplex, n: int, source=None, target=None):
    """Delta_n = sum of (-1)^i times the induced face maps."""
    if n < 1:
        raise ValueError("the differential starts in degree 1")
    source = dp_degree(F, C, n) if source is None else source
    target = dp_degree(F, C, n - 1) if target is None else target
    total = zeros(sum(s.rank for s in target), sum(s.rank for s in source))
    for i in range(n + 1):
        total = mat_add(total, mat_scale((-1) ** i, dp_face(F, C, n, i, source, target)))
    return total


def block(matrix, source, target, src_label, tgt_label):
    """Extract the (target summand, source summand) block of a matrix."""
    def find(summands, label):
        pos = 0
        for s in summands:
            if s.family == label or s.name == label:
                return pos, s.rank
            pos += s.rank
        raise KeyError(label)

    r0, r = find(target, tgt_label)
    c0, c = find(source, src_label)
    return [row[c0:c0 + c] for row in matrix[r0:r0 + r]]


@dataclass(frozen=True)
class DPComplex:
    functor: PolynomialFunctor
    source: ChainComplex
    complex: ChainComplex
    labels: tuple[tuple[DPSummand, ...], ...] = field(default=())

    @property
    def ranks(self) -> tuple[int, ...]:
        return self.complex.ranks

    @property
    def top_degree(self) -> int:
        """Highest degree with a non-zero term, or -1 for the zero complex."""
        nz = [n for n, r in enumerate(self.ranks) if r]
        return nz[-1] if nz else -1

    def homology(self, n: int):
        return homology(self.complex.ranks, self.complex.differentials, n)

    def invariant_factors(self) -> list[list[int]]:
        return [invariant_factors(d, self.complex.rank(k))
                for k, d in enumerate(self.complex.differentials, start=1)]

    def to_dict(self) -> dict:
        data = self.complex.to_dict()
        data["functor"] = str(self.functor)
        if self.labels:
            data["labels"] = [[s.to_dict() for s in degree] for degree in self.labels]
        return data


def length_bound(F: PolynomialFunctor, C: ChainComplex) -> int:
    return C.length * F.degree


def _check_squares(diffs, ranks, labels=None):
    for n in range(2, len(ranks)):
        prod = matmul(diffs[n - 2], diffs[n - 1], ranks[n - 1], ranks[n])
        if is_zero(prod):
            continue
        msg = f"Delta_{n - 1} o Delta_{n} is not zero"
        if labels:
            bad = []
            for t in labels[n - 2]:
                for s in labels[n]:
                    b = block(prod, labels[n], labels[n - 2], s.family, t.family)
                    if not is_zero(b):
                        bad.append(f"{s.name} -> {t.name}: {b}")
            msg += "; non-zero blocks: " + "; ".join(bad)
        raise ConsistencyError(msg)


def build(F: PolynomialFunctor, C: ChainComplex) -> DPComplex:
    """Assemble the complex in degrees 0 .. length * degree."""
    if not C.check:
        raise ValidationError("build needs a genuine chain complex")
    top = length_bound(F, C)
    labels = [dp_degree(F, C, n) for n in range(top + 1)]
    ranks = [sum(s.rank for s in ss) for ss in labels]
    diffs = [dp_differential(F, C, n, labels[n], labels[n - 1]) for n in range(1, top + 1)]
    _check_squares(diffs, ranks, labels)
    return DPComplex(F, C, ChainComplex(tuple(ranks), tuple(diffs), check=False), tuple(map(tuple, labels)))


# ---------------------------------------------------------------------------
# independent route: quotient of F(Gamma_n) by the degenerate part

def _degenerate_matrix(F, C, n):
    """Columns spanning the images of F(s_0), ..., F(s_{n-1})."""
    rows = F.rank(gamma_rank(C, n))
    cols = F.rank(gamma_rank(C, n - 1)) if n >= 1 else 0
    blocks = [apply_functor(F, degeneracy_matrix(C, n, i), gamma_rank(C, n), gamma_rank(C, n - 1))
              for i in range(n)]
    return [sum((b[r] for b in blocks), []) for r in range(rows)], rows, cols * n


def quotient_oracle(F: PolynomialFunctor, C: ChainComplex, n_max: int | None = None,
                    max_ambient: int = 600) -> DPComplex:
    """Normalise F(Gamma(C.)) by explicit quotients, without honourable families.

    The degenerate submodule is the column span of all F(s_i); the quotient
    and the induced differential come from its Smith normal form.
    """
    if not C.check:
        raise ValidationError("the oracle needs a genuine chain complex")
    n_max = length_bound(F, C) if n_max is None else n_max
    sizes = [F.rank(gamma_rank(C, n)) for n in range(n_max + 1)]
    if max(sizes) > max_ambient:
        raise ResourceLimitError(
            f"F(Gamma_n) has rank {max(sizes)} > {max_ambient}; raise max_ambient to proceed")
    quots = []
    for n in range(n_max + 1):
        m, rows, cols = _degenerate_matrix(F, C, n)
        quots.append(free_cokernel(m, rows, cols))
    ranks = [len(P) for P, _ in quots]
    diffs = []
    for n in range(1, n_max + 1):
        delta = zeros(sizes[n - 1], sizes[n])
        for i in range(n + 1):
            Fd = apply_functor(F, face_matrix(C, n, i), gamma_rank(C, n - 1), gamma_rank(C, n))
            delta = mat_add(delta, mat_scale((-1) ** i, Fd))
        P = quots[n - 1][0]
        lift = quots[n][1]
        lifted = matmul(delta, lift, sizes[n], ranks[n]) if sizes[n] else zeros(sizes[n - 1], 0)
        diffs.append(matmul(P, lifted, sizes[n - 1], ranks[n]) if ranks[n - 1] else [])
    _check_squares(diffs, ranks)
    return DPComplex(F, C, ChainComplex(tuple(ranks), tuple(diffs), check=False))
