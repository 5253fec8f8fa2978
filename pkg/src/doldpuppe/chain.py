"""Bounded chain complexes of free abelian groups and their JSON file format.

File schema::

    {"ranks": [r_0, ..., r_l],
     "differentials": [d_1, ..., d_l]}

``d_k`` is an ``r_{k-1} x r_k`` list of rows; entry ``[i][j]`` is the
coefficient of target basis vector ``i`` in the image of source vector ``j``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .linalg import ValidationError, check_complex, kernel_basis, zeros


@dataclass(frozen=True)
class ChainComplex:
    ranks: tuple[int, ...]
    differentials: tuple[tuple[tuple[int, ...], ...], ...] = field(default=())
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        if any(r < 0 for r in ranks):
            raise ValidationError("ranks must be non-negative")
        diffs = tuple(tuple(tuple(int(x) for x in row) for row in d) for d in self.differentials)
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "differentials", diffs)
        if self.check:
            check_complex(ranks, diffs)
        elif len(diffs) != max(len(ranks) - 1, 0):
            raise ValidationError("wrong number of differentials")

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    def rank(self, k: int) -> int:
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def d(self, k: int):
        """The differential C_k -> C_{k-1} as a list of rows."""
        return self.differentials[k - 1]

    def to_dict(self) -> dict:
        return {
            "ranks": list(self.ranks),
            "differentials": [[list(row) for row in d] for d in self.differentials],
        }

    @classmethod
    def from_dict(cls, data: dict, check: bool = True) -> "ChainComplex":
        if not isinstance(data, dict):
            raise ValidationError("complex must be a JSON object")
        if "ranks" not in data:
            raise ValidationError("missing field 'ranks'")
        ranks = data["ranks"]
        if not isinstance(ranks, list) or not all(isinstance(r, int) for r in ranks):
            raise ValidationError("field 'ranks' must be a list of integers")
        diffs = data.get("differentials", [])
        if not isinstance(diffs, list):
            raise ValidationError("field 'differentials' must be a list of matrices")
        for k, d in enumerate(diffs, start=1):
            if not isinstance(d, list) or not all(isinstance(row, list) for row in d):
                raise ValidationError(f"field 'differentials[{k - 1}]' must be a list of rows")
            if not all(isinstance(x, int) for row in d for x in row):
                raise ValidationError(f"field 'differentials[{k - 1}]' has non-integer entries")
        # an r x 0 matrix is written as r empty rows; a 0 x c matrix as []
        return cls(tuple(ranks), tuple(tuple(tuple(r) for r in d) for d in diffs), check=check)

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> "ChainComplex":
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path) -> "ChainComplex":
        with open(path) as fh:
            return cls.loads(fh.read())


def unit_complex(length: int, diffs=None, check: bool = True) -> ChainComplex:
    """Complex with every C_k of rank one; ``diffs`` gives the 1x1 entries."""
    diffs = diffs or [0] * length
    return ChainComplex((1,) * (length + 1), tuple(((d,),) for d in diffs), check=check)


def random_complex(rng: random.Random, max_length=3, max_rank=3, bound=3, tries=20) -> ChainComplex:
    """A random complex with entries in [-bound, bound] and d o d == 0.

    d_1 is uniform; each later d_k is a random combination of kernel vectors
    of d_{k-1}, retried until its entries fit the bound (zero as a fallback).
    """
    length = rng.randint(0, max_length)
    ranks = [rng.randint(0, max_rank) for _ in range(length + 1)]
    diffs = []
    for k in range(1, length + 1):
        rows, cols = ranks[k - 1], ranks[k]
        if k == 1:
            d = [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
        else:
            ker = kernel_basis(diffs[-1], rows) if rows else []
            d = zeros(rows, cols)
            for _ in range(tries):
                cand = zeros(rows, cols)
                for j in range(cols):
                    for v in ker:
                        c = rng.randint(-1, 1)
                        for i in range(rows):
                            cand[i][j] += c * v[i]
                if all(abs(x) <= bound for row in cand for x in row):
                    d = cand
                    break
        diffs.append(d)
    return ChainComplex(tuple(ranks), tuple(tuple(tuple(r) for r in d) for d in diffs))
