import json
import random

import pytest

from doldpuppe.chain import ChainComplex, random_complex, unit_complex
from doldpuppe.linalg import ValidationError, is_zero, matmul


def test_roundtrip():
    C = ChainComplex((2, 1), (((1,), (2,)),))
    assert ChainComplex.loads(C.dumps()) == C
    assert json.loads(C.dumps()) == {"ranks": [2, 1], "differentials": [[[1], [2]]]}


def test_rank_outside_range_is_zero():
    C = unit_complex(1)
    assert C.rank(-1) == 0 and C.rank(5) == 0
    assert C.length == 1


@pytest.mark.parametrize("text, field", [
    ('{"differentials": []}', "ranks"),
    ('{"ranks": [1, "a"]}', "ranks"),
    ('{"ranks": [1, 1], "differentials": [[[1.5]]]}', "differentials[0]"),
    ('{"ranks": [1, 1], "differentials": [7]}', "differentials[0]"),
    ('[1, 2]', "object"),
])
def test_bad_files_name_the_field(text, field):
    with pytest.raises(ValidationError, match=field.replace("[", r"\[").replace("]", r"\]")):
        ChainComplex.loads(text)


def test_rejects_non_complex():
    with pytest.raises(ValidationError):
        unit_complex(2, [1, 1])
    C = unit_complex(2, [1, 1], check=False)
    assert C.d(2) == ((1,),)


def test_rejects_negative_rank():
    with pytest.raises(ValidationError):
        ChainComplex((1, -1), (((0,),),))


def test_random_complexes_are_complexes():
    rng = random.Random(11)
    for _ in range(30):
        C = random_complex(rng)
        for k in range(2, C.length + 1):
            assert is_zero(matmul(C.d(k - 1), C.d(k), C.rank(k - 1), C.rank(k)))
        assert all(abs(x) <= 3 for d in C.differentials for row in d for x in row)
