import random

import numpy as np
import pytest

from schurcc import (
    DimensionMismatch,
    FieldSpec,
    QuasiTwistedCode,
    block_shift,
    code_power,
    decompose,
    project,
    row_spaces_equal,
    shift,
)
from schurcc.quasitwisted import interleave
from schurcc.schur import SpanCode

from conftest import make_code, make_ring


def test_block_shift_t1_is_constacyclic_shift():
    rng = random.Random(5)
    ring = make_ring(7, 6, 5)
    for _ in range(20):
        c = [rng.randrange(7) for _ in range(6)]
        assert np.array_equal(block_shift(c, 1, 5, 7), shift(c, ring))


def test_block_shift_example():
    assert block_shift((1, 2, 3, 4), 2, 1, 5).tolist() == [3, 4, 1, 2]


def test_block_shift_full_cycle_scales():
    rng = random.Random(6)
    for _ in range(20):
        c = np.array([rng.randrange(5) for _ in range(8)])
        out = c
        for _ in range(4):  # n/t applications with t = 2
            out = block_shift(out, 2, 3, 5)
        assert np.array_equal(out, (3 * c) % 5)


def test_block_shift_requires_divisibility():
    with pytest.raises(DimensionMismatch):
        block_shift((1, 2, 3), 2, 1, 5)


def test_project_stride():
    assert project((1, 2, 3, 4, 5, 6), 0, 2, 3).tolist() == [1, 3, 5]
    assert project((1, 2, 3, 4, 5, 6), 1, 2, 3).tolist() == [2, 4, 6]


def test_project_index_range():
    with pytest.raises(IndexError):
        project((1, 2, 3, 4), 2, 2, 2)


def test_project_zero():
    assert project(np.zeros(6, dtype=np.int64), 0, 2, 3).tolist() == [0, 0, 0]


def test_projection_commutes_with_block_shift():
    rng = random.Random(7)
    ring = make_ring(5, 3, 2)  # length-m constacyclic shift
    for _ in range(40):
        c = [rng.randrange(5) for _ in range(6)]
        shifted = block_shift(c, 2, 2, 5)
        for i in range(2):
            lhs = project(shifted, i, 2, 3)
            rhs = shift(project(c, i, 2, 3), ring)
            assert np.array_equal(lhs, rhs)


def _module_code(field, t, m, a, gens, seed=0):
    """Quasi-twisted code spanned by the module orbit of one generator tuple."""
    ring = make_ring(field.q, m, a)
    rows = []
    for j in range(m):
        blocks = [
            ring.coeff_vector(ring.reduce(g.shift_up(j))) for g in gens
        ]
        rows.append(interleave(blocks))
    return QuasiTwistedCode(field, m * t, t, a, rows)


def test_construction_verifies_closure():
    field = FieldSpec(5)
    with pytest.raises(ValueError):
        QuasiTwistedCode(field, 4, 2, 1, [[1, 2, 3, 4]])


def test_constacyclic_code_is_t1_quasi_twisted(f3_code):
    qt = QuasiTwistedCode(
        f3_code.ring.field, 6, 1, 1, f3_code.basis.array.tolist()
    )
    parts = decompose(qt)
    assert len(parts) == 1
    assert row_spaces_equal(parts[0].basis, f3_code.basis)


def test_decompose_recovers_interleaved_direct_sum():
    # interleave two constacyclic codes of length 3 with t = 2
    field = FieldSpec(5)
    c1 = make_code(5, 3, 2, "x+2")  # x - 3, a cube root of 2
    c2 = make_code(5, 3, 2, "x^2+3*x+4")  # its cofactor in x^3 - 2
    rows = []
    for r in c1.basis.array:
        rows.append(interleave([r, np.zeros(3, dtype=np.int64)]))
    for r in c2.basis.array:
        rows.append(interleave([np.zeros(3, dtype=np.int64), r]))
    qt = QuasiTwistedCode(field, 6, 2, 2, rows)
    parts = decompose(qt)
    assert row_spaces_equal(parts[0].basis, c1.basis)
    assert row_spaces_equal(parts[1].basis, c2.basis)


def test_decompose_random_module_codes():
    from schurcc import is_constacyclic

    field = FieldSpec(5)
    ring = make_ring(5, 3, 2)
    rng = random.Random(11)
    for _ in range(10):
        gens = [
            ring.poly_from_vector([rng.randrange(5) for _ in range(3)])
            for _ in range(2)
        ]
        if all(g.is_zero() for g in gens):
            continue
        qt = _module_code(field, 2, 3, 2, gens)
        for part in decompose(qt):
            assert is_constacyclic(part.basis, ring)


def test_projection_commutes_with_schur_powers():
    field = FieldSpec(5)
    ring = make_ring(5, 3, 2)  # ell = ord(2 mod 5) = 4
    rng = random.Random(13)
    qt_ring = make_ring(5, 6, 2)
    for _ in range(6):
        gens = [
            ring.poly_from_vector([rng.randrange(5) for _ in range(3)])
            for _ in range(2)
        ]
        if all(g.is_zero() for g in gens):
            continue
        qt = _module_code(field, 2, 3, 2, gens)
        whole = SpanCode(qt_ring, qt.basis)
        ell = ring.ell
        for z in (0, 1):
            e = z * ell + 1
            power = code_power(whole, e)
            parts = decompose(qt)
            for i in range(2):
                lhs = SpanCode.from_rows(ring, power.basis.array[:, i::2])
                rhs = code_power(parts[i], e)
                assert row_spaces_equal(lhs.basis, rhs.basis)


def test_json_round_trip():
    field = FieldSpec(5)
    qt = QuasiTwistedCode(field, 4, 2, 1, [[1, 0, 1, 0], [0, 1, 0, 1]])
    data = qt.to_json()
    assert data["q"] == 5 and data["t"] == 2
    again = QuasiTwistedCode.from_json(data)
    assert row_spaces_equal(again.basis, qt.basis)
