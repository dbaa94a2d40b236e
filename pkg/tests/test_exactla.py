from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfint.errors import InvalidInput
from hopfint.exactla import (
    Field, Matrix, intertwiners, inverse, kernel_basis, matrix_power, rank, rref, solve_linear,
)

Q = Field.rationals()
F5 = Field.prime(5)
F7 = Field.prime(7)

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
residues = st.integers(min_value=0, max_value=4)


def matrices(elements, max_side: int = 4):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.lists(elements, min_size=c, max_size=c), min_size=r, max_size=r)))


# ── Fields and scalars ──

def test_field_rejects_composite_and_oversized_moduli():
    with pytest.raises(InvalidInput):
        Field.prime(4)
    with pytest.raises(InvalidInput):
        Field.prime(1 << 20)
    with pytest.raises(InvalidInput):
        Field("R")


def test_coerce_accepts_fractions_and_unicode_minus():
    assert Q.coerce("−1/2") == Fraction(-1, 2)
    assert Q.coerce(" 3 ") == 3
    assert F7.coerce("1/2") == 4
    assert F7.coerce(-1) == 6


def test_coerce_rejects_floats_and_garbage():
    with pytest.raises(InvalidInput):
        Q.coerce(0.5)
    with pytest.raises(InvalidInput):
        Q.coerce("one half")
    with pytest.raises(InvalidInput):
        F7.coerce(Fraction(1, 7))


def test_scalar_arithmetic():
    three = F7.scalar(3)
    assert three * 5 == 1
    assert three.inverse() == 5
    assert (three / 3) == 1
    assert -three == 4
    assert three ** -1 == 5
    assert Q.scalar("2/3") + "1/3" == 1
    assert str(Q.scalar(Fraction(-4, 6))) == "-2/3"


def test_scalars_from_different_fields_do_not_mix():
    with pytest.raises(InvalidInput):
        F5.scalar(1) + F7.scalar(1)


def test_scalar_equality_with_unrelated_values():
    assert Q.scalar(1) == "1"
    assert Q.scalar(1) != "x"
    assert F7.scalar(3) != object()
    assert F5.scalar(1) != F7.scalar(1)


def test_residue_only_on_prime_fields():
    assert F7.scalar(10).residue == 3
    with pytest.raises(InvalidInput):
        Q.scalar(1).residue


# ── Matrices ──

def test_matrix_is_read_only():
    m = Matrix.identity(Q, 2)
    with pytest.raises(ValueError):
        m.data[0, 0] = 5


def test_rref_and_rank():
    m = Matrix.from_rows(Q, [[1, 2], [2, 4]])
    red, pivots, r = rref(m)
    assert r == 1
    assert pivots == [0]
    assert red == Matrix.from_rows(Q, [[1, 2], [0, 0]])


def test_rref_with_denominators():
    m = Matrix.from_rows(Q, [["1/2", 1, "3/4"], [1, 2, 2], ["-1/3", "-2/3", 0]])
    red, pivots, r = rref(m)
    assert (r, pivots) == (2, [0, 2])
    assert red == Matrix.from_rows(Q, [[1, 2, 0], [0, 0, 1], [0, 0, 0]])


def test_kernel_basis_spans_the_nullspace():
    m = Matrix.from_rows(Q, [[1, 2, 3]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert not np.any(m.apply(v) != 0)


def test_inverse_over_prime_field():
    m = Matrix.from_rows(F5, [[1, 2], [3, 4]])
    assert (m @ inverse(m)).is_identity()
    assert matrix_power(m, -1) == inverse(m)
    assert matrix_power(m, 0).is_identity()


def test_inverse_of_singular_matrix_fails():
    with pytest.raises(InvalidInput):
        inverse(Matrix.from_rows(Q, [[1, 1], [2, 2]]))
    with pytest.raises(InvalidInput):
        inverse(Matrix.zeros(Q, 2, 2))


def test_solve_linear():
    m = Matrix.from_rows(Q, [[1, 1], [1, -1]])
    x = solve_linear(m, [3, 1])
    assert list(x) == [2, 1]
    assert solve_linear(Matrix.from_rows(Q, [[1, 1], [1, 1]]), [1, 2]) is None


def test_mixed_fields_are_rejected():
    with pytest.raises(InvalidInput):
        Matrix.identity(Q, 2) @ Matrix.identity(F5, 2)


def test_kron_follows_index_convention():
    a = Matrix.from_rows(Q, [[1, 2], [3, 4]])
    b = Matrix.identity(Q, 2)
    k = a.kron(b)
    # entry (i·2 + j, k·2 + l) = a[i, k]·b[j, l]
    assert k.entry(2, 0) == 3
    assert k.entry(3, 1) == 3
    assert k.entry(2, 1) == 0


def test_intertwiners_of_a_nilpotent_block():
    n = Matrix.from_rows(Q, [[0, 1], [0, 0]]).data
    ops = np.stack([n])
    basis = intertwiners(Q, ops, ops)
    # the commutant of a 2×2 Jordan block is spanned by I and N
    assert len(basis) == 2
    for f in basis:
        assert f @ Matrix(Q, n) == Matrix(Q, n) @ f


# ── Properties ──

@settings(max_examples=60, deadline=None)
@given(matrices(rationals))
def test_rank_nullity_over_q(rows):
    m = Matrix.from_rows(Q, rows)
    assert rank(m) + len(kernel_basis(m)) == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices(residues))
def test_rank_nullity_over_f5(rows):
    m = Matrix.from_rows(F5, rows)
    assert rank(m) + len(kernel_basis(m)) == m.cols
    for v in kernel_basis(m):
        assert not np.any(m.apply(v) != 0)


@settings(max_examples=40, deadline=None)
@given(matrices(rationals))
def test_rref_is_idempotent(rows):
    red, pivots, _ = rref(Matrix.from_rows(Q, rows))
    again, pivots_again, _ = rref(red)
    assert again == red
    assert pivots_again == pivots


@settings(max_examples=30, deadline=None)
@given(matrices(residues, 3), matrices(residues, 3), matrices(residues, 3))
def test_kron_is_associative_over_f5(a, b, c):
    a, b, c = (Matrix.from_rows(F5, x) for x in (a, b, c))
    assert a.kron(b).kron(c) == a.kron(b.kron(c))


@settings(max_examples=30, deadline=None)
@given(matrices(rationals, 3), matrices(rationals, 3), matrices(rationals, 3))
def test_kron_is_associative_over_q(a, b, c):
    a, b, c = (Matrix.from_rows(Q, x) for x in (a, b, c))
    assert a.kron(b).kron(c) == a.kron(b.kron(c))


@settings(max_examples=40, deadline=None)
@given(matrices(rationals))
def test_rref_keeps_the_row_space(rows):
    m = Matrix.from_rows(Q, rows)
    red, pivots, r = rref(m)
    stacked = Matrix.from_rows(Q, list(rows) + red.data[:r].tolist())
    assert rank(stacked) == r
    for i, c in enumerate(pivots):
        column = red.data[:, c]
        assert column[i] == 1
        assert sum(1 for x in column if x != 0) == 1
