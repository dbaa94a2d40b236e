"""Constructors for the standard small Hopf algebras: group algebras and their duals,
Sweedler's four-dimensional algebra and the Taft algebras.
"""
from __future__ import annotations

import itertools
import logging
from typing import Any, Sequence

import numpy as np

from hopfint.errors import InvalidInput
from hopfint.exactla import Field, FieldScalar, Matrix
from hopfint.hopf_core import HopfAlgebraData, multiply, power, tensor_square_product

log = logging.getLogger(__name__)

Q = Field.rationals()


# ── Cayley tables ─────────────────────────────────────────────────────────────

def cyclic_table(n: int) -> list[list[int]]:
    if n < 1:
        raise InvalidInput("a cyclic group needs order at least 1")
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_table(n: int) -> list[list[int]]:
    """Cayley table of S_n, elements in itertools.permutations order (identity first)."""
    if n < 1:
        raise InvalidInput("S_n needs n at least 1")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]


def validate_group_table(table: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Check closure, associativity, identity and inverses; return (identity, inverses)."""
    try:
        t = [[int(x) for x in row] for row in table]
    except (TypeError, ValueError) as exc:
        raise InvalidInput("Cayley table entries must be integers") from exc
    n = len(t)
    if n == 0 or any(len(row) != n for row in t):
        raise InvalidInput("Cayley table must be a non-empty square")
    if any(not 0 <= x < n for row in t for x in row):
        raise InvalidInput(f"Cayley table entries must lie in 0..{n - 1}")

    identity = next((e for e in range(n)
                     if all(t[e][x] == x and t[x][e] == x for x in range(n))), None)
    if identity is None:
        raise InvalidInput("Cayley table has no identity element")

    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise InvalidInput(f"Cayley table is not associative at ({a}, {b}, {c})")

    inverses = []
    for a in range(n):
        b = next((b for b in range(n) if t[a][b] == identity and t[b][a] == identity), None)
        if b is None:
            raise InvalidInput(f"element {a} has no inverse")
        inverses.append(b)
    return identity, inverses


def _tensors(n: int) -> tuple[np.ndarray, ...]:
    return (np.zeros((n, n, n), dtype=np.int64), np.zeros(n, dtype=np.int64),
            np.zeros((n, n, n), dtype=np.int64), np.zeros(n, dtype=np.int64),
            np.zeros((n, n), dtype=np.int64))


def _build(field: Field, basis, mult, unit, comult, counit, antipode, name) -> HopfAlgebraData:
    return HopfAlgebraData(
        field=field,
        basis=tuple(basis),
        mult=field.asarray(mult),
        unit=field.asarray(unit),
        comult=field.asarray(comult),
        counit=field.asarray(counit),
        antipode=Matrix(field, field.asarray(antipode)),
        name=name,
    )


# ── Group algebras ────────────────────────────────────────────────────────────

def group_algebra(table: Sequence[Sequence[int]], field: Field = Q,
                  labels: Sequence[str] | None = None, name: str = "") -> HopfAlgebraData:
    """k[G]: Δ(g) = g ⊗ g, ε(g) = 1, S(g) = g⁻¹."""
    identity, inverses = validate_group_table(table)
    n = len(table)
    mult, unit, comult, counit, antipode = _tensors(n)
    for i in range(n):
        for j in range(n):
            mult[i, j, int(table[i][j])] = 1
        comult[i, i, i] = 1
        antipode[inverses[i], i] = 1
    unit[identity] = 1
    counit[:] = 1
    labels = labels or [f"g{i}" for i in range(n)]
    return _build(field, labels, mult, unit, comult, counit, antipode, name or f"k[G{n}]")


def dual_group_algebra(table: Sequence[Sequence[int]], field: Field = Q,
                       labels: Sequence[str] | None = None, name: str = "") -> HopfAlgebraData:
    """k^G on the dual basis δ_g: pointwise product, Δ(δ_g) = Σ_{hk=g} δ_h ⊗ δ_k."""
    identity, inverses = validate_group_table(table)
    n = len(table)
    mult, unit, comult, counit, antipode = _tensors(n)
    for i in range(n):
        mult[i, i, i] = 1
        antipode[inverses[i], i] = 1
        for j in range(n):
            comult[int(table[i][j]), i, j] = 1
    unit[:] = 1
    counit[identity] = 1
    labels = labels or [f"d{i}" for i in range(n)]
    return _build(field, labels, mult, unit, comult, counit, antipode, name or f"k^G{n}")


# ── Sweedler and Taft ─────────────────────────────────────────────────────────

def sweedler4(field: Field = Q) -> HopfAlgebraData:
    """Basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx."""
    if field.characteristic == 2:
        raise InvalidInput("Sweedler's algebra needs characteristic other than 2")
    one, g, x, gx = range(4)
    mult = np.zeros((4, 4, 4), dtype=np.int64)
    for b in range(4):
        mult[one, b, b] = 1
        mult[b, one, b] = 1
    mult[g, g, one] = 1
    mult[g, x, gx] = 1
    mult[g, gx, x] = 1
    mult[x, g, gx] = -1
    mult[gx, g, x] = -1
    comult = np.zeros((4, 4, 4), dtype=np.int64)
    comult[one, one, one] = 1
    comult[g, g, g] = 1
    comult[x, x, one] = 1
    comult[x, g, x] = 1
    comult[gx, gx, g] = 1
    comult[gx, one, gx] = 1
    antipode = np.zeros((4, 4), dtype=np.int64)
    antipode[one, one] = 1
    antipode[g, g] = 1
    antipode[gx, x] = -1
    antipode[x, gx] = 1
    return _build(field, ("1", "g", "x", "gx"), mult, [1, 0, 0, 0], comult,
                  [1, 1, 0, 0], antipode, "sweedler4")


def _taft_label(i: int, j: int) -> str:
    g = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
    x = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
    return g + x or "1"


def taft(n: int, field: Field, q: Any) -> HopfAlgebraData:
    """Taft algebra T_n(q): g^n = 1, x^n = 0, xg = q·gx, Δ(x) = x ⊗ 1 + g ⊗ x.

    g^i x^j sits at index j·n + i, so taft(2, k, −1) coincides with sweedler4.
    """
    if n < 2:
        raise InvalidInput("Taft algebras need n at least 2")
    q = FieldScalar(field, q)
    if q ** n != 1 or any(q ** k == 1 for k in range(1, n)):
        raise InvalidInput(f"{q} is not a primitive {n}-th root of unity in {field}")
    dim = n * n

    def idx(i: int, j: int) -> int:
        return j * n + i

    mult = field.zeros((dim, dim, dim))
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j + l < n:
            mult[idx(i, j), idx(k, l), idx((i + k) % n, j + l)] = (q ** (j * k)).value
    unit = field.zeros(dim)
    unit[idx(0, 0)] = field.one()
    counit = field.zeros(dim)
    counit[[idx(i, 0) for i in range(n)]] = field.one()
    antipode = field.zeros((dim, dim))
    comult = field.zeros((dim, dim, dim))
    labels = [_taft_label(*divmod(k, n)[::-1]) for k in range(dim)]

    # tensors assembled so far suffice for products in H and in H ⊗ H
    skeleton = HopfAlgebraData(field, tuple(labels), mult, unit, comult, counit,
                               Matrix(field, antipode), name="taft skeleton")
    g, x = np.array(skeleton.element(idx(1, 0))), np.array(skeleton.element(idx(0, 1)))
    one = skeleton.element(idx(0, 0))
    delta_g = field.reduce(np.multiply.outer(g, g))
    delta_x = field.reduce(np.multiply.outer(x, one) + np.multiply.outer(g, x))
    g_inv = power(skeleton, g, n - 1)
    s_x = field.reduce(-multiply(skeleton, g_inv, x))

    unit_2 = field.reduce(np.multiply.outer(one, one))
    for i, j in itertools.product(range(n), repeat=2):
        d = unit_2
        for _ in range(i):
            d = tensor_square_product(skeleton, d, delta_g)
        for _ in range(j):
            d = tensor_square_product(skeleton, d, delta_x)
        comult[idx(i, j)] = d
        # S(g^i x^j) = S(x)^j g^{-i}
        antipode[:, idx(i, j)] = multiply(skeleton, power(skeleton, s_x, j), power(skeleton, g_inv, i))

    log.debug("built taft(%d, %s, %s)", n, field, q)
    return HopfAlgebraData(field, tuple(labels), mult, unit, comult, counit,
                           Matrix(field, antipode), name=f"taft({n}, {field}, {q})")
