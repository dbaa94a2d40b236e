"""Finite-dimensional Hopf algebras given by structure tensors.

With basis e_0..e_{n-1}:
  mult[i, j, k]   coefficient of e_k in e_i·e_j
  unit[k]         coefficient of e_k in 1
  comult[i, a, b] coefficient of e_a ⊗ e_b in Δ(e_i)
  counit[i]       ε(e_i)
  antipode        matrix whose column j is S(e_j)

Verification contracts the tensors directly with numpy.tensordot; nothing
larger than n⁵ entries is ever materialised.
"""
from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Sequence

import numpy as np

from hopfint.errors import HopfVerificationError, InvalidInput
from hopfint.exactla import Field, Matrix, matrix_power, inverse

log = logging.getLogger(__name__)

AXIOMS = ("associativity", "unit", "coassociativity", "counit", "bialgebra", "antipode")


# ── Reports ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Report:
    """Base for check reports: every bool field is a certified flag."""

    def flags(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in dataclasses.fields(self)
                if isinstance(getattr(self, f.name), bool)}

    @property
    def ok(self) -> bool:
        return all(self.flags().values())

    def failures(self) -> list[str]:
        return [name for name, value in self.flags().items() if not value]

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if isinstance(value, (bool, int, str)) or value is None:
                out[f.name] = value
            elif isinstance(value, Report):
                out[f.name] = value.to_dict()
            elif isinstance(value, (list, tuple)) and all(isinstance(v, (int, str)) for v in value):
                out[f.name] = list(value)
        out["ok"] = self.ok
        return out


@dataclass(frozen=True)
class VerificationReport(Report):
    associativity: bool
    unit: bool
    coassociativity: bool
    counit: bool
    bialgebra: bool
    antipode: bool

    def diagnostic(self) -> str:
        failed = self.failures()
        if not failed:
            return "all axioms hold"
        return ", ".join(f"{name} axiom failed" for name in failed)


# ── Hopf algebra data ─────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class HopfAlgebraData:
    field: Field
    basis: tuple[str, ...]
    mult: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    antipode: Matrix
    name: str = ""

    def __post_init__(self):
        n = len(self.basis)
        if n == 0:
            raise InvalidInput("a Hopf algebra needs a non-empty basis")
        if len(set(self.basis)) != n:
            raise InvalidInput("basis labels must be distinct")
        object.__setattr__(self, "basis", tuple(str(b) for b in self.basis))
        expected = {"mult": (n, n, n), "unit": (n,), "comult": (n, n, n), "counit": (n,)}
        for attr, shape in expected.items():
            arr = self.field.asarray(getattr(self, attr))
            if arr.shape != shape:
                raise InvalidInput(f"{attr} has shape {arr.shape}, expected {shape} for dimension {n}")
            arr.flags.writeable = False
            object.__setattr__(self, attr, arr)
        antipode = self.antipode
        if not isinstance(antipode, Matrix):
            antipode = Matrix(self.field, antipode)
        if antipode.field != self.field:
            raise InvalidInput(f"antipode is over {antipode.field}, algebra over {self.field}")
        if antipode.shape != (n, n):
            raise InvalidInput(f"antipode has shape {antipode.shape}, expected {(n, n)}")
        object.__setattr__(self, "antipode", antipode)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def label(self) -> str:
        return self.name or f"H(dim {self.dim})"

    @cached_property
    def verification(self) -> VerificationReport:
        return verify_hopf(self)

    def require_verified(self) -> HopfAlgebraData:
        report = self.verification
        if not report.ok:
            raise HopfVerificationError(report, self.name)
        return self

    def index(self, label: str | int) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.dim:
                raise InvalidInput(f"basis index {label} out of range")
            return label
        try:
            return self.basis.index(label)
        except ValueError:
            raise InvalidInput(f"unknown basis element {label!r}") from None

    def element(self, label: str | int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[self.index(label)] = self.field.one()
        return v

    def same_tensors(self, other: HopfAlgebraData) -> bool:
        return (self.field == other.field and self.dim == other.dim
                and np.array_equal(self.mult, other.mult)
                and np.array_equal(self.unit, other.unit)
                and np.array_equal(self.comult, other.comult)
                and np.array_equal(self.counit, other.counit)
                and self.antipode == other.antipode)

    def relabel(self, order: Sequence[int]) -> HopfAlgebraData:
        """The same algebra with new basis e'_k = e_{order[k]}."""
        perm = list(order)
        if sorted(perm) != list(range(self.dim)):
            raise InvalidInput(f"{order!r} is not a permutation of the basis")
        ix = np.ix_(perm, perm, perm)
        return HopfAlgebraData(
            field=self.field,
            basis=tuple(self.basis[k] for k in perm),
            mult=self.mult[ix],
            unit=self.unit[perm],
            comult=self.comult[ix],
            counit=self.counit[perm],
            antipode=Matrix(self.field, self.antipode.data[np.ix_(perm, perm)]),
            name=self.name,
        )


# ── Element arithmetic ────────────────────────────────────────────────────────

def multiply(h: HopfAlgebraData, x: Any, y: Any) -> np.ndarray:
    f = h.field
    left = f.tensordot(f.asarray(x), h.mult, ([0], [0]))
    return f.tensordot(f.asarray(y), left, ([0], [0]))


def power(h: HopfAlgebraData, x: Any, k: int) -> np.ndarray:
    out = np.array(h.unit)
    for _ in range(k):
        out = multiply(h, out, x)
    return out


def tensor_square_product(h: HopfAlgebraData, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Product in H ⊗ H of two (n × n) coefficient arrays."""
    f = h.field
    t = f.tensordot(u, h.mult, ([0], [0]))        # (b, c, k)
    t = f.tensordot(t, v, ([1], [0]))             # (b, k, d)
    return f.tensordot(t, h.mult, ([0, 2], [0, 1]))  # (k, l)


def apply_comult(h: HopfAlgebraData, x: Any) -> np.ndarray:
    return h.field.tensordot(h.field.asarray(x), h.comult, ([0], [0]))


def apply_counit(h: HopfAlgebraData, x: Any) -> Any:
    return h.field.reduce(np.dot(h.field.asarray(x), h.counit))


def apply_antipode(h: HopfAlgebraData, x: Any) -> np.ndarray:
    return h.antipode.apply(x)


def antipode_power(h: HopfAlgebraData, k: int) -> Matrix:
    return matrix_power(h.antipode, k)


def antipode_inverse(h: HopfAlgebraData) -> Matrix:
    return inverse(h.antipode)


# ── Verification ──────────────────────────────────────────────────────────────

def verify_hopf(h: HopfAlgebraData) -> VerificationReport:
    f = h.field
    n = h.dim
    m, d, u, e, s = h.mult, h.comult, h.unit, h.counit, h.antipode.data
    eye = f.eye(n)

    def same(a, b) -> bool:
        return bool(np.array_equal(f.reduce(a), f.reduce(b)))

    # (e_i e_j) e_k and e_i (e_j e_k), both indexed [i, j, k, m]
    left = f.tensordot(m, m, ([2], [0]))
    right = f.tensordot(m, m, ([2], [1])).transpose(2, 0, 1, 3)
    associativity = same(left, right)

    unit = same(f.tensordot(u, m, ([0], [0])), eye) and same(f.tensordot(m, u, ([1], [0])), eye)

    # (Δ ⊗ id)Δ and (id ⊗ Δ)Δ, both indexed [i, x, y, z]
    left = f.tensordot(d, d, ([1], [0])).transpose(0, 2, 3, 1)
    right = f.tensordot(d, d, ([2], [0]))
    coassociativity = same(left, right)

    counit = same(f.tensordot(d, e, ([1], [0])), eye) and same(f.tensordot(d, e, ([2], [0])), eye)

    # Δ(e_i e_j) against Δ(e_i)Δ(e_j), indexed [i, j, a, b]
    lhs = f.tensordot(m, d, ([2], [0]))
    t = f.tensordot(d, m, ([1], [0]))                 # (i, q, r, a)
    t = f.tensordot(t, d, ([2], [1]))                 # (i, q, a, j, s)
    rhs = f.tensordot(t, m, ([1, 4], [0, 1])).transpose(0, 2, 1, 3)
    bialgebra = (same(lhs, rhs)
                 and same(f.tensordot(u, d, ([0], [0])), np.multiply.outer(u, u))
                 and same(f.tensordot(m, e, ([2], [0])), np.multiply.outer(e, e))
                 and same(np.dot(u, e), f.one()))

    # μ(S ⊗ id)Δ = ηε = μ(id ⊗ S)Δ, indexed [i, k]
    target = np.multiply.outer(e, u)
    t = f.tensordot(d, s, ([1], [1]))                 # (i, b, c)
    left = f.tensordot(t, m, ([2, 1], [0, 1]))
    t = f.tensordot(d, s, ([2], [1]))                 # (i, a, c)
    right = f.tensordot(t, m, ([1, 2], [0, 1]))
    antipode = same(left, target) and same(right, target)

    report = VerificationReport(associativity, unit, coassociativity, counit, bialgebra, antipode)
    log.debug("verified %s over %s: %s", h.label, f, report.diagnostic())
    return report


# ── Group-like elements ───────────────────────────────────────────────────────

def is_grouplike(h: HopfAlgebraData, v: Any) -> bool:
    f = h.field
    v = f.asarray(v)
    if v.shape != (h.dim,):
        raise InvalidInput(f"vector of length {v.shape} in a dimension {h.dim} algebra")
    return (bool(np.array_equal(apply_comult(h, v), f.reduce(np.multiply.outer(v, v))))
            and bool(apply_counit(h, v) == 1))


@dataclass(frozen=True, eq=False)
class GroupLikeElement:
    parent: HopfAlgebraData
    coords: np.ndarray

    def __post_init__(self):
        coords = self.parent.field.asarray(self.coords)
        if not is_grouplike(self.parent, coords):
            raise InvalidInput("coordinates are not a group-like element")
        coords.flags.writeable = False
        object.__setattr__(self, "coords", coords)

    def is_unit(self) -> bool:
        return bool(np.array_equal(self.coords, self.parent.unit))

    def inverse(self) -> GroupLikeElement:
        return GroupLikeElement(self.parent, apply_antipode(self.parent, self.coords))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupLikeElement):
            return NotImplemented
        return self.parent is other.parent and bool(np.array_equal(self.coords, other.coords))

    __hash__ = None

    def describe(self) -> str:
        return describe_vector(self.parent, self.coords)


def describe_vector(h: HopfAlgebraData, v: Any) -> str:
    """"2·g + x" style rendering in the basis labels."""
    f = h.field
    terms = []
    for label, c in zip(h.basis, f.asarray(v)):
        if c != 0:
            terms.append(label if c == 1 else f"{f.format(c)}·{label}")
    return " + ".join(terms) or "0"
