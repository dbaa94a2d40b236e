"""Finite-dimensional right H-comodules, their morphisms and rigid structure.

A comodule N with basis f_0..f_{d-1} stores coaction[i, j, a], the coefficient
of f_j ⊗ e_a in ρ(f_i). Its components C^a[j, i] = coaction[i, j, a] are the
d × d matrices through which morphisms are tested: F is a comodule map
M → N exactly when C_N^a·F = F·C_M^a for every a.

Every isomorphism claimed in this module is certified by explicit matrices
whose composites are checked to be identities.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Callable, Sequence

import numpy as np

from hopfint.errors import InvalidInput, NonInvertibleAntipode, SnakeFailure
from hopfint.exactla import (
    Field, LinearMap, Matrix, column_stack, intertwiners, matrix_power, solve_columns,
)
from hopfint.hopf_core import GroupLikeElement, HopfAlgebraData, Report

log = logging.getLogger(__name__)

DEFAULT_SEED = 1729
DEFAULT_ATTEMPTS = 32


# ── Comodules ─────────────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class Comodule:
    parent: HopfAlgebraData
    coaction: np.ndarray
    name: str = ""

    def __post_init__(self):
        arr = self.parent.field.asarray(self.coaction)
        n = self.parent.dim
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != n or arr.shape[0] == 0:
            raise InvalidInput(f"coaction has shape {arr.shape}, expected (d, d, {n}) with d ≥ 1")
        arr.flags.writeable = False
        object.__setattr__(self, "coaction", arr)

    @property
    def field(self) -> Field:
        return self.parent.field

    @property
    def dim(self) -> int:
        return self.coaction.shape[0]

    @property
    def label(self) -> str:
        return self.name or f"M(dim {self.dim})"

    @cached_property
    def components(self) -> np.ndarray:
        """(n, d, d): components[a] is C^a."""
        return np.ascontiguousarray(self.coaction.transpose(2, 1, 0))

    @cached_property
    def coaction_matrix(self) -> Matrix:
        """ρ as a (d·n × d) matrix into M ⊗ H."""
        d, n = self.dim, self.parent.dim
        return Matrix(self.field, self.coaction.transpose(1, 2, 0).reshape(d * n, d))

    def same_coaction(self, other: Comodule) -> bool:
        return same_parent(self.parent, other.parent) and \
            bool(np.array_equal(self.coaction, other.coaction))


def same_parent(a: HopfAlgebraData, b: HopfAlgebraData) -> bool:
    return a is b or a.same_tensors(b)


def require_same_parent(*objects: Any) -> HopfAlgebraData:
    parent = objects[0].parent
    for other in objects[1:]:
        if not same_parent(parent, other.parent):
            raise InvalidInput(f"{other.label} lives over a different Hopf algebra")
    return parent


@dataclass(frozen=True)
class ComoduleReport(Report):
    counit_law: bool
    coassociativity: bool


def verify_comodule(m: Comodule) -> ComoduleReport:
    f, h = m.field, m.parent
    c = m.coaction
    counit_law = bool(np.array_equal(f.tensordot(c, h.counit, ([2], [0])), f.eye(m.dim)))
    # (ρ ⊗ id)ρ against (id ⊗ Δ)ρ, indexed [i, k, a, b]
    left = f.tensordot(c, c, ([1], [0])).transpose(0, 2, 3, 1)
    right = f.tensordot(c, h.comult, ([2], [0]))
    return ComoduleReport(counit_law, bool(np.array_equal(left, right)))


def trivial_comodule(h: HopfAlgebraData) -> Comodule:
    return Comodule(h, h.unit.reshape(1, 1, -1), "k")


def regular_comodule(h: HopfAlgebraData) -> Comodule:
    return Comodule(h, h.comult, "H")


def one_dimensional_comodule(h: HopfAlgebraData, grouplike: GroupLikeElement | Any,
                             name: str = "") -> Comodule:
    coords = grouplike.coords if isinstance(grouplike, GroupLikeElement) else \
        GroupLikeElement(h, grouplike).coords
    return Comodule(h, coords.reshape(1, 1, -1), name)


def free_comodule(h: HopfAlgebraData, x_dim: int) -> Comodule:
    """X ⊗ H with X a trivial comodule of dimension x_dim."""
    if x_dim < 1:
        raise InvalidInput("free comodule needs a positive dimension")
    n = h.dim
    f = h.field
    c = np.multiply.outer(f.eye(x_dim), h.comult).transpose(0, 2, 1, 3, 4)
    return Comodule(h, c.reshape(x_dim * n, x_dim * n, n), f"k^{x_dim}⊗H")


def tensor_comodule(m: Comodule, n: Comodule) -> Comodule:
    """M ⊗ N with ρ(x ⊗ y) = x_(0) ⊗ y_(0) ⊗ x_(1)y_(1)."""
    h = require_same_parent(m, n)
    f = h.field
    t = f.tensordot(m.coaction, h.mult, ([2], [0]))      # (i, j, b, c)
    t = f.tensordot(t, n.coaction, ([2], [2]))           # (i, j, c, k, l)
    dm, dn = m.dim, n.dim
    c = t.transpose(0, 3, 1, 4, 2).reshape(dm * dn, dm * dn, h.dim)
    return Comodule(h, c, f"{m.label}⊗{n.label}")


def dual_comodule(m: Comodule) -> Comodule:
    """N* with ρ(f_j*) = Σ f_i* ⊗ S(coefficient of f_j in ρ(f_i))."""
    f = m.field
    c = f.tensordot(m.coaction, m.parent.antipode.data, ([2], [1])).transpose(1, 0, 2)
    return Comodule(m.parent, c, f"{m.label}*")


def double_dual_twist(m: Comodule, k: int) -> Comodule:
    """Post-compose the H-leg of the coaction with S^{2k}; k = 1 gives N**."""
    try:
        twist = matrix_power(m.parent.antipode, 2 * k)
    except InvalidInput as exc:
        raise NonInvertibleAntipode("S is singular, negative twists are undefined") from exc
    c = m.field.tensordot(m.coaction, twist.data, ([2], [1]))
    suffix = {1: "**", -1: "^(-2)"}.get(k, f"^({2 * k})")
    return Comodule(m.parent, c, f"{m.label}{suffix}" if k else m.label)


def internal_hom(n: Comodule, p: Comodule) -> Comodule:
    return tensor_comodule(p, dual_comodule(n))


# ── Morphisms ─────────────────────────────────────────────────────────────────

def is_comodule_map(f_mat: Matrix, m: Comodule, n: Comodule) -> bool:
    f = m.field
    if f_mat.shape != (n.dim, m.dim):
        raise InvalidInput(f"a map {m.label} → {n.label} needs shape {(n.dim, m.dim)}, got {f_mat.shape}")
    left = f.tensordot(n.components, f_mat.data, ([2], [0]))
    right = f.tensordot(f_mat.data, m.components, ([1], [1])).transpose(1, 0, 2)
    return bool(np.array_equal(left, right))


@dataclass(frozen=True, eq=False)
class ComoduleMap(LinearMap[Comodule, Comodule]):

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise InvalidInput(f"matrix {self.matrix.shape} does not fit "
                               f"{self.source.label} → {self.target.label}")

    def is_morphism(self) -> bool:
        return is_comodule_map(self.matrix, self.source, self.target)


def comodule_hom(m: Comodule, n: Comodule) -> list[ComoduleMap]:
    """A basis of Hom^H(M, N)."""
    require_same_parent(m, n)
    basis = intertwiners(m.field, m.components, n.components)
    log.debug("dim Hom^H(%s, %s) = %d", m.label, n.label, len(basis))
    return [ComoduleMap(m, n, b) for b in basis]


def _hom_matrix(field: Field, basis: Sequence[ComoduleMap | Matrix], length: int) -> Matrix:
    vectors = [(b.matrix if isinstance(b, ComoduleMap) else b).data.reshape(-1) for b in basis]
    return Matrix(field, column_stack(field, vectors, length))


def _transport(field: Field, source: Sequence[ComoduleMap], target: Sequence[ComoduleMap],
               length: int, fn: Callable[[Matrix], Matrix]) -> tuple[Matrix | None, bool]:
    """Matrix of fn between two hom bases, and whether every image is a morphism."""
    images = [fn(b.matrix) for b in source]
    rhs = column_stack(field, [g.data.reshape(-1) for g in images], length)
    coords = solve_columns(_hom_matrix(field, target, length), rhs)
    if coords is None:
        return None, False
    return Matrix(field, coords), True


def _round_trips(forward: Matrix | None, backward: Matrix | None) -> tuple[bool, bool]:
    if forward is None or backward is None or forward.shape != backward.T.shape:
        return False, False
    return (backward @ forward).is_identity(), (forward @ backward).is_identity()


# ── Certified isomorphisms ────────────────────────────────────────────────────

@dataclass(frozen=True)
class DoiReport(Report):
    dim: int
    forward_is_morphism: bool
    backward_is_morphism: bool
    backward_after_forward: bool
    forward_after_backward: bool


@dataclass(frozen=True, eq=False)
class DoiIso:
    forward: ComoduleMap
    backward: ComoduleMap
    report: DoiReport


def doi_iso(v: Comodule) -> DoiIso:
    """V ⊗ H_reg ≅ (dim V copies of) H_reg via v ⊗ h ↦ v_(0) ⊗ v_(1)h."""
    h = v.parent
    f = h.field
    d, n = v.dim, h.dim
    source = tensor_comodule(v, regular_comodule(h))
    target = free_comodule(h, d)

    def realise(coact: np.ndarray) -> Matrix:
        t = f.tensordot(coact, h.mult, ([2], [0]))         # (i, j, h, c)
        return Matrix(f, t.transpose(1, 3, 0, 2).reshape(d * n, d * n))

    forward = realise(v.coaction)
    backward = realise(f.tensordot(v.coaction, h.antipode.data, ([2], [1])))
    fwd = ComoduleMap(source, target, forward)
    bwd = ComoduleMap(target, source, backward)
    report = DoiReport(
        dim=d * n,
        forward_is_morphism=fwd.is_morphism(),
        backward_is_morphism=bwd.is_morphism(),
        backward_after_forward=(backward @ forward).is_identity(),
        forward_after_backward=(forward @ backward).is_identity(),
    )
    return DoiIso(fwd, bwd, report)


@dataclass(frozen=True)
class FreeHomReport(Report):
    hom_dim: int
    target_dim: int
    dims_match: bool
    backward_lands_in_hom: bool
    backward_after_forward: bool
    forward_after_backward: bool


@dataclass(frozen=True, eq=False)
class FreeHomIso:
    forward: Matrix | None
    backward: Matrix | None
    report: FreeHomReport


def free_hom_iso(m: Comodule, x_dim: int) -> FreeHomIso:
    """Hom^H(M, X ⊗ H) ≅ Hom(M, X): F ↦ (id ⊗ ε)F and h ↦ (h ⊗ id)ρ."""
    h = m.parent
    f = h.field
    n, dm = h.dim, m.dim
    free = free_comodule(h, x_dim)
    basis = comodule_hom(m, free)
    r = len(basis)
    proj = Matrix(f, f.kron(f.eye(x_dim), h.counit.reshape(1, -1)))
    forward = Matrix(f, column_stack(f, [(proj @ b.matrix).data.reshape(-1) for b in basis],
                                      x_dim * dm))
    lifts = []
    for k in range(x_dim * dm):
        e = f.zeros((x_dim, dm))
        e[divmod(k, dm)] = f.one()
        lifts.append(f.matmul(f.kron(e, f.eye(n)), m.coaction_matrix.data).reshape(-1))
    coords = solve_columns(_hom_matrix(f, basis, x_dim * n * dm),
                           column_stack(f, lifts, x_dim * n * dm))
    backward = None if coords is None else Matrix(f, coords)
    bf, fb = _round_trips(forward, backward)
    report = FreeHomReport(
        hom_dim=r,
        target_dim=x_dim * dm,
        dims_match=r == x_dim * dm,
        backward_lands_in_hom=backward is not None,
        backward_after_forward=bf,
        forward_after_backward=fb,
    )
    return FreeHomIso(forward, backward, report)


# ── Rigidity ──────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class DualityReport(Report):
    ev_is_morphism: bool
    db_is_morphism: bool
    snake_n: bool
    snake_dual: bool


@dataclass(frozen=True, eq=False)
class Duality:
    comodule: Comodule
    dual: Comodule
    ev: ComoduleMap       # N* ⊗ N → k
    db: ComoduleMap       # k → N ⊗ N*
    report: DualityReport


def ev_db(n: Comodule) -> Duality:
    f = n.field
    d = n.dim
    dual = dual_comodule(n)
    unit = trivial_comodule(n.parent)
    ev = ComoduleMap(tensor_comodule(dual, n), unit, Matrix(f, f.eye(d).reshape(1, d * d)))
    db = ComoduleMap(unit, tensor_comodule(n, dual), Matrix(f, f.eye(d).reshape(d * d, 1)))
    ident = Matrix.identity(f, d)
    snake_n = (ident.kron(ev.matrix) @ db.matrix.kron(ident)).is_identity()
    snake_dual = (ev.matrix.kron(ident) @ ident.kron(db.matrix)).is_identity()
    if not (snake_n and snake_dual):
        raise SnakeFailure(f"zig-zag identities fail for {n.label}")
    report = DualityReport(ev.is_morphism(), db.is_morphism(), snake_n, snake_dual)
    return Duality(n, dual, ev, db, report)


@dataclass(frozen=True)
class HomIsoReport(Report):
    source_dim: int
    target_dim: int
    forward_lands_in_hom: bool
    backward_lands_in_hom: bool
    backward_after_forward: bool
    forward_after_backward: bool


@dataclass(frozen=True)
class InternalHomReport(Report):
    tensor_left: HomIsoReport     # Hom(M ⊗ N, P) ≅ Hom(M, P ⊗ N*)
    tensor_right: HomIsoReport    # Hom(M, N ⊗ P) ≅ Hom(N* ⊗ M, P)

    @property
    def ok(self) -> bool:
        return self.tensor_left.ok and self.tensor_right.ok


def _hom_iso(field: Field, a_basis, b_basis, a_len: int, b_len: int, phi, psi) -> HomIsoReport:
    forward, fwd_ok = _transport(field, a_basis, b_basis, b_len, phi)
    backward, bwd_ok = _transport(field, b_basis, a_basis, a_len, psi)
    bf, fb = _round_trips(forward, backward)
    return HomIsoReport(len(a_basis), len(b_basis), fwd_ok, bwd_ok, bf, fb)


def internal_hom_check(m: Comodule, n: Comodule, p: Comodule) -> InternalHomReport:
    """Both tensor-hom adjunctions for (M, N, P), realised on hom bases."""
    require_same_parent(m, n, p)
    f = m.field
    duality = ev_db(n)
    ev, db = duality.ev.matrix, duality.db.matrix
    dual = duality.dual
    i_m, i_n, i_p = (Matrix.identity(f, c.dim) for c in (m, n, p))
    dm, dn, dp = m.dim, n.dim, p.dim

    left = _hom_iso(
        f,
        comodule_hom(tensor_comodule(m, n), p),
        comodule_hom(m, tensor_comodule(p, dual)),
        dp * dm * dn, dp * dn * dm,
        lambda g: g.kron(i_n) @ i_m.kron(db),
        lambda g: i_p.kron(ev) @ g.kron(i_n),
    )
    right = _hom_iso(
        f,
        comodule_hom(m, tensor_comodule(n, p)),
        comodule_hom(tensor_comodule(dual, m), p),
        dn * dp * dm, dp * dn * dm,
        lambda g: ev.kron(i_p) @ i_n.kron(g),
        lambda g: i_n.kron(g) @ db.kron(i_m),
    )
    return InternalHomReport(left, right)


# ── Generators and counting ───────────────────────────────────────────────────

def generator_witness(m: Comodule) -> bool:
    """Hom^H(H_reg, M) ≠ 0."""
    return len(comodule_hom(regular_comodule(m.parent), m)) >= 1


@dataclass(frozen=True)
class HomCountReport(Report):
    hom_regular: int
    hom_regular_trivial: int
    dim: int
    matches_dim: bool
    matches_product: bool


def generator_hom_count(m: Comodule) -> HomCountReport:
    """dim Hom^H(H, M) = dim M·dim Hom^H(H, k) = dim M."""
    h = m.parent
    reg = regular_comodule(h)
    hm = len(comodule_hom(reg, m))
    hk = len(comodule_hom(reg, trivial_comodule(h)))
    return HomCountReport(hm, hk, m.dim, hm == m.dim, hm == m.dim * hk)


# ── Isomorphism search ────────────────────────────────────────────────────────

class IsoStatus(str, Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "not_isomorphic"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, eq=False)
class IsoResult:
    status: IsoStatus
    hom_dim: int
    tried: int
    certificate: ComoduleMap | None = None


def _candidates(field: Field, basis: Sequence[Matrix], seed: int, attempts: int):
    yield from basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield basis[i] + basis[j]
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        if field.is_rational:
            coeffs = rng.integers(-3, 4, size=len(basis))
        else:
            coeffs = rng.integers(0, field.p, size=len(basis))
        total = Matrix.zeros(field, *basis[0].shape)
        for c, b in zip(coeffs, basis):
            if c:
                total = total + b.scale(int(c))
        yield total


def isomorphism_test(m: Comodule, n: Comodule, *, seed: int = DEFAULT_SEED,
                     attempts: int = DEFAULT_ATTEMPTS) -> IsoResult:
    """Isomorphic with an invertible certificate, NotIsomorphic, or Inconclusive."""
    require_same_parent(m, n)
    if m.dim != n.dim:
        return IsoResult(IsoStatus.NOT_ISOMORPHIC, -1, 0)
    basis = [b.matrix for b in comodule_hom(m, n)]
    if not basis:
        return IsoResult(IsoStatus.NOT_ISOMORPHIC, 0, 0)
    tried = 0
    for candidate in _candidates(m.field, basis, seed, attempts):
        tried += 1
        if candidate.rank() == m.dim:
            log.debug("isomorphism %s ≅ %s found after %d candidates", m.label, n.label, tried)
            return IsoResult(IsoStatus.ISOMORPHIC, len(basis), tried, ComoduleMap(m, n, candidate))
    log.debug("no invertible map %s → %s among %d candidates", m.label, n.label, tried)
    return IsoResult(IsoStatus.INCONCLUSIVE, len(basis), tried)
