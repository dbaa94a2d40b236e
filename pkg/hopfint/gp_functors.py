"""The functors T: comodules → H*-modules and U back, and their certificates.

T(N) is Hom^H(H_reg, N) with H* acting by (ξ·F)(h) = F(ξ(h_(1)) h_(2));
as a module it is the rational action of N** ⊗ Γ. U(M) is M ⊗ Γ* with the
double-dual twist undone, which makes U left adjoint to T on
finite-dimensional comodules.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from hopfint.comodules import (
    Comodule, ComoduleMap, IsoResult, IsoStatus, comodule_hom, double_dual_twist,
    dual_comodule, is_comodule_map, isomorphism_test, regular_comodule, tensor_comodule,
)
from hopfint.dual_conv import (
    HStarModule, module_hom, module_to_comodule, rational_action, trivial_module, verify_module,
)
from hopfint.errors import CertificateError
from hopfint.exactla import Matrix, coordinates, kernel_basis, rank
from hopfint.hopf_core import HopfAlgebraData, Report
from hopfint.integrals import (
    distinguished_grouplike, gamma_comodule, integral_space, right_integral,
)

log = logging.getLogger(__name__)


# ── T ─────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class TImage:
    source: Comodule
    module: HStarModule
    hom_basis: tuple[ComoduleMap, ...]


def _regular_components(h: HopfAlgebraData) -> np.ndarray:
    """r[a, c, h] = comult[h, a, c]: matrix of h ↦ e_a*(h_(1)) h_(2)."""
    return np.ascontiguousarray(h.comult.transpose(1, 2, 0))


def functor_T(n: Comodule) -> TImage:
    h = n.parent
    f = h.field
    basis = tuple(comodule_hom(regular_comodule(h), n))
    r = _regular_components(h)
    vectors = [b.matrix.data.reshape(-1) for b in basis]
    m = len(basis)
    action = f.zeros((h.dim, m, m))
    for a in range(h.dim):
        images = [f.matmul(b.matrix.data, r[a]).reshape(-1) for b in basis]
        coords = coordinates(f, vectors, images)
        if coords is None:
            raise CertificateError(f"the H*-action on Hom^H(H, {n.label}) does not close")
        action[a] = coords
    module = HStarModule(h, action, f"T({n.label})")
    report = verify_module(module)
    if not report.ok:
        raise CertificateError(f"T({n.label}) fails {', '.join(report.failures())}")
    log.debug("T(%s) has dimension %d", n.label, m)
    return TImage(n, module, basis)


@dataclass(frozen=True)
class TwistReport(Report):
    dim_source: int
    dim_hom: int
    maps_are_morphisms: bool
    bijective: bool
    intertwines: bool


def twist_iso_check(n: Comodule) -> TwistReport:
    """T(N) ≅ N** ⊗ Γ via n ↦ (h ↦ n_(0) χ(S(n_(1)) h))."""
    h = n.parent
    f = h.field
    chi = right_integral(h)
    t_image = functor_T(n)
    # y[a, h] = χ(S(e_a) e_h)
    y = f.matmul(np.ascontiguousarray(h.antipode.data.T), f.tensordot(h.mult, chi, ([2], [0])))
    maps = f.tensordot(n.coaction, y, ([2], [0]))          # maps[i] : H → N
    reg = regular_comodule(h)
    morphisms = all(is_comodule_map(Matrix(f, maps[i]), reg, n) for i in range(n.dim))
    coords = coordinates(f, [b.matrix.data.reshape(-1) for b in t_image.hom_basis],
                         [maps[i].reshape(-1) for i in range(n.dim)])
    m = len(t_image.hom_basis)
    if coords is None:
        return TwistReport(n.dim, m, morphisms, False, False)
    phi = Matrix(f, coords)
    bijective = phi.rows == phi.cols and rank(phi) == n.dim
    twisted = rational_action(tensor_comodule(double_dual_twist(n, 1), gamma_comodule(h)))
    left = f.tensordot(phi.data, twisted.action, ([1], [1])).transpose(1, 0, 2)
    right = f.tensordot(t_image.module.action, phi.data, ([2], [0]))
    return TwistReport(n.dim, m, morphisms, bijective, bool(np.array_equal(left, right)))


# ── U ─────────────────────────────────────────────────────────────────────────

def functor_U(m: Comodule) -> Comodule:
    """U(M) with U(M)** = M ⊗ Γ*."""
    gamma_dual = dual_comodule(gamma_comodule(m.parent))
    twisted = tensor_comodule(m, gamma_dual)
    u = double_dual_twist(twisted, -1)
    if not double_dual_twist(u, 1).same_coaction(twisted):
        raise CertificateError(f"U({m.label})** differs from {twisted.label}")
    return Comodule(m.parent, u.coaction, f"U({m.label})")


@dataclass(frozen=True)
class AdjunctionReport(Report):
    dim_comodule_side: int
    dim_module_side: int
    equal: bool


def adjunction_check(m: Comodule, n: Comodule) -> AdjunctionReport:
    """dim Hom^H(U(M), N) = dim Hom_{H*}(M, T(N))."""
    left = len(comodule_hom(functor_U(m), n))
    right = len(module_hom(rational_action(m), functor_T(n).module))
    return AdjunctionReport(left, right, left == right)


@dataclass(frozen=True)
class RoundTripReport(Report):
    status: str
    hom_dim: int
    tried: int
    isomorphic: bool


def _round_trip_report(result: IsoResult) -> RoundTripReport:
    return RoundTripReport(result.status.value, result.hom_dim, result.tried,
                           result.status is IsoStatus.ISOMORPHIC)


def ut_identity_check(n: Comodule, *, seed: int, attempts: int) -> RoundTripReport:
    """U(T(N)) ≅ N."""
    back = functor_U(module_to_comodule(functor_T(n).module))
    return _round_trip_report(isomorphism_test(back, n, seed=seed, attempts=attempts))


def right_dual_check(n: Comodule, *, seed: int, attempts: int) -> RoundTripReport:
    """(Γ* ⊗ U(N)*)* ≅ N, so Γ* ⊗ U(N)* is a right dual of N."""
    h = n.parent
    candidate = tensor_comodule(dual_comodule(gamma_comodule(h)), dual_comodule(functor_U(n)))
    return _round_trip_report(isomorphism_test(dual_comodule(candidate), n,
                                               seed=seed, attempts=attempts))


# ── Sequences ─────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SequenceReport(Report):
    hom_dim: int
    one_dimensional: bool
    kernel_zero: bool
    action_is_gamma: bool


def hom_sequence_check(h: HopfAlgebraData) -> SequenceReport:
    """0 → K → Hom_{H*}(H, k) → Hom_{H*}(C, k) with C = H, and the image acted on by γ."""
    f = h.field
    homs = module_hom(rational_action(regular_comodule(h)), trivial_module(h))
    dim = len(homs)
    # restriction to C = H is the identity on the hom space
    restriction = Matrix.identity(f, dim)
    kernel_zero = len(kernel_basis(restriction)) == 0
    action_is_gamma = False
    if dim == 1:
        g = homs[0].matrix.data[0]
        gamma = distinguished_grouplike(h).coords
        w = f.tensordot(h.comult, g, ([2], [0]))            # w[k, a] = (e_a* · g)(e_k)
        action_is_gamma = bool(np.array_equal(w, f.reduce(np.multiply.outer(g, gamma))))
    return SequenceReport(dim, dim == 1, kernel_zero, action_is_gamma)


@dataclass(frozen=True)
class CountReport(Report):
    hom_into_regular: int
    hom_into_dual: int
    adjunction_with_regular: bool
    dim_u: int
    expected_dim_u: int
    dimension_formula: bool


def regular_hom_check(m: Comodule) -> CountReport:
    """Hom^H(U(M), H) ≅ Hom_{H*}(M, H*) and dim U(M)* = dim ∫_l · dim M."""
    h = m.parent
    u = functor_U(m)
    into_regular = len(comodule_hom(u, regular_comodule(h)))
    into_dual = len(module_hom(rational_action(m), functor_T(regular_comodule(h)).module))
    expected = integral_space(h, "left").dim * m.dim
    dim_u = dual_comodule(u).dim
    return CountReport(into_regular, into_dual, into_regular == into_dual,
                       dim_u, expected, dim_u == expected)

