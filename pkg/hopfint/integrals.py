"""Integrals on H, the distinguished group-like γ and the antipode.

A right integral is χ ∈ H* with χ(x_(1)) x_(2) = χ(x)·1, a left integral
φ has x_(1) φ(x_(2)) = φ(x)·1. Both spaces are kernels of explicit
(n² × n) systems.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from hopfint.comodules import (
    Comodule, IsoStatus, dual_comodule, isomorphism_test, one_dimensional_comodule,
    tensor_comodule, trivial_comodule,
)
from hopfint.dual_conv import rational_action
from hopfint.errors import CertificateError, InvalidInput, ZeroIntegral
from hopfint.exactla import Matrix, kernel_basis, rank
from hopfint.hopf_core import (
    GroupLikeElement, HopfAlgebraData, Report, describe_vector, is_grouplike,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class IntegralSpace:
    parent: HopfAlgebraData
    side: str
    basis: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, xi) -> bool:
        return _is_integral(self.parent, self.side, self.parent.field.asarray(xi))


def _integral_system(h: HopfAlgebraData, side: str) -> Matrix:
    f = h.field
    n = h.dim
    correction = np.multiply.outer(f.eye(n), h.unit)      # [a, b, c] = δ_ab·unit[c]
    if side == "right":
        # rows (a, c): Σ_b comult[a, b, c] χ_b − unit[c] χ_a
        k = f.reduce(h.comult - correction).transpose(0, 2, 1)
    elif side == "left":
        # rows (a, b): Σ_c comult[a, b, c] φ_c − unit[b] φ_a
        k = f.reduce(h.comult - correction.transpose(0, 2, 1))
    else:
        raise InvalidInput(f"side must be 'left' or 'right', got {side!r}")
    return Matrix(f, k.reshape(n * n, n))


def _is_integral(h: HopfAlgebraData, side: str, xi: np.ndarray) -> bool:
    return not np.any(_integral_system(h, side).apply(xi) != 0)


def integral_space(h: HopfAlgebraData, side: str) -> IntegralSpace:
    h.require_verified()
    basis = tuple(kernel_basis(_integral_system(h, side)))
    log.debug("dim of %s integrals on %s: %d", side, h.label, len(basis))
    return IntegralSpace(h, side, basis)


@dataclass(frozen=True)
class UniquenessReport(Report):
    dim_right: int
    dim_left: int
    right_at_most_one: bool
    left_at_most_one: bool
    vanish_together: bool
    both_one: bool


def uniqueness_check(h: HopfAlgebraData) -> UniquenessReport:
    r = integral_space(h, "right").dim
    l = integral_space(h, "left").dim
    return UniquenessReport(r, l, r <= 1, l <= 1, (r == 0) == (l == 0), r == 1 and l == 1)


def right_integral(h: HopfAlgebraData) -> np.ndarray:
    space = integral_space(h, "right")
    if space.dim == 0:
        raise ZeroIntegral(f"{h.label} has no nonzero right integral")
    return space.basis[0]


def left_integral(h: HopfAlgebraData) -> np.ndarray:
    space = integral_space(h, "left")
    if space.dim == 0:
        raise ZeroIntegral(f"{h.label} has no nonzero left integral")
    return space.basis[0]


def is_cosemisimple(h: HopfAlgebraData) -> bool:
    """A right integral that does not vanish at 1."""
    return bool(h.field.reduce(np.dot(right_integral(h), h.unit)) != 0)


# ── Distinguished group-like ──────────────────────────────────────────────────

def _coaction_of_integral(h: HopfAlgebraData, chi: np.ndarray) -> np.ndarray:
    """w[a, b] = coefficient of e_b in a_(1) χ(a_(2)); also conv(e_b*, χ)(e_a)."""
    return h.field.tensordot(h.comult, chi, ([2], [0]))


def _gamma_candidate(h: HopfAlgebraData) -> tuple[np.ndarray, np.ndarray, bool]:
    """(χ, γ, whether a_(1)χ(a_(2)) = χ(a)γ holds for every basis element a)."""
    f = h.field
    chi = right_integral(h)
    w = _coaction_of_integral(h, chi)
    witness = int(np.flatnonzero(chi != 0)[0])
    gamma = f.reduce(w[witness] * f.inv(chi[witness]))
    relation = bool(np.array_equal(w, f.reduce(np.multiply.outer(chi, gamma))))
    return chi, gamma, relation


@lru_cache(maxsize=64)
def distinguished_grouplike(h: HopfAlgebraData) -> GroupLikeElement:
    """γ with a_(1) χ(a_(2)) = χ(a)·γ for the right integral χ."""
    _, gamma, relation = _gamma_candidate(h)
    if not relation:
        raise CertificateError(f"a_(1)χ(a_(2)) = χ(a)γ fails on {h.label}")
    if not is_grouplike(h, gamma):
        raise CertificateError(f"candidate γ on {h.label} is not group-like")
    return GroupLikeElement(h, gamma)


def is_unimodular(h: HopfAlgebraData) -> bool:
    return distinguished_grouplike(h).is_unit()


def acts_on_integrals(g: Comodule) -> bool:
    """Whether the line g is the right integrals as an H*-module.

    Each e_a* acts on g by a scalar read off its rational action; on χ it acts
    by convolution, (e_a*·χ)(x) = e_a*(x_(1)) χ(x_(2)). The two must agree.
    """
    h = g.parent
    if g.dim != 1:
        return False
    chi = right_integral(h)
    conv = _coaction_of_integral(h, chi)          # conv[k, a] = (e_a*·χ)(e_k)
    scalars = rational_action(g).action[:, 0, 0]
    return bool(np.array_equal(conv, h.field.reduce(np.multiply.outer(chi, scalars))))


def gamma_comodule(h: HopfAlgebraData) -> Comodule:
    """Γ: the line of right integrals, on which ξ ∈ H* acts by ξ(γ)."""
    g = one_dimensional_comodule(h, distinguished_grouplike(h), "Γ")
    if not acts_on_integrals(g):
        raise CertificateError(f"Γ does not act on the right integrals of {h.label} as H* does")
    return g


@dataclass(frozen=True)
class GammaReport(Report):
    gamma: str
    integral_relation: bool
    grouplike: bool
    action_matches: bool
    invertible_with_dual: bool
    properties: tuple[str, ...] = ()


def gamma_check(h: HopfAlgebraData, *, seed: int, attempts: int) -> GammaReport:
    _, gamma, relation = _gamma_candidate(h)
    grouplike = is_grouplike(h, gamma)
    text = describe_vector(h, gamma)
    if not (relation and grouplike):
        return GammaReport(text, relation, grouplike, False, False)
    g = one_dimensional_comodule(h, gamma, "Γ")
    product = tensor_comodule(g, dual_comodule(g))
    iso = isomorphism_test(product, trivial_comodule(h), seed=seed, attempts=attempts)
    properties = []
    if is_unimodular(h):
        properties.append("unimodular")
    if is_cosemisimple(h):
        properties.append("cosemisimple")
    return GammaReport(text, relation, grouplike, acts_on_integrals(g),
                       iso.status is IsoStatus.ISOMORPHIC, tuple(properties))


# ── Sweedler's isomorphism ────────────────────────────────────────────────────

@dataclass(frozen=True)
class SweedlerReport(Report):
    side: str
    rank: int
    dim: int
    bijective: bool
    kernel: tuple[str, ...] = ()


def _sweedler_matrix(h: HopfAlgebraData, side: str) -> Matrix:
    f = h.field
    s = h.antipode.data
    if side == "left":
        # W[a, h] = φ(e_a S(e_h))
        p = f.tensordot(h.mult, left_integral(h), ([2], [0]))
        return Matrix(f, f.matmul(p, s))
    if side == "right":
        # W[a, h] = χ(S(e_h) e_a)
        p = f.tensordot(h.mult, right_integral(h), ([2], [0]))
        return Matrix(f, f.matmul(np.ascontiguousarray(p.T), s))
    raise InvalidInput(f"side must be 'left' or 'right', got {side!r}")


def sweedler_iso_check(h: HopfAlgebraData, side: str = "left") -> SweedlerReport:
    """H → H*, h ↦ (a ↦ φ(a S(h))), is bijective; right variant uses χ(S(h) a)."""
    w = _sweedler_matrix(h, side)
    r = rank(w)
    kernel: tuple[str, ...] = ()
    if r < h.dim:
        kernel = tuple(" ".join(h.field.format_array(v)) for v in kernel_basis(w))
    return SweedlerReport(side, r, h.dim, r == h.dim, kernel)


@dataclass(frozen=True)
class PhiStarReport(Report):
    intertwines: bool
    nonzero: bool


def phi_star_check(h: HopfAlgebraData) -> PhiStarReport:
    """φ*(h)(a) = φ(h S(a)) is H*-linear from H (action h ↦ ξ(h_(1))h_(2)) to H*."""
    f = h.field
    p = f.tensordot(h.mult, left_integral(h), ([2], [0]))
    phi = np.ascontiguousarray(f.matmul(p, h.antipode.data).T)
    r = h.comult.transpose(1, 2, 0)          # r[a, c, h] = comult[h, a, c]
    conv = h.comult.transpose(2, 0, 1)       # conv[a, k, b] = comult[k, b, a]
    left = f.tensordot(phi, r, ([1], [1])).transpose(1, 0, 2)
    right = f.tensordot(conv, phi, ([2], [0]))
    return PhiStarReport(bool(np.array_equal(left, right)), bool(np.any(phi != 0)))


# ── Antipode ──────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class NotFinite:
    bound: int


def antipode_bijective(h: HopfAlgebraData) -> bool:
    return rank(h.antipode) == h.dim


def antipode_order(h: HopfAlgebraData, bound_factor: int = 4) -> int | NotFinite:
    """Least m ≥ 1 with S^m = id, searched up to bound_factor·n²."""
    bound = bound_factor * h.dim * h.dim
    power = h.antipode
    for m in range(1, bound + 1):
        if power.is_identity():
            return m
        power = power @ h.antipode
    return NotFinite(bound)


@dataclass(frozen=True)
class AntipodeReport(Report):
    bijective: bool
    order_found: bool
    order: str


def antipode_check(h: HopfAlgebraData, bound_factor: int = 4) -> AntipodeReport:
    order = antipode_order(h, bound_factor)
    found = isinstance(order, int)
    return AntipodeReport(antipode_bijective(h), found,
                          str(order) if found else f"none up to {order.bound}")
