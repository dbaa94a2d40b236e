"""The dual Hopf algebra H*, its convolution product and left H*-modules.

Rational H*-modules and right H-comodules are the same thing:
a comodule N becomes an H*-module by ξ·n = n_(0) ξ(n_(1)), and a module
whose action matrices assemble into a coassociative coaction comes back.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from hopfint.comodules import (
    Comodule, require_same_parent, regular_comodule, trivial_comodule, verify_comodule,
)
from hopfint.errors import InvalidInput, NotRational
from hopfint.exactla import LinearMap, Matrix, intertwiners
from hopfint.hopf_core import HopfAlgebraData, Report

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ConvolutionAlgebra:
    parent: HopfAlgebraData
    mult: np.ndarray     # e_i* * e_j* = Σ_k mult[i, j, k] e_k*
    unit: np.ndarray     # ε


def convolution_algebra(h: HopfAlgebraData) -> ConvolutionAlgebra:
    h.require_verified()
    return ConvolutionAlgebra(h, np.ascontiguousarray(h.comult.transpose(1, 2, 0)), h.counit)


def convolve(h: HopfAlgebraData, f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """(f * g)(x) = f(x_(1)) g(x_(2))."""
    fld = h.field
    t = fld.tensordot(h.comult, fld.asarray(f), ([1], [0]))    # (k, b)
    return fld.tensordot(t, fld.asarray(g), ([1], [0]))


def dual_hopf(h: HopfAlgebraData) -> HopfAlgebraData:
    """H* on the dual basis; dual_hopf(dual_hopf(h)) has h's tensors."""
    return HopfAlgebraData(
        field=h.field,
        basis=tuple(f"{b}*" for b in h.basis),
        mult=np.ascontiguousarray(h.comult.transpose(1, 2, 0)),
        unit=h.counit,
        comult=np.ascontiguousarray(h.mult.transpose(2, 0, 1)),
        counit=h.unit,
        antipode=h.antipode.T,
        name=f"({h.label})*",
    )


# ── Modules ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class HStarModule:
    parent: HopfAlgebraData
    action: np.ndarray     # (n, d, d): action[i] is the matrix of e_i*
    name: str = ""

    def __post_init__(self):
        arr = self.parent.field.asarray(self.action)
        if arr.ndim != 3 or arr.shape[0] != self.parent.dim or arr.shape[1] != arr.shape[2]:
            raise InvalidInput(f"action has shape {arr.shape}, expected ({self.parent.dim}, d, d)")
        arr.flags.writeable = False
        object.__setattr__(self, "action", arr)

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    @property
    def label(self) -> str:
        return self.name or f"module(dim {self.dim})"

    def act(self, i: int) -> Matrix:
        return Matrix(self.parent.field, self.action[i])

    def act_functional(self, xi) -> Matrix:
        f = self.parent.field
        return Matrix(f, f.tensordot(f.asarray(xi), self.action, ([0], [0])))


@dataclass(frozen=True)
class ModuleReport(Report):
    module_law: bool
    unit_law: bool


def verify_module(m: HStarModule) -> ModuleReport:
    h = m.parent
    f = h.field
    act = m.action
    conv = h.comult.transpose(1, 2, 0)
    lhs = f.tensordot(act, act, ([2], [1])).transpose(0, 2, 1, 3)   # act[i] @ act[j]
    rhs = f.tensordot(conv, act, ([2], [0]))
    unit = f.tensordot(h.counit, act, ([0], [0]))
    return ModuleReport(bool(np.array_equal(lhs, rhs)), bool(np.array_equal(unit, f.eye(m.dim))))


def rational_action(m: Comodule) -> HStarModule:
    """ξ·f_i = Σ_{j,a} coaction[i, j, a] ξ(e_a) f_j."""
    return HStarModule(m.parent, m.components, f"rat({m.label})")


def module_to_comodule(mod: HStarModule) -> Comodule:
    c = Comodule(mod.parent, mod.action.transpose(2, 1, 0), f"co({mod.label})")
    report = verify_comodule(c)
    if not report.ok:
        raise NotRational(f"{mod.label} is not rational: {', '.join(report.failures())} failed")
    return c


def trivial_module(h: HopfAlgebraData) -> HStarModule:
    return rational_action(trivial_comodule(h))


def regular_module(h: HopfAlgebraData) -> HStarModule:
    return rational_action(regular_comodule(h))


def module_hom(m: HStarModule, n: HStarModule) -> list[LinearMap[HStarModule, HStarModule]]:
    """A basis of Hom_{H*}(M, N)."""
    require_same_parent(m, n)
    basis = intertwiners(m.parent.field, m.action, n.action)
    log.debug("dim Hom_H*(%s, %s) = %d", m.label, n.label, len(basis))
    return [LinearMap(m, n, b) for b in basis]
