"""Exceptions raised by hopfint.

Library code raises these and never prints or exits; the CLI maps them to
exit codes (InvalidInput and HopfVerificationError are input errors, exit 2).
"""
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from hopfint.hopf_core import VerificationReport


class HopfError(Exception):
    """Base class for every error hopfint raises on purpose."""


class InvalidInput(HopfError):
    """Malformed data: dimension mismatch, mixed fields, bad parameters."""


class HopfVerificationError(HopfError):
    """Structure tensors are well-formed but fail one or more Hopf axioms."""

    def __init__(self, report: VerificationReport, name: str = ""):
        self.report = report
        label = f"{name}: " if name else ""
        super().__init__(f"{label}not a Hopf algebra ({report.diagnostic()})")


class CertificateError(HopfError):
    """An identity the library certifies exactly did not hold."""


class SnakeFailure(CertificateError):
    """ev/db violate a zig-zag identity, which points at an antipode convention bug."""


class NotRational(HopfError):
    """An H*-module whose candidate coaction fails the comodule axioms."""


class NonInvertibleAntipode(HopfError):
    """A negative antipode power was requested but S is singular."""


class ZeroIntegral(HopfError):
    """The right integral space is zero where a nonzero integral is required."""
