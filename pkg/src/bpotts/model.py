"""Potts model parameters and their specialization to the blob-algebra skein weights."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coefficients import QfScalar, Rational


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class PhysicalParams:
    kT: float
    kappa: float

    def __post_init__(self) -> None:
        if not self.kT > 0:
            raise ParameterError(f"kT must be positive, got {self.kT}")


@dataclass(frozen=True)
class FloatWeights:
    f: int
    B: float
    C: float

    @property
    def D(self) -> float:
        return 1.0 - self.C


def physical_to_model(p: PhysicalParams, f: int) -> FloatWeights:
    """Bond weights B = exp(-1/kT) - 1 and C = exp(-kappa/kT).

    Floating point only; the exact pipeline takes B and C as rationals.
    """
    if not p.kT > 0:
        raise ParameterError(f"kT must be positive, got {p.kT}")
    return FloatWeights(f=f, B=math.expm1(-1.0 / p.kT), C=math.exp(-p.kappa / p.kT))


@dataclass(frozen=True)
class ModelParams:
    """Bond weights together with the derived skein parameters.

    ``alpha``/``beta`` weight the identity and cup-cap terms of an inner
    crossing, ``alpha0``/``beta0`` those of a wall crossing.  ``d`` is the
    plain loop weight, ``c`` the blob self-merge factor and ``c_prime`` the
    weight of a closed blobbed loop.
    """

    f: int
    B: QfScalar
    C: QfScalar
    D: QfScalar
    d: QfScalar
    c: QfScalar
    c_prime: QfScalar
    alpha: QfScalar
    beta: QfScalar
    alpha0: QfScalar
    beta0: QfScalar

    def one(self) -> QfScalar:
        return QfScalar(1, 0, self.f)

    def scalar(self, x: Rational) -> QfScalar:
        return QfScalar(x, 0, self.f)


def make_model(f: int, B: Rational, C: Rational, c_gauge: Rational = 1) -> ModelParams:
    if not isinstance(f, int) or f < 1:
        raise ParameterError(f"f must be a positive integer, got {f!r}")
    B, C, c_gauge = Fraction(B), Fraction(C), Fraction(c_gauge)
    if C == 0:
        raise ParameterError("C = 0 leaves beta0 = D/(C c) undefined")
    if c_gauge == 0:
        raise ParameterError("c_gauge must be nonzero")
    one = QfScalar(1, 0, f)
    d = QfScalar.sqrt(f)
    Bq, Cq = QfScalar(B, 0, f), QfScalar(C, 0, f)
    Dq = one - Cq
    c = c_gauge * d
    c_prime = c / d
    return ModelParams(
        f=f,
        B=Bq,
        C=Cq,
        D=Dq,
        d=d,
        c=c,
        c_prime=c_prime,
        alpha=one,
        beta=Bq / d,
        alpha0=one,
        beta0=Dq / (Cq * c),
    )

