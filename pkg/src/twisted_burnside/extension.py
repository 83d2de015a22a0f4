"""Reidemeister numbers on lattice extensions G = Z^k x|_theta Z.

Elements are pairs (v, n) with v in Z^k, n in Z, multiplied by
(v, n)(w, m) = (v + theta^n w, n + m) for a unimodular k x k matrix theta.
Endomorphisms here have the translation-free form phi(v, n) = (B v, eps n)
with eps = +1 or -1, which requires B theta = theta^eps B.

Fiber-wise counting (the derivation shipped with this module):
with eps = -1 the twisted action works out to

    (w, m) . (v, n) = (w + theta^m v - theta^(2m+n) B w,  n + 2m),

so an acting element shifts the fiber index n by 2m: the parity of the
fiber is an orbit invariant and every orbit meets exactly one of the fibers
n0 = 0 or n0 = 1.  The only moves that preserve a fiber have m = 0, where
they translate v by (I - theta^(n0) B) w.  Orbits
inside fiber n0 are exactly the cosets of the lattice (I - theta^(n0) B)Z^k,
giving

    R(phi) = |det(I - B)| + |det(I - theta B)|,

Infinite when either determinant vanishes.  With eps = +1 the induced map
on the quotient Z is the identity, whose twisted classes are the infinitely
many cosets of (1 - 1)Z; classes upstairs surject onto them, so R(phi) is
Infinite outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .abelian import lattice_coset_reps
from .errors import IncompatibleTwist, InfiniteClasses
from .infinite import INFINITE, InfiniteType
from .intmat import IntegerMatrix, unimodular_inverse

ReidemeisterValue = Union[int, InfiniteType]


@dataclass(frozen=True, eq=False)
class LatticeExtensionGroup:
    k: int
    theta: IntegerMatrix


def lattice_extension(theta) -> LatticeExtensionGroup:
    if not isinstance(theta, IntegerMatrix):
        theta = IntegerMatrix.from_rows(theta)
    if not theta.is_square:
        raise ValueError("theta must be square")
    if abs(theta.det()) != 1:
        raise ValueError(f"theta must be unimodular, det = {theta.det()}")
    return LatticeExtensionGroup(k=theta.rows, theta=theta)


@dataclass(frozen=True, eq=False)
class ExtensionEndo:
    """phi(v, n) = (B v, eps * n); construct via validate_extension_endo."""

    b: IntegerMatrix
    eps: int


def validate_extension_endo(group: LatticeExtensionGroup, b,
                            eps: int) -> ExtensionEndo:
    """Check the compatibility B theta = theta^eps B exactly."""
    if not isinstance(b, IntegerMatrix):
        b = IntegerMatrix.from_rows(b)
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if b.rows != group.k or b.cols != group.k:
        raise ValueError(f"B must be {group.k}x{group.k}")
    theta = group.theta
    theta_eps = theta if eps == 1 else unimodular_inverse(theta)
    if b @ theta != theta_eps @ b:
        raise IncompatibleTwist(
            f"B*theta != theta^({eps})*B for B={b.to_lists()}, "
            f"theta={theta.to_lists()}")
    return ExtensionEndo(b=b, eps=eps)


def _fiber_lattices(group: LatticeExtensionGroup,
                    endo: ExtensionEndo) -> list[IntegerMatrix]:
    eye = IntegerMatrix.identity(group.k)
    return [eye - endo.b, eye - group.theta @ endo.b]


def reidemeister_extension(group: LatticeExtensionGroup,
                           endo: ExtensionEndo) -> ReidemeisterValue:
    """R(phi) for phi(v, n) = (Bv, eps n); see the module docstring."""
    if endo.eps == 1:
        return INFINITE
    total = 0
    for lat in _fiber_lattices(group, endo):
        d = lat.det()
        if d == 0:
            return INFINITE
        total += abs(d)
    return total


def fiber_class_reps(group: LatticeExtensionGroup,
                     endo: ExtensionEndo) -> list[tuple[tuple[int, ...], int]]:
    """Explicit twisted-class representatives (v, n0), n0 in {0, 1}.

    For each fiber, coset representatives of (I - theta^(n0) B)Z^k are
    enumerated through the Smith basis."""
    if endo.eps == 1:
        raise InfiniteClasses("eps = +1 gives infinitely many classes")
    out = []
    for n0, lat in enumerate(_fiber_lattices(group, endo)):
        if lat.det() == 0:
            raise InfiniteClasses(
                f"det(I - theta^{n0} B) = 0: fiber {n0} has infinitely "
                f"many classes")
        for vec in lattice_coset_reps(lat):
            out.append((vec, n0))
    return out
