"""Rank-2 Cartan data in fundamental-weight coordinates.

Weights are stored as integer pairs (m1, m2) meaning m1*L1 + m2*L2, so the
pairing with a simple coroot is a coordinate read-off.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True, slots=True)
class Weight:
    m1: int
    m2: int

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.m1 + other.m1, self.m2 + other.m2)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.m1 - other.m1, self.m2 - other.m2)

    def __neg__(self) -> Weight:
        return Weight(-self.m1, -self.m2)

    def scale(self, k: int) -> Weight:
        return Weight(k * self.m1, k * self.m2)

    def coord(self, i: int) -> int:
        return self.m1 if i == 1 else self.m2

    def is_zero(self) -> bool:
        return self.m1 == 0 and self.m2 == 0

    def __str__(self) -> str:
        return f"({self.m1},{self.m2})"


ZERO = Weight(0, 0)
LAMBDA = Weight(1, -1)


def parse_weight(text: str) -> Weight:
    """Parse ``"m1,m2"`` or ``"(m1,m2)"``."""
    body = text.strip().strip("()")
    parts = body.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated integers, got {text!r}")
    return Weight(int(parts[0]), int(parts[1]))


@dataclass(frozen=True, order=True, slots=True)
class RootVector:
    """c1*alpha_1 + c2*alpha_2 in the root lattice."""

    c1: int
    c2: int

    def height(self) -> int:
        return self.c1 + self.c2

    def abs_sum(self) -> int:
        return abs(self.c1) + abs(self.c2)

    def is_nonnegative(self) -> bool:
        return self.c1 >= 0 and self.c2 >= 0


@dataclass(frozen=True, order=True, slots=True)
class CorootVector:
    """d1*alpha_1^vee + d2*alpha_2^vee."""

    d1: int
    d2: int


SIMPLE_COROOTS = {1: CorootVector(1, 0), 2: CorootVector(0, 1)}


@dataclass(frozen=True, slots=True)
class CartanMatrix:
    """Cartan matrix [[2, -a1], [-a2, 2]].

    The affine case a1*a2 == 4 is rejected: fundamental-weight coordinates
    do not separate weights that differ by the null root.
    """

    a1: int
    a2: int

    def __post_init__(self) -> None:
        if self.a1 < 0 or self.a2 < 0:
            raise ValueError("off-diagonal parameters must be nonnegative")
        if (self.a1 == 0) != (self.a2 == 0):
            raise ValueError("a1 and a2 must vanish together")
        if self.a1 * self.a2 == 4:
            raise ValueError("affine Cartan matrix (a1*a2 == 4) is not supported")

    @property
    def det(self) -> int:
        return 4 - self.a1 * self.a2

    @property
    def is_finite(self) -> bool:
        return self.a1 * self.a2 < 4

    @property
    def is_hyperbolic(self) -> bool:
        return self.a1 * self.a2 > 4

    @property
    def kind(self) -> str:
        return "finite" if self.is_finite else "hyperbolic"

    def entry(self, i: int, j: int) -> int:
        """a_ij = <alpha_j, alpha_i^vee>."""
        if i == j:
            return 2
        return -self.a1 if i == 1 else -self.a2

    def dihedral_order(self) -> int | None:
        """Order of r1*r2, or None when it is infinite."""
        if self.is_finite:
            return {0: 2, 1: 3, 2: 4, 3: 6}[self.a1 * self.a2]
        return None

    def root_to_weight(self, r: RootVector) -> Weight:
        return Weight(2 * r.c1 - self.a1 * r.c2, -self.a2 * r.c1 + 2 * r.c2)

    def weight_to_root(self, mu: Weight) -> RootVector | None:
        """Inverse of root_to_weight; None if mu is not in the root lattice."""
        n1 = 2 * mu.m1 + self.a1 * mu.m2
        n2 = self.a2 * mu.m1 + 2 * mu.m2
        if n1 % self.det or n2 % self.det:
            return None
        return RootVector(n1 // self.det, n2 // self.det)

    def reflect_root(self, i: int, r: RootVector) -> RootVector:
        if i == 1:
            return RootVector(-r.c1 + self.a1 * r.c2, r.c2)
        return RootVector(r.c1, self.a2 * r.c1 - r.c2)

    def reflect_coroot(self, i: int, d: CorootVector) -> CorootVector:
        if i == 1:
            return CorootVector(-d.d1 + self.a2 * d.d2, d.d2)
        return CorootVector(d.d1, self.a1 * d.d1 - d.d2)


def pairing(mu: Weight, co: CorootVector) -> int:
    return mu.m1 * co.d1 + mu.m2 * co.d2


def simple_root_in_weight_coords(cm: CartanMatrix, i: int) -> Weight:
    if i == 1:
        return Weight(2, -cm.a2)
    if i == 2:
        return Weight(-cm.a1, 2)
    raise ValueError(f"index must be 1 or 2, got {i}")


def reflect_simple(cm: CartanMatrix, i: int, mu: Weight) -> Weight:
    return mu - simple_root_in_weight_coords(cm, i).scale(mu.coord(i))


def is_dominant(mu: Weight) -> bool:
    return mu.m1 >= 0 and mu.m2 >= 0


def is_antidominant(mu: Weight) -> bool:
    return mu.m1 <= 0 and mu.m2 <= 0


def check_minus_r1_lambda_pairing(cm: CartanMatrix) -> int:
    """<-r1(lambda), alpha_2^vee> for lambda = L1 - L2; equals 1 - a2."""
    value = pairing(-reflect_simple(cm, 1, LAMBDA), SIMPLE_COROOTS[2])
    if value != 1 - cm.a2:
        raise AssertionError(f"pairing {value} != {1 - cm.a2}")
    return value
