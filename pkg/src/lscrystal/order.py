"""The reflection order on a Weyl orbit, chain distance and sigma-chains.

nu >= nu' when nu' is reached from nu by reflections r_beta (beta a positive
real root) with <xi, beta^vee> < 0 at every step.  Each step adds a positive
multiple of beta, so every intermediate point xi satisfies nu' - xi in Q+;
the search is pruned to that box, which makes the step digraph finite and
acyclic.  Roots come from a bounded pool, so every answer holds "within cfg".
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import CartanMatrix, Weight, pairing
from .weyl import RealRoot, orbit, positive_real_roots, reflect_by

log = logging.getLogger(__name__)


class NotComparable(ValueError):
    """Raised when nu >= nu' does not hold within the configured bounds."""


@dataclass(frozen=True, slots=True)
class OrderConfig:
    max_reflection_length: int = 9
    max_chain_length: int = 12

    def __post_init__(self) -> None:
        if self.max_reflection_length < 1 or self.max_chain_length < 1:
            raise ValueError("order bounds must be >= 1")


DEFAULT_CONFIG = OrderConfig()


@lru_cache(maxsize=None)
def root_pool(cm: CartanMatrix, max_reflection_length: int) -> tuple[RealRoot, ...]:
    return tuple(positive_real_roots(cm, max_reflection_length))


def _below(cm: CartanMatrix, xi: Weight, target: Weight) -> bool:
    diff = cm.weight_to_root(target - xi)
    return diff is not None and diff.is_nonnegative()


def step_candidates(cm: CartanMatrix, xi: Weight, cfg: OrderConfig = DEFAULT_CONFIG):
    """All (beta, r_beta xi) with beta in the pool and <xi, beta^vee> < 0."""
    return [
        (beta, reflect_by(cm, beta, xi))
        for beta in root_pool(cm, cfg.max_reflection_length)
        if pairing(xi, beta.coroot) < 0
    ]


@lru_cache(maxsize=200_000)
def chain_lengths(cm: CartanMatrix, nu: Weight, nu_prime: Weight, cfg: OrderConfig) -> frozenset[int]:
    """Lengths of all admissible chains from nu to nu' (capped by cfg)."""
    memo: dict[Weight, frozenset[int]] = {}

    def lengths(xi: Weight) -> frozenset[int]:
        if xi == nu_prime:
            return frozenset({0})
        if xi in memo:
            return memo[xi]
        out: set[int] = set()
        for _, eta in step_candidates(cm, xi, cfg):
            if _below(cm, eta, nu_prime):
                out.update(n + 1 for n in lengths(eta) if n + 1 <= cfg.max_chain_length)
        memo[xi] = frozenset(out)
        return memo[xi]

    if not _below(cm, nu, nu_prime):
        return frozenset()
    return lengths(nu)


def greater_equal(cm: CartanMatrix, nu: Weight, nu_prime: Weight, cfg: OrderConfig = DEFAULT_CONFIG) -> bool:
    return bool(chain_lengths(cm, nu, nu_prime, cfg))


def greater(cm: CartanMatrix, nu: Weight, nu_prime: Weight, cfg: OrderConfig = DEFAULT_CONFIG) -> bool:
    return nu != nu_prime and greater_equal(cm, nu, nu_prime, cfg)


def dist(cm: CartanMatrix, nu: Weight, nu_prime: Weight, cfg: OrderConfig = DEFAULT_CONFIG) -> int:
    lengths = chain_lengths(cm, nu, nu_prime, cfg)
    if not lengths:
        raise NotComparable(f"{nu} >= {nu_prime} not found within {cfg}")
    return max(lengths)


@dataclass(frozen=True, slots=True)
class ChainStep:
    source: Weight
    root: RealRoot
    target: Weight


def sigma_chain(cm: CartanMatrix, sigma: Fraction, nu: Weight, nu_prime: Weight,
                cfg: OrderConfig = DEFAULT_CONFIG) -> list[ChainStep] | None:
    """A sigma-chain for (nu, nu') as a list of steps, or None if none is found."""
    sigma = Fraction(sigma)
    if not 0 < sigma < 1:
        raise ValueError(f"sigma must lie strictly between 0 and 1, got {sigma}")
    if not greater(cm, nu, nu_prime, cfg):
        raise NotComparable(f"{nu} > {nu_prime} not found within {cfg}")

    dead: set[tuple[Weight, int]] = set()

    def search(xi: Weight, budget: int) -> list[ChainStep] | None:
        if xi == nu_prime:
            return []
        if budget == 0 or (xi, budget) in dead:
            return None
        for beta, eta in step_candidates(cm, xi, cfg):
            scaled = sigma * pairing(xi, beta.coroot)
            if scaled.denominator != 1 or not _below(cm, eta, nu_prime):
                continue
            if dist(cm, xi, eta, cfg) != 1:
                continue
            rest = search(eta, budget - 1)
            if rest is not None:
                return [ChainStep(xi, beta, eta)] + rest
        dead.add((xi, budget))
        return None

    return search(nu, cfg.max_chain_length)


def sigma_chain_exists(cm: CartanMatrix, sigma: Fraction, nu: Weight, nu_prime: Weight,
                       cfg: OrderConfig = DEFAULT_CONFIG) -> bool:
    return sigma_chain(cm, sigma, nu, nu_prime, cfg) is not None


def length_shortcut_report(cm: CartanMatrix, mu: Weight, max_word_length: int,
                           cfg: OrderConfig = DEFAULT_CONFIG) -> dict[str, int]:
    """Compare the order with a word-length comparison on an orbit.

    For nu = x mu > nu' = y mu, tallies whether l(x) > l(y), l(x) < l(y) or
    equal.  Purely diagnostic: nothing is asserted, mismatches are logged.
    """
    orb = orbit(cm, mu, max_word_length)
    tally = {"longer": 0, "shorter": 0, "equal": 0, "collisions": len(orb.collisions)}
    items = list(orb.points.items())
    for x, nu in items:
        for y, nu_prime in items:
            if nu == nu_prime or not greater_equal(cm, nu, nu_prime, cfg):
                continue
            if x.length > y.length:
                tally["longer"] += 1
            elif x.length < y.length:
                tally["shorter"] += 1
            else:
                tally["equal"] += 1
                log.info("comparable orbit points with equal word length: %s, %s", x, y)
    return tally
