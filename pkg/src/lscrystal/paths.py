"""Lakshmibai-Seshadri paths and their root operators, in exact arithmetic.

A path is stored as directions nu_1 > ... > nu_s in the Weyl orbit of its
shape together with cut points 0 = sigma_0 < ... < sigma_s = 1; it is the
piecewise-linear map whose velocity on [sigma_{u-1}, sigma_u] is nu_u.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .cartan import CartanMatrix, Weight, reflect_simple
from .crystal import weyl_act as _weyl_act
from .order import DEFAULT_CONFIG, NotComparable, OrderConfig, sigma_chain_exists
from .weyl import WeylWord, words, act

ONE = Fraction(1)
ZERO_Q = Fraction(0)


class InvalidPath(ValueError):
    pass


@dataclass(frozen=True)
class CornerProfile:
    """H_i = <pi(t), alpha_i^vee> sampled at every cut point."""

    i: int
    corners: tuple[tuple[Fraction, Fraction], ...]

    @cached_property
    def min_value(self) -> int:
        m = min(h for _, h in self.corners)
        if m.denominator != 1:
            raise ArithmeticError(f"non-integral minimum {m} of H_{self.i}")
        return int(m)

    @property
    def end_value(self) -> Fraction:
        return self.corners[-1][1]

    def local_minima(self) -> list[Fraction]:
        hs = [h for _, h in self.corners]
        out = []
        for k, h in enumerate(hs):
            left_ok = k == 0 or hs[k - 1] >= h
            right_ok = k == len(hs) - 1 or hs[k + 1] >= h
            if left_ok and right_ok:
                out.append(h)
        return out


@dataclass(frozen=True)
class LSPath:
    cartan: CartanMatrix
    shape: Weight
    dirs: tuple[Weight, ...]
    cuts: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.dirs or len(self.cuts) != len(self.dirs) + 1:
            raise InvalidPath("need s directions and s+1 cuts")
        if self.cuts[0] != 0 or self.cuts[-1] != 1:
            raise InvalidPath("cuts must start at 0 and end at 1")

    # -- crystal structure ------------------------------------------------

    def profile(self, i: int) -> CornerProfile:
        return self._profiles[i - 1]

    @cached_property
    def _profiles(self) -> tuple[CornerProfile, CornerProfile]:
        out = []
        for i in (1, 2):
            h = ZERO_Q
            corners = [(ZERO_Q, h)]
            for k, nu in enumerate(self.dirs):
                h += (self.cuts[k + 1] - self.cuts[k]) * nu.coord(i)
                corners.append((self.cuts[k + 1], h))
            out.append(CornerProfile(i, tuple(corners)))
        return tuple(out)

    @cached_property
    def _wt(self) -> Weight:
        x, y = self.evaluate(ONE)
        if x.denominator != 1 or y.denominator != 1:
            raise ArithmeticError(f"endpoint ({x},{y}) is not an integral weight")
        return Weight(int(x), int(y))

    def wt(self) -> Weight:
        return self._wt

    def eps(self, i: int) -> int:
        return -self.profile(i).min_value

    def phi(self, i: int) -> int:
        prof = self.profile(i)
        return int(prof.end_value) - prof.min_value

    def e(self, i: int) -> LSPath | None:
        return raise_path(self, i)

    def f(self, i: int) -> LSPath | None:
        return lower_path(self, i)

    # -- geometry ---------------------------------------------------------

    def evaluate(self, t) -> tuple[Fraction, Fraction]:
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise ValueError(f"t={t} outside [0, 1]")
        x = y = ZERO_Q
        for k, nu in enumerate(self.dirs):
            a, b = self.cuts[k], self.cuts[k + 1]
            if t <= a:
                break
            step = min(t, b) - a
            x += step * nu.m1
            y += step * nu.m2
        return x, y

    @property
    def is_straight(self) -> bool:
        return len(self.dirs) == 1

    def text(self) -> str:
        dirs = ",".join(str(nu) for nu in self.dirs)
        cuts = ",".join(str(c) for c in self.cuts)
        return f"dirs=[{dirs}];cuts=[{cuts}]"

    __str__ = text


def canonicalize(cm: CartanMatrix, shape: Weight, dirs, cuts) -> LSPath:
    """Drop empty segments and merge equal neighbours."""
    dirs = list(dirs)
    cuts = [Fraction(c) for c in cuts]
    if not dirs or len(cuts) != len(dirs) + 1:
        raise InvalidPath("need s directions and s+1 cuts")
    if cuts[0] != 0 or cuts[-1] != 1:
        raise InvalidPath("cuts must start at 0 and end at 1")
    if any(b < a for a, b in zip(cuts, cuts[1:])):
        raise InvalidPath("cuts not monotone")
    out_dirs: list[Weight] = []
    out_cuts = [ZERO_Q]
    for k, nu in enumerate(dirs):
        if cuts[k + 1] == cuts[k]:
            continue
        if out_dirs and out_dirs[-1] == nu:
            out_cuts[-1] = cuts[k + 1]
        else:
            out_dirs.append(nu)
            out_cuts.append(cuts[k + 1])
    return LSPath(cm, shape, tuple(out_dirs), tuple(out_cuts))


def straight(cm: CartanMatrix, nu: Weight, shape: Weight | None = None) -> LSPath:
    return LSPath(cm, nu if shape is None else shape, (nu,), (ZERO_Q, ONE))


_TEXT = re.compile(r"^dirs=\[(?P<dirs>[^\]]*)\];cuts=\[(?P<cuts>[^\]]*)\]$")


def parse_path(cm: CartanMatrix, shape: Weight, text: str) -> LSPath:
    m = _TEXT.match(text.strip().replace(" ", ""))
    if not m:
        raise InvalidPath(f"cannot parse path {text!r}")
    pairs = re.findall(r"\((-?\d+),(-?\d+)\)", m["dirs"])
    dirs = tuple(Weight(int(a), int(b)) for a, b in pairs)
    cuts = tuple(Fraction(c) for c in m["cuts"].split(","))
    return LSPath(cm, shape, dirs, cuts)


def _rebuild(pi: LSPath, i: int, t0: Fraction, t1: Fraction) -> LSPath:
    """Reflect the directions on [t0, t1] by r_i, leaving the rest alone."""
    cm = pi.cartan
    dirs, cuts = [], [ZERO_Q]
    for k, nu in enumerate(pi.dirs):
        a, b = pi.cuts[k], pi.cuts[k + 1]
        for lo, hi, reflect in ((a, min(b, t0), False),
                                (max(a, t0), min(b, t1), True),
                                (max(a, t1), b, False)):
            if hi > lo:
                dirs.append(reflect_simple(cm, i, nu) if reflect else nu)
                cuts.append(hi)
    return canonicalize(cm, pi.shape, dirs, cuts)


def raise_path(pi: LSPath, i: int) -> LSPath | None:
    prof = pi.profile(i)
    m = prof.min_value
    if m == 0:
        return None
    corners = prof.corners
    k1 = next(k for k, (_, h) in enumerate(corners) if h == m)
    t1 = corners[k1][0]
    # last crossing of level m+1 before t1: scan segments right to left
    k = k1 - 1
    while corners[k][1] < m + 1:
        k -= 1
    ta, ha = corners[k]
    slope = pi.dirs[k].coord(i)
    t0 = ta + (m + 1 - ha) / slope
    return _rebuild(pi, i, t0, t1)


def lower_path(pi: LSPath, i: int) -> LSPath | None:
    prof = pi.profile(i)
    m = prof.min_value
    if prof.end_value - m == 0:
        return None
    corners = prof.corners
    k0 = max(k for k, (_, h) in enumerate(corners) if h == m)
    t0 = corners[k0][0]
    k = k0 + 1
    while corners[k][1] < m + 1:
        k += 1
    ta, ha = corners[k - 1]
    slope = pi.dirs[k - 1].coord(i)
    t1 = ta + (m + 1 - ha) / slope
    return _rebuild(pi, i, t0, t1)


def weight(pi: LSPath) -> Weight:
    return pi.wt()


def epsilon(pi: LSPath, i: int) -> int:
    return pi.eps(i)


def phi(pi: LSPath, i: int) -> int:
    return pi.phi(i)


def weyl_act(pi: LSPath, w: WeylWord) -> LSPath:
    return _weyl_act(pi, w)


@lru_cache(maxsize=256)
def _orbit_set(cm: CartanMatrix, mu: Weight, max_length: int) -> frozenset[Weight]:
    return frozenset(act(cm, w, mu) for w in words(cm, max_length))


def in_orbit(cm: CartanMatrix, mu: Weight, nu: Weight, max_length: int = 48) -> bool:
    return nu in _orbit_set(cm, mu, max_length)


def validation_error(pi: LSPath, cfg: OrderConfig = DEFAULT_CONFIG) -> str | None:
    """None for a certified LS path, otherwise the reason it is rejected."""
    cm = pi.cartan
    if any(not in_orbit(cm, pi.shape, nu) for nu in pi.dirs):
        return "invalid: dirs not in orbit"
    if any(b <= a for a, b in zip(pi.cuts, pi.cuts[1:])):
        return "invalid: cuts not monotone"
    if any(a == b for a, b in zip(pi.dirs, pi.dirs[1:])):
        return "invalid: repeated direction"
    for u in range(1, len(pi.dirs)):
        try:
            ok = sigma_chain_exists(cm, pi.cuts[u], pi.dirs[u - 1], pi.dirs[u], cfg)
        except NotComparable:
            ok = False
        if not ok:
            return "not certified within bounds"
    x, y = pi.evaluate(ONE)
    if x.denominator != 1 or y.denominator != 1:
        return "invalid: endpoint not integral"
    return None


def validate(pi: LSPath, cfg: OrderConfig = DEFAULT_CONFIG) -> bool:
    return validation_error(pi, cfg) is None
