"""The rank-2 Weyl group as a (finite or infinite) dihedral group.

Every element has a unique alternating reduced word, stored as
``WeylWord(first, length)`` for ``r_first r_other r_first ...``.  Acting on a
weight applies the rightmost letter first.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cartan import (
    SIMPLE_COROOTS,
    CartanMatrix,
    CorootVector,
    RootVector,
    Weight,
    pairing,
    reflect_simple,
)


def _other(i: int) -> int:
    return 3 - i


@dataclass(frozen=True, order=True, slots=True)
class WeylWord:
    first: int = 0
    length: int = 0

    def __post_init__(self) -> None:
        if self.length == 0:
            if self.first != 0:
                raise ValueError("identity has no first letter")
        elif self.first not in (1, 2) or self.length < 0:
            raise ValueError(f"bad word ({self.first}, {self.length})")

    def letters(self) -> tuple[int, ...]:
        """Letters left to right."""
        out = []
        i = self.first
        for _ in range(self.length):
            out.append(i)
            i = _other(i)
        return tuple(out)

    def __str__(self) -> str:
        if self.length == 0:
            return "e"
        return "".join(f"r{i}" for i in self.letters())


IDENTITY = WeylWord()


def _to_rotation_form(w: WeylWord) -> tuple[int, bool]:
    # w = rho^k or rho^k * r1, where rho = r1 r2
    n, f = w.length, w.first
    if n == 0:
        return 0, False
    if n % 2 == 0:
        return (n // 2, False) if f == 1 else (-(n // 2), False)
    j = n // 2
    return (j, True) if f == 1 else (-j - 1, True)


def _from_rotation_form(k: int, refl: bool, order: int | None) -> WeylWord:
    if order is not None:
        k %= order
        # pick the representative of minimal length, ties to first letter 1
        candidates = [k, k - order]
        if refl:
            k = min(candidates, key=lambda c: (2 * c + 1 if c >= 0 else -2 * c - 1, c < 0))
        else:
            k = min(candidates, key=lambda c: (abs(2 * c), c < 0))
    if not refl:
        if k == 0:
            return IDENTITY
        return WeylWord(1, 2 * k) if k > 0 else WeylWord(2, -2 * k)
    return WeylWord(1, 2 * k + 1) if k >= 0 else WeylWord(2, -2 * k - 1)


def canonical(cm: CartanMatrix, letters) -> WeylWord:
    """Canonical word of an arbitrary product of simple reflections."""
    w = IDENTITY
    for i in letters:
        w = compose(cm, w, WeylWord(i, 1))
    return w


def compose(cm: CartanMatrix, x: WeylWord, y: WeylWord) -> WeylWord:
    kx, sx = _to_rotation_form(x)
    ky, sy = _to_rotation_form(y)
    # r1 rho r1 = rho^-1
    k = kx - ky if sx else kx + ky
    return _from_rotation_form(k, sx != sy, cm.dihedral_order())


def inverse(cm: CartanMatrix, w: WeylWord) -> WeylWord:
    return canonical(cm, reversed(w.letters()))


def act(cm: CartanMatrix, w: WeylWord, mu: Weight) -> Weight:
    for i in reversed(w.letters()):
        mu = reflect_simple(cm, i, mu)
    return mu


def act_root(cm: CartanMatrix, w: WeylWord, r: RootVector) -> RootVector:
    for i in reversed(w.letters()):
        r = cm.reflect_root(i, r)
    return r


def act_coroot(cm: CartanMatrix, w: WeylWord, d: CorootVector) -> CorootVector:
    for i in reversed(w.letters()):
        d = cm.reflect_coroot(i, d)
    return d


def words(cm: CartanMatrix, max_length: int) -> list[WeylWord]:
    """All group elements with canonical length <= max_length."""
    out = [IDENTITY]
    order = cm.dihedral_order()
    for n in range(1, max_length + 1):
        if order is not None and n > order:
            break
        if order is not None and n == order:
            out.append(WeylWord(1, n))
        else:
            out.extend([WeylWord(1, n), WeylWord(2, n)])
    return out


@dataclass(frozen=True, slots=True)
class RealRoot:
    root: RootVector
    coroot: CorootVector
    reflection_word: WeylWord

    def reflect(self, cm: CartanMatrix, mu: Weight) -> Weight:
        return reflect_by(cm, self, mu)


def reflect_by(cm: CartanMatrix, beta: RealRoot, mu: Weight) -> Weight:
    """mu - <mu, beta^vee> beta."""
    return mu - cm.root_to_weight(beta.root).scale(pairing(mu, beta.coroot))


def positive_real_roots(cm: CartanMatrix, max_reflection_length: int) -> list[RealRoot]:
    """Reflections of canonical length <= bound, each with its positive root.

    The odd word ``(f, 2j+1)`` is the palindrome ``w r_i w^-1`` where ``w`` is
    its prefix of length j and ``i`` the middle letter; its root is w(alpha_i).
    """
    roots = []
    for w in words(cm, max_reflection_length):
        if w.length % 2 == 0:
            continue
        j = w.length // 2
        middle = w.letters()[j]
        prefix = WeylWord(w.first, j) if j else IDENTITY
        root = act_root(cm, prefix, RootVector(*((1, 0) if middle == 1 else (0, 1))))
        coroot = act_coroot(cm, prefix, SIMPLE_COROOTS[middle])
        roots.append(RealRoot(root, coroot, w))
    return roots


@dataclass
class Orbit:
    """Weyl orbit points keyed by their first (shortest) canonical word."""

    points: dict[WeylWord, Weight]
    collisions: list[tuple[WeylWord, WeylWord]]

    @property
    def weights(self) -> list[Weight]:
        return list(self.points.values())

    def word_of(self, mu: Weight) -> WeylWord | None:
        for w, nu in self.points.items():
            if nu == mu:
                return w
        return None


def orbit(cm: CartanMatrix, mu: Weight, max_word_length: int) -> Orbit:
    points: dict[WeylWord, Weight] = {}
    seen: dict[Weight, WeylWord] = {}
    collisions = []
    for w in words(cm, max_word_length):
        nu = act(cm, w, mu)
        if nu in seen:
            collisions.append((seen[nu], w))
            continue
        seen[nu] = w
        points[w] = nu
    return Orbit(points, collisions)
