"""Generic crystal machinery: the element contract, tensor products, the
Weyl group action S_w on normal crystals and bounded extremality checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Protocol, runtime_checkable

from .cartan import CartanMatrix, Weight, ZERO
from .weyl import IDENTITY, WeylWord, words


@runtime_checkable
class CrystalElem(Protocol):
    def wt(self) -> Weight: ...
    def eps(self, i: int) -> int: ...
    def phi(self, i: int) -> int: ...
    def e(self, i: int) -> Optional["CrystalElem"]: ...
    def f(self, i: int) -> Optional["CrystalElem"]: ...


def _wt_sum(factors) -> Weight:
    total = ZERO
    for b in factors:
        total = total + b.wt()
    return total


def _eps(factors, i: int) -> int:
    if len(factors) == 1:
        return factors[0].eps(i)
    left, right = factors[:-1], factors[-1]
    return max(_eps(left, i), right.eps(i) - _wt_sum(left).coord(i))


def _phi(factors, i: int) -> int:
    if len(factors) == 1:
        return factors[0].phi(i)
    left, right = factors[:-1], factors[-1]
    return max(right.phi(i), _phi(left, i) + right.wt().coord(i))


def _apply(factors, i: int, raising: bool):
    if len(factors) == 1:
        b = factors[0].e(i) if raising else factors[0].f(i)
        return None if b is None else (b,)
    left, right = factors[:-1], factors[-1]
    phi_left, eps_right = _phi(left, i), right.eps(i)
    on_left = phi_left >= eps_right if raising else phi_left > eps_right
    if on_left:
        new_left = _apply(left, i, raising)
        return None if new_left is None else new_left + (right,)
    b = right.e(i) if raising else right.f(i)
    return None if b is None else left + (b,)


@dataclass(frozen=True)
class TensorElem:
    """b_1 (x) ... (x) b_m, with the multi-factor rule folded from the left.

    Factors may themselves be tensors; ``flatten`` gives the plain factor list.
    """

    factors: tuple

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("a tensor needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    def wt(self) -> Weight:
        return _wt_sum(self.factors)

    def eps(self, i: int) -> int:
        return _eps(self.factors, i)

    def phi(self, i: int) -> int:
        return _phi(self.factors, i)

    def e(self, i: int) -> TensorElem | None:
        out = _apply(self.factors, i, raising=True)
        return None if out is None else TensorElem(out)

    def f(self, i: int) -> TensorElem | None:
        out = _apply(self.factors, i, raising=False)
        return None if out is None else TensorElem(out)

    def flatten(self) -> tuple:
        flat = []
        for b in self.factors:
            flat.extend(b.flatten() if isinstance(b, TensorElem) else (b,))
        return tuple(flat)

    def __str__(self) -> str:
        return " (x) ".join(str(b) for b in self.factors)


def tensor(*factors) -> TensorElem:
    return TensorElem(tuple(factors))


def tensor_raise(t: TensorElem, i: int) -> TensorElem | None:
    return t.e(i)


def tensor_lower(t: TensorElem, i: int) -> TensorElem | None:
    return t.f(i)


def e_power(b, i: int, n: int):
    for _ in range(n):
        if b is None:
            return None
        b = b.e(i)
    return b


def f_power(b, i: int, n: int):
    for _ in range(n):
        if b is None:
            return None
        b = b.f(i)
    return b


def max_raise_count(b, i: int) -> int:
    """Number of times e_i applies before vanishing."""
    n = 0
    b = b.e(i)
    while b is not None:
        n += 1
        b = b.e(i)
    return n


def max_lower_count(b, i: int) -> int:
    n = 0
    b = b.f(i)
    while b is not None:
        n += 1
        b = b.f(i)
    return n


def s_i(b, i: int):
    """Simple reflection S_i on a normal crystal element."""
    p = b.wt().coord(i)
    out = f_power(b, i, p) if p >= 0 else e_power(b, i, -p)
    if out is None:
        raise ArithmeticError(f"S_{i} undefined on {b}: crystal is not normal here")
    return out


def weyl_act(b, w: WeylWord):
    for i in reversed(w.letters()):
        b = s_i(b, i)
    return b


def iter_weyl_images(cm: CartanMatrix, b, max_word_length: int):
    """Yield (w, S_w b) for canonical words of length <= bound, shortest first."""
    images = {IDENTITY: b}
    yield IDENTITY, b
    for w in words(cm, max_word_length)[1:]:
        rest = WeylWord(3 - w.first, w.length - 1) if w.length > 1 else IDENTITY
        images[w] = s_i(images[rest], w.first)
        yield w, images[w]


def weyl_images(cm: CartanMatrix, b, max_word_length: int) -> dict:
    return dict(iter_weyl_images(cm, b, max_word_length))


def extremality_witness(cm: CartanMatrix, b, max_word_length: int):
    """First (w, i) at which b fails to be extremal, or None."""
    for w, bw in iter_weyl_images(cm, b, max_word_length):
        for i in (1, 2):
            p = bw.wt().coord(i)
            if p >= 0 and bw.e(i) is not None:
                return w, i
            if p <= 0 and bw.f(i) is not None:
                return w, i
    return None


def is_extremal_bounded(cm: CartanMatrix, b, max_word_length: int) -> bool:
    return extremality_witness(cm, b, max_word_length) is None
