"""Dilation, concatenation and the similarity embedding B(mu) -> B(mu)^(x)m.

sigma_m(pi) dilates pi by m, cuts the result into m unit-time pieces and reads
the pieces as an m-fold tensor.  Operators on a concatenation are obtained by
transport through the tensor rule; ``Concatenation.glued`` gives the same
object as a single path so the corner-profile route can be compared directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import Weight
from .crystal import TensorElem, e_power, f_power
from .paths import LSPath, ZERO_Q, canonicalize, lower_path, raise_path, straight


def dilate(pi: LSPath, m: int) -> LSPath:
    if m < 1:
        raise ValueError("dilation factor must be positive")
    return LSPath(pi.cartan, pi.shape.scale(m), tuple(nu.scale(m) for nu in pi.dirs), pi.cuts)


def _divide(nu: Weight, m: int) -> Weight:
    if nu.m1 % m or nu.m2 % m:
        raise ValueError(f"direction {nu} is not divisible by {m}")
    return Weight(nu.m1 // m, nu.m2 // m)


@dataclass(frozen=True)
class Concatenation:
    pieces: tuple[LSPath, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise ValueError("empty concatenation")
        if len({p.shape for p in self.pieces}) != 1:
            raise ValueError("pieces of a concatenation must share a shape")

    @property
    def m(self) -> int:
        return len(self.pieces)

    def evaluate(self, t) -> tuple[Fraction, Fraction]:
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise ValueError(f"t={t} outside [0, 1]")
        m = self.m
        k = min(int(t * m) + 1, m)
        x = y = ZERO_Q
        for p in self.pieces[:k - 1]:
            w = p.wt()
            x, y = x + w.m1, y + w.m2
        px, py = self.pieces[k - 1].evaluate(m * t - k + 1)
        return x + px, y + py

    def to_tensor(self) -> TensorElem:
        return TensorElem(self.pieces)

    def glued(self) -> LSPath:
        """The concatenation as one path of shape m*mu (not necessarily LS)."""
        m = self.m
        dirs, cuts = [], [ZERO_Q]
        for k, p in enumerate(self.pieces):
            for u, nu in enumerate(p.dirs):
                dirs.append(nu.scale(m))
                cuts.append((p.cuts[u + 1] + k) / m)
        first = self.pieces[0]
        return canonicalize(first.cartan, first.shape.scale(m), dirs, cuts)


def split(pi: LSPath, m: int) -> Concatenation:
    """Cut a path of shape m*mu into m paths of shape mu."""
    shape = _divide(pi.shape, m)
    pieces = []
    for k in range(m):
        lo, hi = Fraction(k, m), Fraction(k + 1, m)
        dirs, cuts = [], [ZERO_Q]
        for u, nu in enumerate(pi.dirs):
            a, b = max(pi.cuts[u], lo), min(pi.cuts[u + 1], hi)
            if b > a:
                dirs.append(_divide(nu, m))
                cuts.append(m * b - k)
        pieces.append(canonicalize(pi.cartan, shape, dirs, cuts))
    return Concatenation(tuple(pieces))


def sigma_m(pi: LSPath, m: int) -> TensorElem:
    return split(dilate(pi, m), m).to_tensor()


def concat_raise(c: Concatenation, i: int) -> Concatenation | None:
    t = c.to_tensor().e(i)
    return None if t is None else Concatenation(t.factors)


def concat_lower(c: Concatenation, i: int) -> Concatenation | None:
    t = c.to_tensor().f(i)
    return None if t is None else Concatenation(t.factors)


def concat_raise_by_profile(c: Concatenation, i: int) -> Concatenation | None:
    """Root operator applied to the glued path, then cut back into pieces."""
    out = raise_path(c.glued(), i)
    return None if out is None else split(out, c.m)


def concat_lower_by_profile(c: Concatenation, i: int) -> Concatenation | None:
    out = lower_path(c.glued(), i)
    return None if out is None else split(out, c.m)


@dataclass
class SimilarityReport:
    m: int
    entries: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.entries)

    def failures(self) -> list[str]:
        return [name for name, passed in self.entries if not passed]

    def add(self, name: str, passed: bool) -> None:
        self.entries.append((name, bool(passed)))


def _sigma_or_none(pi, m):
    return None if pi is None else sigma_m(pi, m)


def check_similarity(pi: LSPath, m: int) -> SimilarityReport:
    report = SimilarityReport(m)
    base = straight(pi.cartan, pi.shape, pi.shape)
    report.add("straight", sigma_m(base, m) == TensorElem((base,) * m))
    image = sigma_m(pi, m)
    report.add("wt", image.wt() == pi.wt().scale(m))
    for i in (1, 2):
        report.add(f"e{i}", _sigma_or_none(pi.e(i), m) == e_power(image, i, m))
        report.add(f"f{i}", _sigma_or_none(pi.f(i), m) == f_power(image, i, m))
        report.add(f"eps{i}", image.eps(i) == m * pi.eps(i))
        report.add(f"phi{i}", image.phi(i) == m * pi.phi(i))
    return report


def check_diagram(pi: LSPath, m: int, n: int) -> bool:
    """Sigma_n applied factorwise to Sigma_m(pi) equals Sigma_{mn}(pi)."""
    lhs = []
    for piece in sigma_m(pi, m).factors:
        lhs.extend(sigma_m(piece, n).factors)
    return tuple(lhs) == sigma_m(pi, m * n).factors


def check_dilation(pi: LSPath, m: int) -> list[tuple[str, bool]]:
    """Dilation intertwines e_i, f_i with their m-th powers."""
    big = dilate(pi, m)
    out = [("wt", big.wt() == pi.wt().scale(m))]
    for i in (1, 2):
        e, f = pi.e(i), pi.f(i)
        out.append((f"e{i}", (None if e is None else dilate(e, m)) == e_power(big, i, m)))
        out.append((f"f{i}", (None if f is None else dilate(f, m)) == f_power(big, i, m)))
        out.append((f"eps{i}", big.eps(i) == m * pi.eps(i)))
        out.append((f"phi{i}", big.phi(i) == m * pi.phi(i)))
    return out
