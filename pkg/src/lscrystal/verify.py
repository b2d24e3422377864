"""Verification suites run by ``lscrystal verify``.

Each suite returns a list of ``Check`` results; a suite passes when every
check has zero violations.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .cartan import LAMBDA, CartanMatrix, Weight, pairing, reflect_simple, simple_root_in_weight_coords
from .crystal import max_lower_count, max_raise_count, s_i, weyl_act
from .explorer import (
    CrystalGraph,
    connectivity_audit,
    explore,
    extremal_scan,
    orbit_injectivity_check,
)
from .order import DEFAULT_CONFIG, OrderConfig, greater_equal, root_pool, sigma_chain
from .paths import straight, validation_error
from .similarity import check_diagram, check_dilation, check_similarity
from .weyl import orbit, words

log = logging.getLogger(__name__)

SUITES = ("operators", "order", "extremal", "similarity")
SIGMAS = tuple(sorted({Fraction(p, q) for q in range(2, 7) for p in range(1, q)}))


@dataclass
class Check:
    name: str
    violations: list = field(default_factory=list)
    count: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def expect(self, ok: bool, detail) -> None:
        self.count += 1
        if not ok:
            self.violations.append(detail)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status} {self.name} ({self.count} checks, {len(self.violations)} violations)"
        if self.violations:
            msg += f": first {self.violations[0]}"
        return msg


def operator_checks(g: CrystalGraph) -> list[Check]:
    cm = g.cartan
    inverse = Check("inverse e_i f_i")
    bookkeeping = Check("weight bookkeeping")
    string = Check("phi - eps = <wt, alpha_i^vee>")
    normal = Check("eps/phi equal max-power counts")
    minima = Check("integral local minima")
    reflection = Check("S_i involution and wt(S_i b) = r_i wt(b)")
    for p, i in product(g.nodes, (1, 2)):
        alpha = simple_root_in_weight_coords(cm, i)
        lo, hi = p.f(i), p.e(i)
        if lo is not None:
            inverse.expect(lo.e(i) == p, (p.text(), "f", i))
            bookkeeping.expect(lo.wt() == p.wt() - alpha, (p.text(), "f", i))
        if hi is not None:
            inverse.expect(hi.f(i) == p, (p.text(), "e", i))
            bookkeeping.expect(hi.wt() == p.wt() + alpha, (p.text(), "e", i))
        string.expect(p.phi(i) - p.eps(i) == p.wt().coord(i), (p.text(), i))
        normal.expect(p.eps(i) == max_raise_count(p, i) and p.phi(i) == max_lower_count(p, i), (p.text(), i))
        minima.expect(all(h.denominator == 1 for h in p.profile(i).local_minima()), (p.text(), i))
        q = s_i(p, i)
        reflection.expect(s_i(q, i) == p and q.wt() == reflect_simple(cm, i, p.wt()), (p.text(), i))
    return [inverse, bookkeeping, string, normal, minima, reflection]


def brute_force_chains(cm: CartanMatrix, nu: Weight, nu_prime: Weight, cfg: OrderConfig,
                       limit: int | None = None):
    """Enumerate every admissible chain nu -> nu' explicitly (no memoisation)."""
    limit = cfg.max_chain_length if limit is None else limit

    def below(xi):
        d = cm.weight_to_root(nu_prime - xi)
        return d is not None and d.is_nonnegative()

    def walk(xi, chain):
        if xi == nu_prime:
            yield list(chain)
            return
        if len(chain) == limit:
            return
        for beta in root_pool(cm, cfg.max_reflection_length):
            c = pairing(xi, beta.coroot)
            if c >= 0:
                continue
            eta = xi - cm.root_to_weight(beta.root).scale(c)
            if below(eta):
                chain.append(eta)
                yield from walk(eta, chain)
                chain.pop()

    if below(nu):
        yield from walk(nu, [])


def order_checks(cm: CartanMatrix, shape: Weight, max_word_length: int,
                 cfg: OrderConfig = DEFAULT_CONFIG, larger: OrderConfig | None = None) -> list[Check]:
    larger = larger or OrderConfig(cfg.max_reflection_length + 4, cfg.max_chain_length + 4)
    points = orbit(cm, shape, max_word_length).weights
    ge = {(a, b): greater_equal(cm, a, b, cfg) for a in points for b in points}
    antisym = Check("antisymmetry")
    trans = Check("transitivity")
    mono = Check("monotone under larger bounds")
    certs = Check("sigma-chain certificates")
    reflexive = Check("reflexivity")
    for a in points:
        reflexive.expect(ge[a, a], str(a))
    for a, b in product(points, points):
        if a != b:
            antisym.expect(not (ge[a, b] and ge[b, a]), (str(a), str(b)))
        if ge[a, b]:
            mono.expect(greater_equal(cm, a, b, larger), (str(a), str(b)))
    for a, b, c in product(points, points, points):
        if ge[a, b] and ge[b, c]:
            trans.expect(ge[a, c], (str(a), str(b), str(c)))
    for (a, b), holds in ge.items():
        if not holds or a == b:
            continue
        for sigma in SIGMAS:
            chain = sigma_chain(cm, sigma, a, b, cfg)
            if chain is None:
                continue
            for step in chain:
                c = pairing(step.source, step.root.coroot)
                scaled = sigma * c
                ok = (c < 0 and scaled.denominator == 1 and scaled < 0
                      and step.root.reflect(cm, step.source) == step.target)
                longest = max(len(ch) for ch in brute_force_chains(cm, step.source, step.target, cfg))
                certs.expect(ok and longest == 1, (str(a), str(b), str(sigma), str(step.source)))
    return [reflexive, antisym, trans, mono, certs]


def extremal_checks(g: CrystalGraph, word_bound: int) -> list[Check]:
    cm = g.cartan
    connected = Check("BFS parentage to seed")
    for node in connectivity_audit(g):
        connected.expect(False, node.text())
    connected.count = len(g.nodes)
    mult = Check("multiplicity one at the shape weight")
    mult.expect(g.weight_tally.get(g.shape, 0) == 1, g.weight_tally.get(g.shape, 0))
    scan = extremal_scan(g, word_bound)
    ext = Check("extremal elements are S_w of the straight path")
    base = straight(cm, g.shape, g.shape)
    present = set(g.nodes)
    base_images = {img for img in (weyl_act(base, w) for w in words(cm, word_bound)) if img in present}
    ext.expect(set(scan.paths) == base_images and scan.ok,
               sorted(p.text() for p in set(scan.paths) ^ base_images))
    ext.count = len(g.nodes)
    inj = Check("S_x pi = S_y pi iff x(shape) = y(shape)")
    inj.expect(orbit_injectivity_check(cm, word_bound, g.shape), word_bound)
    return [connected, mult, ext, inj]


def similarity_checks(g: CrystalGraph, ms=(2, 3), diagram=((2, 2),)) -> list[Check]:
    ident = Check("similarity identities")
    dil = Check("dilation intertwines operators")
    diag = Check("similarity diagram commutes")
    for p in g.nodes:
        for m in ms:
            report = check_similarity(p, m)
            ident.expect(report.ok, (p.text(), m, report.failures()))
            for name, ok in check_dilation(p, m):
                dil.expect(ok, (p.text(), m, name))
        for m, n in diagram:
            diag.expect(check_diagram(p, m, n), (p.text(), m, n))
    return [ident, dil, diag]


def validity_checks(g: CrystalGraph, cfg: OrderConfig = DEFAULT_CONFIG) -> list[Check]:
    valid = Check("explored nodes certify as LS paths")
    for p in g.nodes:
        reason = validation_error(p, cfg)
        valid.expect(reason is None, (p.text(), reason))
    return [valid]


def run_suite(name: str, cm: CartanMatrix, shape: Weight = LAMBDA, depth: int = 6,
              word_bound: int = 6, cfg: OrderConfig = DEFAULT_CONFIG) -> list[Check]:
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, cm, shape, depth, word_bound, cfg)]
    if name == "order":
        return order_checks(cm, shape, word_bound, cfg)
    g = explore(cm, straight(cm, shape, shape), depth, cfg)
    if name == "operators":
        return operator_checks(g) + validity_checks(g, cfg)
    if name == "extremal":
        return extremal_checks(g, word_bound)
    if name == "similarity":
        return similarity_checks(g)
    raise ValueError(f"unknown suite {name!r}")
