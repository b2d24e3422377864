"""Bounded exploration of LS-path crystal graphs, characters and export."""
from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field

from .cartan import LAMBDA, CartanMatrix, Weight
from .crystal import is_extremal_bounded, weyl_act
from .order import DEFAULT_CONFIG, OrderConfig
from .paths import LSPath, parse_path, straight, validation_error
from .weyl import act, words


@dataclass
class CrystalGraph:
    """Nodes sorted by canonical text; edges are f_i-arrows (src, i, dst) by node index."""

    cartan: CartanMatrix
    shape: Weight
    seed: LSPath
    depth: int
    nodes: tuple[LSPath, ...]
    edges: tuple[tuple[int, int, int], ...]
    weight_tally: dict[Weight, int]
    # node -> (parent, move) where move is ("e"|"f", i); the seed maps to None
    parents: dict = field(default=None, compare=False, repr=False)
    audit_failures: list = field(default_factory=list, compare=False, repr=False)

    def index(self) -> dict[LSPath, int]:
        return {p: k for k, p in enumerate(self.nodes)}

    def edge_paths(self):
        return [(self.nodes[s], i, self.nodes[d]) for s, i, d in self.edges]

    def path_to_seed(self, node: LSPath) -> list[tuple[str, int]]:
        """Moves leading from the seed to node, following BFS parents."""
        moves = []
        while self.parents[node] is not None:
            node, move = self.parents[node]
            moves.append(move)
        return moves[::-1]


def explore(cm: CartanMatrix, seed: LSPath, depth: int, cfg: OrderConfig = DEFAULT_CONFIG,
            validate_every: int = 0) -> CrystalGraph:
    """All paths within ``depth`` operator applications (e_i or f_i) of the seed.

    With ``validate_every = k > 0`` every k-th node (in canonical order) is
    re-certified as an LS path; failures are kept on the graph, not raised.
    """
    if seed.cartan != cm:
        raise ValueError("seed belongs to a different Cartan matrix")
    parents = {seed: None}
    frontier = deque([seed])
    for _ in range(depth):
        nxt = deque()
        for node in frontier:
            for i in (1, 2):
                for kind, image in (("e", node.e(i)), ("f", node.f(i))):
                    if image is not None and image not in parents:
                        parents[image] = (node, (kind, i))
                        nxt.append(image)
        if not nxt:
            break
        frontier = nxt

    nodes = tuple(sorted(parents, key=LSPath.text))
    index = {p: k for k, p in enumerate(nodes)}
    edges = set()
    for p in nodes:
        for i in (1, 2):
            q = p.f(i)
            if q is not None and q in index:
                edges.add((index[p], i, index[q]))
            r = p.e(i)
            if r is not None and r in index:
                edges.add((index[r], i, index[p]))
    tally = Counter(p.wt() for p in nodes)
    graph = CrystalGraph(cm, seed.shape, seed, depth, nodes, tuple(sorted(edges)),
                         dict(sorted(tally.items())), parents)
    if validate_every > 0:
        for p in nodes[::validate_every]:
            reason = validation_error(p, cfg)
            if reason is not None:
                graph.audit_failures.append((p, reason))
    return graph


def weight_multiplicities(g: CrystalGraph) -> dict[Weight, int]:
    return dict(g.weight_tally)


def character(g: CrystalGraph) -> list[tuple[Weight, int]]:
    """Truncated character: (weight, multiplicity) sorted by weight."""
    return sorted(g.weight_tally.items())


@dataclass
class ExtremalScan:
    paths: list[LSPath]
    words: dict[LSPath, object]
    unmatched: list[LSPath]

    @property
    def ok(self) -> bool:
        return not self.unmatched


def extremal_scan(g: CrystalGraph, word_bound: int) -> ExtremalScan:
    cm = g.cartan
    base = straight(cm, g.shape, g.shape)
    images = {}
    for w in words(cm, word_bound):
        images.setdefault(weyl_act(base, w), w)
    found = [p for p in g.nodes if is_extremal_bounded(cm, p, word_bound)]
    matched = {p: images[p] for p in found if p in images}
    return ExtremalScan(found, matched, [p for p in found if p not in images])


def orbit_injectivity_check(cm: CartanMatrix, word_bound: int, shape: Weight | None = None) -> bool:
    """S_x pi = S_y pi exactly when x(shape) = y(shape), over words up to the bound."""
    shape = LAMBDA if shape is None else shape
    base = straight(cm, shape, shape)
    ws = words(cm, word_bound)
    paths = [weyl_act(base, w) for w in ws]
    weights = [act(cm, w, shape) for w in ws]
    return all((paths[a] == paths[b]) == (weights[a] == weights[b])
               for a in range(len(ws)) for b in range(len(ws)))


def connectivity_audit(g: CrystalGraph) -> list[LSPath]:
    """Nodes whose recorded moves do not lead back from the seed to them."""
    bad = []
    for node in g.nodes:
        p = g.seed
        for kind, i in g.path_to_seed(node):
            p = p.e(i) if kind == "e" else p.f(i)
            if p is None:
                break
        if p != node:
            bad.append(node)
    return bad


# -- serialization -----------------------------------------------------------

def to_json(g: CrystalGraph) -> str:
    doc = {
        "cartan": {"a1": g.cartan.a1, "a2": g.cartan.a2},
        "shape": [g.shape.m1, g.shape.m2],
        "seed": g.seed.text(),
        "depth": g.depth,
        "nodes": [{"id": k, "path": p.text(), "wt": [p.wt().m1, p.wt().m2]}
                  for k, p in enumerate(g.nodes)],
        "edges": [{"src": s, "i": i, "dst": d} for s, i, d in g.edges],
        "tallies": [{"wt": [w.m1, w.m2], "count": c} for w, c in g.weight_tally.items()],
    }
    return json.dumps(doc, indent=1) + "\n"


def from_json(text: str) -> CrystalGraph:
    doc = json.loads(text)
    cm = CartanMatrix(doc["cartan"]["a1"], doc["cartan"]["a2"])
    shape = Weight(*doc["shape"])
    nodes = tuple(parse_path(cm, shape, n["path"]) for n in sorted(doc["nodes"], key=lambda n: n["id"]))
    edges = tuple((e["src"], e["i"], e["dst"]) for e in doc["edges"])
    tally = {Weight(*t["wt"]): t["count"] for t in doc["tallies"]}
    return CrystalGraph(cm, shape, parse_path(cm, shape, doc["seed"]), doc["depth"], nodes, edges, tally)


def to_dot(g: CrystalGraph) -> str:
    lines = [
        "digraph crystal {",
        f'  label="B({g.shape}) a1={g.cartan.a1} a2={g.cartan.a2} depth={g.depth}";',
        "  node [shape=box, fontsize=10];",
    ]
    for k, p in enumerate(g.nodes):
        lines.append(f'  n{k} [label="{p.text()}\\nwt={p.wt()}"];')
    colors = {1: "blue", 2: "red"}
    for s, i, d in g.edges:
        lines.append(f'  n{s} -> n{d} [label="{i}", color={colors[i]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(g: CrystalGraph, fmt: str = "json") -> bytes:
    if fmt == "json":
        return to_json(g).encode()
    if fmt == "dot":
        return to_dot(g).encode()
    raise ValueError(f"unknown format {fmt!r}")
