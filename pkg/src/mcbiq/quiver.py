"""Coloring quivers: one vertex per coloring, one edge f -> phi(f) per endomorphism.

The directed multigraph (edge labels forgotten) is a link invariant; the
in-degree polynomial is its simplest decategorification.
"""

import json
from collections import Counter
from dataclasses import dataclass

from .algebra import is_endomorphism
from .coloring import Homset


@dataclass(frozen=True)
class Quiver:
    vertices: int
    edges: tuple[tuple[int, int, int], ...]   # (src, dst, endo index)
    endos: tuple[tuple[int, ...], ...]
    homset: Homset | None = None


@dataclass(frozen=True)
class InDegreePolynomial:
    coeffs: tuple[tuple[int, int], ...]   # (exponent, coefficient), exponents descending

    def render(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*u^{e}" for e, c in self.coeffs)

    def evaluate(self, u):
        return sum(c * u ** e for e, c in self.coeffs)

    def derivative_at_one(self):
        return sum(c * e for e, c in self.coeffs)

    @classmethod
    def from_counter(cls, ctr):
        return cls(tuple(sorted(ctr.items(), reverse=True)))


def build_quiver(h: Homset, endos) -> Quiver:
    """Quiver of a homset under a non-empty duplicate-free endomorphism set."""
    endos = tuple(tuple(e) for e in endos)
    if not endos:
        raise ValueError("endomorphism set must be non-empty")
    if len(set(endos)) != len(endos):
        raise ValueError("endomorphism set contains duplicates")
    for e in endos:
        if not is_endomorphism(h.mcb, e):
            raise ValueError(f"{list(e)} is not an endomorphism of the target")
    index = {col: i for i, col in enumerate(h.colorings)}
    edges = []
    for i, col in enumerate(h.colorings):
        for ei, phi in enumerate(endos):
            img = tuple(phi[v - 1] for v in col)
            j = index.get(img)
            # closure of the homset under endomorphisms is a theorem; a miss
            # here means the homset is not what it claims to be
            assert j is not None, "endomorphism image left the homset"
            edges.append((i, j, ei))
    return Quiver(len(h.colorings), tuple(edges), endos, h)


def indegree_polynomial(q: Quiver) -> InDegreePolynomial:
    indeg = Counter()
    for _, dst, _ in q.edges:
        indeg[dst] += 1
    ctr = Counter(indeg.get(v, 0) for v in range(q.vertices))
    return InDegreePolynomial.from_counter(ctr)


def _adjacency(q: Quiver):
    adj = [Counter() for _ in range(q.vertices)]
    for src, dst, _ in q.edges:
        adj[src][dst] += 1
    return adj


def quiver_isomorphic(a: Quiver, b: Quiver):
    """A vertex bijection preserving directed edge multiplicities, or None.

    Edge labels are disregarded.  Degree-signature refinement first, then
    backtracking within the resulting classes.
    """
    if a.vertices != b.vertices or len(a.edges) != len(b.edges):
        return None
    n = a.vertices
    adj_a, adj_b = _adjacency(a), _adjacency(b)
    radj_a, radj_b = [Counter() for _ in range(n)], [Counter() for _ in range(n)]
    for src, tgt in ((s, t) for s, t, _ in a.edges):
        radj_a[tgt][src] += 1
    for src, tgt in ((s, t) for s, t, _ in b.edges):
        radj_b[tgt][src] += 1

    def refine(adj, radj):
        color = [0] * n
        for _ in range(n):
            sig = [
                (color[v],
                 tuple(sorted(Counter((m, color[w]) for w, m in adj[v].items()).items())),
                 tuple(sorted(Counter((m, color[w]) for w, m in radj[v].items()).items())))
                for v in range(n)
            ]
            order = {s: i for i, s in enumerate(sorted(set(sig)))}
            new = [order[s] for s in sig]
            if new == color:
                break
            color = new
        return color

    ca, cb = refine(adj_a, radj_a), refine(adj_b, radj_b)
    if sorted(ca) != sorted(cb):
        return None
    candidates = [[w for w in range(n) if cb[w] == ca[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    mapping = [-1] * n
    used = [False] * n

    def ok(v, w):
        for u2 in range(n):
            if mapping[u2] < 0:
                continue
            if adj_a[v][u2] != adj_b[w][mapping[u2]]:
                return False
            if adj_a[u2][v] != adj_b[mapping[u2]][w]:
                return False
        return adj_a[v][v] == adj_b[w][w]

    def rec(k):
        if k == n:
            return True
        v = order[k]
        for w in candidates[v]:
            if not used[w] and ok(v, w):
                mapping[v] = w
                used[w] = True
                if rec(k + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if rec(0):
        return tuple(mapping)
    return None


def _endo_label(e):
    return "[" + ",".join(str(v) for v in e) + "]"


def export_dot(q: Quiver) -> str:
    lines = ["digraph quiver {"]
    for v in range(q.vertices):
        if q.homset is not None:
            col = q.homset.colorings[v]
            lines.append(f'  v{v} [label="({",".join(str(c) for c in col)})"];')
        else:
            lines.append(f"  v{v};")
    for src, dst, ei in q.edges:
        lines.append(f'  v{src} -> v{dst} [label="{_endo_label(q.endos[ei])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(q: Quiver) -> str:
    vertices = []
    for v in range(q.vertices):
        entry = {"id": v}
        if q.homset is not None:
            col = q.homset.colorings[v]
            entry["coloring"] = {str(s): c for s, c in enumerate(col)}
        vertices.append(entry)
    doc = {
        "vertices": vertices,
        "edges": [{"src": s, "dst": t, "endo": _endo_label(q.endos[e])}
                  for s, t, e in q.edges],
        "endomorphisms": [list(e) for e in q.endos],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
