"""Scratch driver: identify link-table candidates by invariant fingerprints.

Not shipped.  Run from the repo root:  python3 tools/explore.py
"""

import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import braidlib
from mcbiq import endomorphisms, find_colorings, load_mcb, parse_gauss
from mcbiq.algebra import AlexanderParams
from mcbiq.linear import build_coloring_matrix, kernel_size
from mcbiq.quiver import build_quiver, indegree_polynomial

DATA = Path(__file__).parent.parent / "src" / "mcbiq" / "data"

X3 = load_mcb(DATA / "ex211.mcb")
X4 = load_mcb(DATA / "ex38.mcb")
ENDOS4 = endomorphisms(X4)

# diagonal Alexander structures (same ops at s- and m-crossings): genuine
# Fox/Alexander coloring counts, strong for telling small links apart
ALEX = [(3, 2), (5, 2), (5, 3), (7, 2), (7, 3), (7, 4), (7, 5),
        (11, 2), (11, 6), (13, 2), (13, 5)]


def alex_counts(d):
    out = []
    for p, t in ALEX:
        params = AlexanderParams(p, t, 1, t, 1)
        out.append(kernel_size(build_coloring_matrix(d, params)))
    return tuple(out)


def orientation_sweep(d):
    c = len(d.components)
    out = []
    for r in range(c):
        for subset in combinations(range(1, c), r):
            dd = d
            for ci in subset:
                dd = dd.reversed_component(ci)
            out.append((subset, dd))
    return out


def linking(d):
    tot = sum(d.crossings[cid].sign for cid in d.crossing_ids
              if d.crossings[cid].cls == "m")
    return tot // 2 if tot % 2 == 0 else tot / 2


def mirror_gauss(gauss):
    out = []
    for ch in gauss:
        out.append({"O": "U", "U": "O", "+": "-", "-": "+"}.get(ch, ch))
    return "".join(out)


def show(name, gauss):
    for tag, g in (("", gauss), ("  [mirror]", mirror_gauss(gauss))):
        d = parse_gauss(g)
        print(f"== {name}{tag}: comps={len(d.components)} "
              f"crossings={len(d.crossing_ids)} alex={alex_counts(d)}")
        for subset, dd in orientation_sweep(d):
            h = find_colorings(dd, X4)
            poly = indegree_polynomial(build_quiver(h, ENDOS4)).render()
            phi3 = len(find_colorings(dd, X3))
            print(f"   rev={subset or '()'} lk={linking(dd)} "
                  f"phi_X4={len(h)} phi_X3={phi3}  {poly}")


if __name__ == "__main__":
    for name, g in [
        ("L5a1? closure(s1 s2' s1 s2' s1)", braidlib.braid_closure([1, -2, 1, -2, 1], 3)),
        ("L5a1 = C(8/3) [2,1,2]", braidlib.rational_link([2, 1, 2])),
        ("L6a2 = C(10/3) [3,2,1]", braidlib.rational_link([3, 2, 1])),
        ("L7a? = C(18/5) [3,1,1,1,1]", braidlib.rational_link([3, 1, 1, 1, 1])),
        ("C(14/3) [4,1,1,1]", braidlib.rational_link([4, 1, 1, 1])),
        ("C(16/7) [2,3,1,1]", braidlib.rational_link([2, 3, 1, 1])),
        ("6*2 v1", braidlib.braid_closure([1, 1, -2, 1, -2, 1, -2], 3)),
        ("6*2 v2", braidlib.braid_closure([1, -2, -2, 1, -2, 1, -2], 3)),
        ("P(3,2,2)", braidlib.pretzel_link([3, 2, 2])),
        ("P(3,2,-2)", braidlib.pretzel_link([3, 2, -2])),
        ("P(3,-2,-2)", braidlib.pretzel_link([3, -2, -2])),
    ]:
        show(name, g)
