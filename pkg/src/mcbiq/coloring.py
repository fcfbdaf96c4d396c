"""Homset enumeration: colorings of a diagram by a finite mc-biquandle.

At a positive crossing of class t the outgoing semiarcs are determined by
    under_out = under_in under_t over_in
    over_out  = over_in  over_t  under_in
and at a negative crossing the same equations hold with the in/out roles
exchanged; the two-variable map S_t is invertible (axiom ii), so each crossing
constrains its four semiarcs the same amount in either sign.
"""

from dataclasses import dataclass
from itertools import product

from .algebra import McBiquandle, check_axioms
from .diagram import LinkDiagram

DEFAULT_BRUTE_BOUND = 10 ** 8


@dataclass(frozen=True)
class Homset:
    diagram: LinkDiagram
    mcb: McBiquandle
    colorings: tuple[tuple[int, ...], ...]  # each indexed by semiarc id, values 1-based

    def __len__(self):
        return len(self.colorings)

    def as_maps(self):
        return [{sid: col[sid] for sid in range(len(col))} for col in self.colorings]


class _Tables:
    """Forward and inverse lookup tables for one mc-biquandle."""

    def __init__(self, x: McBiquandle):
        self.n = x.n
        self.und = {"s": x.under_s, "m": x.under_m}
        self.ov = {"s": x.over_s, "m": x.over_m}
        self.alpha_inv = {}   # [j][y][v] = x with x under_j y = v
        self.beta_inv = {}
        self.s_inv = {}       # [j][(y over x, x under y)] = (x, y)
        n = x.n
        for j in ("s", "m"):
            und, ov = self.und[j], self.ov[j]
            ai = [[0] * (n + 1) for _ in range(n + 1)]
            bi = [[0] * (n + 1) for _ in range(n + 1)]
            si = {}
            for xx in range(1, n + 1):
                for y in range(1, n + 1):
                    ai[y][und[xx - 1][y - 1]] = xx
                    bi[y][ov[xx - 1][y - 1]] = xx
                    si[(ov[y - 1][xx - 1], und[xx - 1][y - 1])] = (xx, y)
            self.alpha_inv[j] = ai
            self.beta_inv[j] = bi
            self.s_inv[j] = si


def _crossing_records(d: LinkDiagram):
    recs = []
    for cid in d.crossing_ids:
        c = d.crossings[cid]
        if c.sign > 0:
            recs.append((c.cls, c.under_in, c.over_in, c.under_out, c.over_out))
        else:
            recs.append((c.cls, c.under_out, c.over_out, c.under_in, c.over_in))
    return recs


def _propagate(recs, tabs, col):
    """Forward-propagate crossing constraints to a fixpoint.

    col holds 0 for unassigned semiarcs.  Returns False on contradiction.
    """
    changed = True
    while changed:
        changed = False
        for cls, ui, oi, uo, oo in recs:
            a, b, c, d = col[ui], col[oi], col[uo], col[oo]
            known = (a > 0) + (b > 0) + (c > 0) + (d > 0)
            if known < 2:
                continue
            und, ov = tabs.und[cls], tabs.ov[cls]
            if a and b:
                nc, nd = und[a - 1][b - 1], ov[b - 1][a - 1]
            elif c and d:
                na, nb = tabs.s_inv[cls][(d, c)]
                if col[ui] and col[ui] != na:
                    return False
                if col[oi] and col[oi] != nb:
                    return False
                if not col[ui]:
                    col[ui] = na
                    changed = True
                if not col[oi]:
                    col[oi] = nb
                    changed = True
                continue
            elif a and d:
                nb = tabs.beta_inv[cls][a][d]
                nc, nd = und[a - 1][nb - 1], d
                if col[oi] and col[oi] != nb:
                    return False
                if not col[oi]:
                    col[oi] = nb
                    changed = True
            elif b and c:
                na = tabs.alpha_inv[cls][b][c]
                nc, nd = c, ov[b - 1][na - 1]
                if col[ui] and col[ui] != na:
                    return False
                if not col[ui]:
                    col[ui] = na
                    changed = True
            else:
                continue
            if col[uo] and col[uo] != nc:
                return False
            if col[oo] and col[oo] != nd:
                return False
            if not col[uo]:
                col[uo] = nc
                changed = True
            if not col[oo]:
                col[oo] = nd
                changed = True
    return True


def find_colorings(d: LinkDiagram, x: McBiquandle) -> Homset:
    """All colorings, in lexicographic order of the semiarc-indexed value vector."""
    rep = check_axioms(x)
    if not rep.passed:
        raise ValueError("target is not a valid mc-biquandle")
    tabs = _Tables(x)
    recs = _crossing_records(d)
    m = d.semiarc_count
    n = x.n
    results = []

    def rec(col):
        try:
            sid = col.index(0)
        except ValueError:
            results.append(tuple(col))
            return
        for v in range(1, n + 1):
            trial = col[:]
            trial[sid] = v
            if _propagate(recs, tabs, trial):
                rec(trial)

    start = [0] * m
    if m == 0:
        return Homset(d, x, ((),) if not recs else ())
    if _propagate(recs, tabs, start):
        rec(start)
    return Homset(d, x, tuple(results))


def count(d: LinkDiagram, x: McBiquandle) -> int:
    return len(find_colorings(d, x))


def satisfies(d: LinkDiagram, x: McBiquandle, col) -> bool:
    """Does a full assignment satisfy every crossing relation?"""
    und = {"s": x.under_s, "m": x.under_m}
    ov = {"s": x.over_s, "m": x.over_m}
    for cls, ui, oi, uo, oo in _crossing_records(d):
        a, b = col[ui], col[oi]
        if col[uo] != und[cls][a - 1][b - 1] or col[oo] != ov[cls][b - 1][a - 1]:
            return False
    return True


def brute_force_colorings(d: LinkDiagram, x: McBiquandle,
                          bound=DEFAULT_BRUTE_BOUND) -> Homset:
    """Exhaustive filter over all assignments; independent oracle for find_colorings."""
    m = d.semiarc_count
    if x.n ** m > bound:
        raise ValueError(f"{x.n}^{m} assignments exceed the brute-force bound {bound}")
    cols = tuple(col for col in product(range(1, x.n + 1), repeat=m)
                 if satisfies(d, x, col))
    return Homset(d, x, cols)
