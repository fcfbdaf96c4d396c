"""Coloring counts for linear (Alexander-type) structures over prime moduli.

Each crossing contributes two linear relations over Z_p, so the homset is the
kernel of a (2c) x (semiarcs) matrix and the count is p^(kernel dimension).
"""

from dataclasses import dataclass

from .algebra import AlexanderParams, ParamError, alexander_mcb
from .diagram import LinkDiagram


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ColoringMatrix:
    modulus: int
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def render(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


def build_coloring_matrix(d: LinkDiagram, params: AlexanderParams) -> ColoringMatrix:
    """Rows per crossing (relation order: under-rule then over-rule, crossings by id)."""
    p = params.modulus
    if not is_prime(p):
        raise ParamError(f"modulus {p} is not prime")
    ncols = d.semiarc_count
    rows = []
    for cid in d.crossing_ids:
        c = d.crossings[cid]
        t, r = params.t(c.cls) % p, params.r(c.cls) % p
        if c.sign > 0:
            ui, oi, uo, oo = c.under_in, c.over_in, c.under_out, c.over_out
        else:
            ui, oi, uo, oo = c.under_out, c.over_out, c.under_in, c.over_in
        row1 = [0] * ncols
        row1[ui] = (row1[ui] + t) % p
        row1[oi] = (row1[oi] + r - t) % p
        row1[uo] = (row1[uo] - 1) % p
        row2 = [0] * ncols
        row2[oi] = (row2[oi] + r) % p
        row2[oo] = (row2[oo] - 1) % p
        rows.append(tuple(row1))
        rows.append(tuple(row2))
    return ColoringMatrix(p, tuple(rows), ncols)


def rref_mod_p(m: ColoringMatrix):
    """Reduced row-echelon form over Z_p; returns (ColoringMatrix, rank)."""
    p = m.modulus
    if not is_prime(p):
        raise ParamError(f"modulus {p} is not prime")
    rows = [list(r) for r in m.rows]
    nrows, ncols = len(rows), m.ncols
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return ColoringMatrix(p, tuple(tuple(r) for r in rows), ncols), rank


def kernel_size(m: ColoringMatrix) -> int:
    _, rank = rref_mod_p(m)
    return m.modulus ** (m.ncols - rank)


def linear_count(d: LinkDiagram, params: AlexanderParams) -> int:
    """Fast path for count(d, alexander_mcb(params)); prime modulus only."""
    alexander_mcb(params)  # validates the parameter equations
    return kernel_size(build_coloring_matrix(d, params))
