"""Finite mc-biquandles: operation tables, axiom checking, constructions.

An mc-biquandle on {1..n} carries two pairs of binary operations, one pair
used at single-component crossings (the "s" pair) and one at multi-component
crossings (the "m" pair).  Each pair consists of an under-operation and an
over-operation.  Tables are stored row = left operand, column = right operand,
with 1-based entries.
"""

from dataclasses import dataclass, field
from itertools import permutations, product

SIDES = ("s", "m")

# (j, k, l) triples over which the mixed exchange laws are required.
EXCHANGE_TRIPLES = (
    ("s", "s", "s"),
    ("s", "m", "m"),
    ("m", "s", "m"),
    ("m", "m", "s"),
    ("m", "m", "m"),
)

DEFAULT_ENUM_BOUND = 3
MAX_ENUM_ORDER = 4


class TableFormatError(ValueError):
    """An operation table is structurally malformed (wrong shape or entries)."""


Table = tuple[tuple[int, ...], ...]


def _as_table(rows, n):
    t = tuple(tuple(int(v) for v in row) for row in rows)
    if len(t) != n or any(len(row) != n for row in t):
        raise TableFormatError(f"expected {n}x{n} table, got shape "
                               f"{len(t)}x{set(len(r) for r in t)}")
    return t


@dataclass(frozen=True)
class McBiquandle:
    """Four n x n operation tables in the block order [under_s | over_s | under_m | over_m]."""

    n: int
    under_s: Table
    over_s: Table
    under_m: Table
    over_m: Table

    def __post_init__(self):
        if self.n < 1:
            raise TableFormatError("order must be positive")
        for name in ("under_s", "over_s", "under_m", "over_m"):
            object.__setattr__(self, name, _as_table(getattr(self, name), self.n))

    @classmethod
    def from_block(cls, block_rows):
        """Build from n rows of 4n entries, the [under_s|over_s|under_m|over_m] layout."""
        n = len(block_rows)
        rows = [list(r) for r in block_rows]
        if any(len(r) != 4 * n for r in rows):
            raise TableFormatError("block rows must have 4n entries")
        tabs = [[r[i * n:(i + 1) * n] for r in rows] for i in range(4)]
        return cls(n, *tabs)

    def to_block(self):
        return [list(self.under_s[i]) + list(self.over_s[i])
                + list(self.under_m[i]) + list(self.over_m[i])
                for i in range(self.n)]

    def under(self, j, x, y):
        return (self.under_s if j == "s" else self.under_m)[x - 1][y - 1]

    def over(self, j, x, y):
        return (self.over_s if j == "s" else self.over_m)[x - 1][y - 1]

    def table(self, kind, j):
        return getattr(self, f"{kind}_{j}")

    def entries_in_range(self):
        rng = range(1, self.n + 1)
        return all(v in rng
                   for tab in (self.under_s, self.over_s, self.under_m, self.over_m)
                   for row in tab for v in row)

    def check_entries(self):
        if not self.entries_in_range():
            raise TableFormatError("table entries must lie in {1..n}")


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance."""

    axiom: str            # "i", "ii", or "iii"
    detail: str           # which map or exchange law failed
    triple: tuple | None  # (j, k, l) for axiom iii, else None
    witness: tuple        # the elements exhibiting the failure


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    violations: tuple[Violation, ...]

    def __bool__(self):
        return self.passed


def _bijection_violations(x, j):
    """Axiom (ii) checks for side j: column maps and the two-variable swap map."""
    out = []
    n = x.n
    full = frozenset(range(1, n + 1))
    und, ov = x.table("under", j), x.table("over", j)
    for y in range(1, n + 1):
        col = frozenset(und[xx - 1][y - 1] for xx in range(1, n + 1))
        if col != full:
            out.append(Violation("ii", f"alpha^{j}_{y} not a bijection", None, (y,)))
        col = frozenset(ov[xx - 1][y - 1] for xx in range(1, n + 1))
        if col != full:
            out.append(Violation("ii", f"beta^{j}_{y} not a bijection", None, (y,)))
    seen = set(
        (ov[y - 1][xx - 1], und[xx - 1][y - 1])
        for xx in range(1, n + 1) for y in range(1, n + 1)
    )
    if len(seen) != n * n:
        out.append(Violation("ii", f"S^{j} not a bijection on X^2", None, ()))
    return out


def _exchange_violations(x):
    out = []
    n = x.n
    tabs = {("u", "s"): x.under_s, ("o", "s"): x.over_s,
            ("u", "m"): x.under_m, ("o", "m"): x.over_m}

    def u(j, a, b):
        return tabs[("u", j)][a - 1][b - 1]

    def o(j, a, b):
        return tabs[("o", j)][a - 1][b - 1]

    rng = range(1, n + 1)
    for (j, k, l) in EXCHANGE_TRIPLES:
        for a, b, c in product(rng, rng, rng):
            if o(l, o(k, a, b), o(j, c, b)) != o(k, o(l, a, c), u(j, b, c)):
                out.append(Violation("iii", "exchange law (over/over)", (j, k, l), (a, b, c)))
            if o(j, u(l, a, b), u(k, c, b)) != u(l, o(j, a, c), o(k, b, c)):
                out.append(Violation("iii", "exchange law (under/over)", (j, k, l), (a, b, c)))
            if u(j, u(k, a, b), u(l, c, b)) != u(k, u(j, a, c), o(l, b, c)):
                out.append(Violation("iii", "exchange law (under/under)", (j, k, l), (a, b, c)))
    return out


def check_axioms(x: McBiquandle) -> AxiomReport:
    """Exhaustively verify the mc-biquandle axioms, reporting every violation."""
    x.check_entries()
    violations = []
    for a in range(1, x.n + 1):
        if x.over("s", a, a) != x.under("s", a, a):
            violations.append(Violation("i", "x over_s x != x under_s x", None, (a,)))
    for j in SIDES:
        violations.extend(_bijection_violations(x, j))
    violations.extend(_exchange_violations(x))
    return AxiomReport(not violations, tuple(violations))


def is_valid(x: McBiquandle) -> bool:
    return check_axioms(x).passed


def _require_valid(x: McBiquandle):
    rep = check_axioms(x)
    if not rep.passed:
        raise ValueError(f"not a valid mc-biquandle ({len(rep.violations)} axiom violations, "
                         f"first: {rep.violations[0]})")


# ---------------------------------------------------------------------------
# Single-pair biquandle axioms (used by trivial_extension preconditions).

def check_biquandle_pair(under: Table, over: Table) -> AxiomReport:
    """Axioms for a single operation pair: the s=m degenerate case of the full check."""
    n = len(under)
    x = McBiquandle(n, under, over, under, over)
    x.check_entries()
    violations = []
    for a in range(1, n + 1):
        if x.over("s", a, a) != x.under("s", a, a):
            violations.append(Violation("i", "x over x != x under x", None, (a,)))
    violations.extend(_bijection_violations(x, "s"))
    for v in _exchange_violations(x):
        if v.triple == ("s", "s", "s"):
            violations.append(v)
    return AxiomReport(not violations, tuple(violations))


def trivial_extension(under: Table, over: Table) -> McBiquandle:
    """Extend a biquandle pair with projection m-operations (x op_m y = x)."""
    n = len(under)
    rep = check_biquandle_pair(under, over)
    if not rep.passed:
        raise ValueError(f"input pair is not a biquandle: {rep.violations[0]}")
    proj = tuple(tuple(x for _ in range(n)) for x in range(1, n + 1))
    return McBiquandle(n, under, over, proj, proj)


# ---------------------------------------------------------------------------
# Linear (Alexander-type) structures over Z_m.

@dataclass(frozen=True)
class AlexanderParams:
    """Units t_s, r_s, t_m, r_m modulo a fixed modulus, subject to compatibility equations."""

    modulus: int
    t_s: int
    r_s: int
    t_m: int
    r_m: int

    def t(self, j):
        return self.t_s if j == "s" else self.t_m

    def r(self, j):
        return self.r_s if j == "s" else self.r_m


class ParamError(ValueError):
    """Alexander parameters fail the unit or compatibility requirements."""


def check_alexander_params(p: AlexanderParams) -> list[str]:
    """Return human-readable failures; empty list means the parameters are admissible."""
    failures = []
    m = p.modulus
    if m < 2:
        return [f"modulus {m} < 2"]
    from math import gcd
    for name in ("t_s", "r_s", "t_m", "r_m"):
        v = getattr(p, name) % m
        if gcd(v, m) != 1:
            failures.append(f"{name}={getattr(p, name)} is not a unit mod {m}")
    if failures:
        return failures
    for (j, k, l) in EXCHANGE_TRIPLES:
        tj, rj = p.t(j), p.r(j)
        tk, rk = p.t(k), p.r(k)
        tl, rl = p.t(l), p.r(l)
        if (rj - rk) * (rl - tl) % m:
            failures.append(f"(r^j-r^k)(r^l-t^l) != 0 for (j,k,l)=({j},{k},{l})")
        if (tk - tl) * (rj - tj) % m:
            failures.append(f"(t^k-t^l)(r^j-t^j) != 0 for (j,k,l)=({j},{k},{l})")
        if ((rj - tj) * (rl - tl) - (rl - tj) * (rk - tk)) % m:
            failures.append(
                f"(r^j-t^j)(r^l-t^l) != (r^l-t^j)(r^k-t^k) for (j,k,l)=({j},{k},{l})")
    return failures


def alexander_mcb(p: AlexanderParams) -> McBiquandle:
    """Linear structure x under_l y = t_l*x + (r_l - t_l)*y, x over_l y = r_l*x on Z_modulus.

    Residue classes are represented by {1..modulus}, the class of zero by the
    modulus itself.  The over-operation depends on the left operand x; see the
    project notes on the r*x vs r*y reading.
    """
    failures = check_alexander_params(p)
    if failures:
        raise ParamError("; ".join(failures))
    m = p.modulus

    def norm(v):
        return (v - 1) % m + 1

    def tables(j):
        t, r = p.t(j), p.r(j)
        und = tuple(tuple(norm(t * x + (r - t) * y) for y in range(1, m + 1))
                    for x in range(1, m + 1))
        ov = tuple(tuple(norm(r * x) for _ in range(1, m + 1))
                   for x in range(1, m + 1))
        return und, ov

    us, os_ = tables("s")
    um, om = tables("m")
    return McBiquandle(m, us, os_, um, om)


# ---------------------------------------------------------------------------
# Endomorphisms.

def is_endomorphism(x: McBiquandle, image) -> bool:
    """Does the map i -> image[i-1] preserve all four operations?"""
    n = x.n
    if len(image) != n or any(not 1 <= v <= n for v in image):
        return False
    for tab in (x.under_s, x.over_s, x.under_m, x.over_m):
        for a in range(n):
            fa = image[a]
            row = tab[a]
            for b in range(n):
                if image[row[b] - 1] != tab[fa - 1][image[b] - 1]:
                    return False
    return True


def endomorphisms(x: McBiquandle) -> list[tuple[int, ...]]:
    """All operation-preserving self-maps, as image tuples [f(1),...,f(n)], sorted."""
    _require_valid(x)
    n = x.n
    tabs = (x.under_s, x.over_s, x.under_m, x.over_m)
    found = []
    image = [0] * n

    def consistent(k):
        # all pairs over assigned indices whose product image is already known
        for a in range(k + 1):
            for b in range(k + 1):
                for tab in tabs:
                    z = tab[a][b]
                    if z <= k + 1 and image[z - 1] != tab[image[a] - 1][image[b] - 1]:
                        return False
        return True

    def rec(k):
        if k == n:
            found.append(tuple(image))
            return
        for v in range(1, n + 1):
            image[k] = v
            if consistent(k):
                rec(k + 1)
        image[k] = 0

    rec(0)
    found.sort()
    return found


def endomorphisms_brute(x: McBiquandle) -> list[tuple[int, ...]]:
    """n^n filter; independent oracle for the backtracking search (small n only)."""
    n = x.n
    return sorted(img for img in product(range(1, n + 1), repeat=n)
                  if is_endomorphism(x, img))


def compose(phi, psi):
    """Pointwise composition phi after psi, both as image tuples."""
    return tuple(phi[v - 1] for v in psi)


# ---------------------------------------------------------------------------
# Isomorphism and enumeration.

def mcb_isomorphic(a: McBiquandle, b: McBiquandle):
    """A bijection {1..n}->{1..n} carrying a's tables to b's, or None."""
    if a.n != b.n:
        return None
    n = a.n
    ta = (a.under_s, a.over_s, a.under_m, a.over_m)
    tb = (b.under_s, b.over_s, b.under_m, b.over_m)
    for perm in permutations(range(1, n + 1)):
        ok = True
        for pa, pb in zip(ta, tb):
            for x in range(n):
                for y in range(n):
                    if perm[pa[x][y] - 1] != pb[perm[x] - 1][perm[y] - 1]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return perm
    return None


def _perm_columns(n):
    return list(permutations(range(1, n + 1)))


def _pairs_with_axioms(n, require_diag):
    """All (under, over) table pairs satisfying the single-pair axioms.

    Columns are drawn from permutations (axiom ii for the column maps), then
    filtered by the S bijectivity, the exchange laws, and optionally axiom (i).
    """
    cols = _perm_columns(n)
    rng = range(n)
    full = n * n
    out = []
    for ucols in product(cols, repeat=n):
        und = tuple(tuple(ucols[y][x] for y in rng) for x in rng)
        for ocols in product(cols, repeat=n):
            ov = tuple(tuple(ocols[y][x] for y in rng) for x in rng)
            if require_diag and any(und[x][x] != ov[x][x] for x in rng):
                continue
            seen = {(ov[y][x], und[x][y]) for x in rng for y in rng}
            if len(seen) != full:
                continue
            ok = True
            for a in rng:
                for b in rng:
                    for c in rng:
                        if ov[ov[a][b] - 1][ov[c][b] - 1] != ov[ov[a][c] - 1][und[b][c] - 1] \
                           or ov[und[a][b] - 1][und[c][b] - 1] != und[ov[a][c] - 1][ov[b][c] - 1] \
                           or und[und[a][b] - 1][und[c][b] - 1] != und[und[a][c] - 1][ov[b][c] - 1]:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                out.append((und, ov))
    return out


def _mixed_exchange_ok(us, os_, um, om):
    """The three mixed (j,k,l) triples of the exchange laws."""
    n = len(us)
    tabs = {("u", "s"): us, ("o", "s"): os_, ("u", "m"): um, ("o", "m"): om}
    rng = range(1, n + 1)
    for (j, k, l) in (("s", "m", "m"), ("m", "s", "m"), ("m", "m", "s")):
        uj, oj = tabs[("u", j)], tabs[("o", j)]
        uk, ok_ = tabs[("u", k)], tabs[("o", k)]
        ul, ol = tabs[("u", l)], tabs[("o", l)]
        for a in rng:
            for b in rng:
                for c in rng:
                    if ol[ok_[a - 1][b - 1] - 1][oj[c - 1][b - 1] - 1] \
                            != ok_[ol[a - 1][c - 1] - 1][uj[b - 1][c - 1] - 1]:
                        return False
                    if oj[ul[a - 1][b - 1] - 1][uk[c - 1][b - 1] - 1] \
                            != ul[oj[a - 1][c - 1] - 1][ok_[b - 1][c - 1] - 1]:
                        return False
                    if uj[uk[a - 1][b - 1] - 1][ul[c - 1][b - 1] - 1] \
                            != uk[uj[a - 1][c - 1] - 1][ol[b - 1][c - 1] - 1]:
                        return False
    return True


def enumerate_biquandle_pairs(n):
    """All order-n biquandle (under, over) pairs, by brute force over column permutations."""
    return _pairs_with_axioms(n, require_diag=True)


def enumerate_birack_pairs(n):
    """All order-n birack (under, over) pairs (no diagonal axiom)."""
    return _pairs_with_axioms(n, require_diag=False)


def _sort_key(x: McBiquandle):
    return tuple(v for row in x.to_block() for v in row)


def enumerate_mcb(n, modulo_isomorphism=False, max_order=DEFAULT_ENUM_BOUND):
    """Yield every validated order-n mc-biquandle in canonical (block row-major) order.

    With modulo_isomorphism, only the lexicographically least member of each
    isomorphism class is emitted.
    """
    if n > max(max_order, DEFAULT_ENUM_BOUND) or n > MAX_ENUM_ORDER:
        raise ValueError(f"order {n} above enumeration bound")
    if n > DEFAULT_ENUM_BOUND:
        import warnings
        warnings.warn(f"enumerating order {n} may take a very long time")
    s_pairs = enumerate_biquandle_pairs(n)
    m_pairs = enumerate_birack_pairs(n)
    results = []
    for us, os_ in s_pairs:
        for um, om in m_pairs:
            if _mixed_exchange_ok(us, os_, um, om):
                results.append(McBiquandle(n, us, os_, um, om))
    results.sort(key=_sort_key)
    if not modulo_isomorphism:
        yield from results
        return
    reps = []
    for x in results:
        if not any(mcb_isomorphic(r, x) for r in reps):
            reps.append(x)
    yield from reps


# ---------------------------------------------------------------------------
# Text format: n lines of 4n integers, block layout, '#' comments.

def loads_mcb(text: str) -> McBiquandle:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            rows.append([int(tok) for tok in body.split()])
        except ValueError as e:
            raise TableFormatError(f"line {lineno}: {e}") from None
    if not rows:
        raise TableFormatError("no table rows found")
    n = len(rows)
    if any(len(r) != 4 * n for r in rows):
        raise TableFormatError(f"expected {n} lines of {4*n} entries")
    return McBiquandle.from_block(rows)


def dumps_mcb(x: McBiquandle) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in x.to_block()) + "\n"


def load_mcb(path) -> McBiquandle:
    with open(path) as f:
        return loads_mcb(f.read())


def save_mcb(x: McBiquandle, path):
    with open(path, "w") as f:
        f.write(dumps_mcb(x))
