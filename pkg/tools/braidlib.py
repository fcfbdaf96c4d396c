"""Braid and plat closures as Gauss codes.

Development/test tooling only: the package itself deliberately has no braid
input surface.  Used to generate Reidemeister move pairs (sigma_i sigma_{i+1}
sigma_i vs sigma_{i+1} sigma_i sigma_{i+1}, stabilization, cancelling pairs)
and to reconstruct the embedded link table from standard structural
descriptions (torus braids, 4-plats for rational links, pretzel plats).

A braid word is a list of nonzero ints: +i means the strand in position i
crosses over the strand in position i+1; -i means it crosses under.
"""


def _rot_ccw(v):
    return (-v[1], v[0])


class _Passage:
    __slots__ = ("letter", "over")

    def __init__(self, letter, over):
        self.letter = letter   # index into the word
        self.over = over       # True if this strand is the over strand


def _strand_paths(word, k):
    """Follow each of the k top positions down through the word.

    Returns (paths, bottom_position_of_path) where paths[p] is the passage
    list of the strand starting at top position p (1-based).
    """
    at = list(range(k + 1))        # at[pos] = path index occupying pos
    paths = [[] for _ in range(k + 1)]
    for t, letter in enumerate(word):
        i = abs(letter)
        if not 1 <= i < k:
            raise ValueError(f"letter {letter} out of range for {k} strands")
        a, b = at[i], at[i + 1]
        paths[a].append(_Passage(t, letter > 0))
        paths[b].append(_Passage(t, letter < 0))
        at[i], at[i + 1] = b, a
    bottom = {at[pos]: pos for pos in range(1, k + 1)}
    return paths, bottom


def _trace(word, k, top_caps, bottom_caps):
    """Trace the closed-up diagram into oriented components.

    Caps are dicts position -> position (involutions).  Components are traced
    from the lowest unused top position, heading down.  Returns (components,
    sign) where each component is a list of (letter_index, over, direction)
    and sign maps letter_index -> geometric crossing sign.
    """
    paths, bottom_of = _strand_paths(word, k)
    top_of = {p: p for p in range(1, k + 1)}       # path index == top position
    path_at_bottom = {pos: p for p, pos in bottom_of.items()}

    direction = {}      # path index -> +1 down / -1 up
    components = []     # lists of (letter_index, over, direction)
    used = set()
    for start in range(1, k + 1):
        if start in used:
            continue
        comp = []
        p, going_down = start, True
        while True:
            used.add(p)
            direction[p] = 1 if going_down else -1
            seq = paths[p] if going_down else list(reversed(paths[p]))
            comp.extend((pas.letter, pas.over, 1 if going_down else -1)
                        for pas in seq)
            if going_down:
                end_pos = bottom_of[p]
                nxt_pos = bottom_caps[end_pos]
                p2 = path_at_bottom[nxt_pos]
                going_down = False
            else:
                end_pos = top_of[p]
                nxt_pos = top_caps[end_pos]
                p2 = nxt_pos
                going_down = True
            if p2 == start and going_down:
                break
            p = p2
        components.append(comp)

    # geometric sign of each crossing from the two traversal directions
    sign = {}
    dirs = {}
    for comp in components:
        for letter, over, d in comp:
            dirs.setdefault(letter, {})[over] = d
    for t, letter in enumerate(word):
        d_over, d_under = dirs[t][True], dirs[t][False]
        if letter > 0:
            over_vec = (1, -1) if d_over > 0 else (-1, 1)
            under_vec = (-1, -1) if d_under > 0 else (1, 1)
        else:
            over_vec = (-1, -1) if d_over > 0 else (1, 1)
            under_vec = (1, -1) if d_under > 0 else (-1, 1)
        sign[t] = 1 if _rot_ccw(under_vec) == over_vec else -1
    return components, sign


def _gauss_of(components, sign):
    parts = []
    for comp in components:
        toks = []
        for letter, over, _ in comp:
            toks.append(f"{'O' if over else 'U'}{letter + 1}{'+' if sign[letter] > 0 else '-'}")
        parts.append(" ".join(toks))
    return " ; ".join(parts)


# PD corner bookkeeping.  A braid-letter crossing is a square with corners
# NE, NW, SW, SE; counterclockwise order NE -> NW -> SW -> SE.  For a
# positive letter the over strand occupies NW-SE and the under strand NE-SW;
# a negative letter swaps the two diagonals.
_CCW = ("NE", "NW", "SW", "SE")


def _corners(letter_positive, over, direction):
    """(in_corner, out_corner) of one passage through a crossing square."""
    if letter_positive == over:
        pair = ("NW", "SE")
    else:
        pair = ("NE", "SW")
    return pair if direction > 0 else (pair[1], pair[0])


def _pd_of(components, word):
    """Planar-diagram code X(a,b,c,d): a = incoming under-edge, then CCW.

    Edges are numbered sequentially along each oriented component, matching
    the order the components were traced.
    """
    corner_edge = {}    # letter -> {corner: edge}
    under_in_corner = {}
    start = 1
    for comp in components:
        n = len(comp)
        for j, (letter, over, direction) in enumerate(comp):
            e_in = start + (j - 1) % n
            e_out = start + j
            cin, cout = _corners(word[letter] > 0, over, direction)
            slot = corner_edge.setdefault(letter, {})
            slot[cin] = e_in
            slot[cout] = e_out
            if not over:
                under_in_corner[letter] = cin
        start += n
    entries = []
    for t in range(len(word)):
        i = _CCW.index(under_in_corner[t])
        entries.append("X(%d,%d,%d,%d)" % tuple(
            corner_edge[t][_CCW[(i + j) % 4]] for j in range(4)))
    return " ".join(entries)


def braid_closure(word, k):
    """Standard closure: bottom position p joins back around to top position p.

    Every strand is oriented downward, so each crossing keeps the sign of its
    braid letter.
    """
    components, sign = _trace_closure(word, k)
    return _gauss_of(components, sign)


def _trace_closure(word, k):
    paths, bottom_of = _strand_paths(word, k)
    seen = set()
    components = []
    for start in range(1, k + 1):
        if start in seen:
            continue
        comp = []
        p = start
        while True:
            seen.add(p)
            comp.extend((pas.letter, pas.over, 1) for pas in paths[p])
            p = bottom_of[p]
            if p == start:
                break
        components.append(comp)
    sign = {t: (1 if letter > 0 else -1) for t, letter in enumerate(word)}
    return components, sign


def plat_closure(word, k, caps=None):
    """Plat closure; default caps pair (1,2),(3,4),...  Caps may be any
    perfect matching given as a list of pairs, used for both top and bottom
    unless bottom_caps-style tuples are supplied as (top, bottom)."""
    if caps is None:
        caps = [(i, i + 1) for i in range(1, k, 2)]
    if isinstance(caps, tuple) and len(caps) == 2 and isinstance(caps[0], list):
        top_pairs, bottom_pairs = caps
    else:
        top_pairs = bottom_pairs = caps

    def as_map(pairs):
        m = {}
        for a, b in pairs:
            m[a] = b
            m[b] = a
        if sorted(m) != list(range(1, k + 1)):
            raise ValueError("caps must form a perfect matching")
        return m

    components, sign = _trace(word, k, as_map(top_pairs), as_map(bottom_pairs))
    return _gauss_of(components, sign)


def braid_closure_pd(word, k):
    components, _ = _trace_closure(word, k)
    return _pd_of(components, word)


def plat_closure_pd(word, k, caps=None):
    if caps is None:
        caps = [(i, i + 1) for i in range(1, k, 2)]
    if isinstance(caps, tuple) and len(caps) == 2 and isinstance(caps[0], list):
        top_pairs, bottom_pairs = caps
    else:
        top_pairs = bottom_pairs = caps

    def as_map(pairs):
        m = {}
        for a, b in pairs:
            m[a] = b
            m[b] = a
        return m

    components, _ = _trace(word, k, as_map(top_pairs), as_map(bottom_pairs))
    return _pd_of(components, word)


def rational_link(terms):
    """Alternating 4-plat for the 2-bridge link with continued fraction terms.

    terms = [a1, a2, a3, ...], all positive: word sigma2^a1 sigma1^-a2
    sigma2^a3 ... read left to right, standard plat caps.
    """
    word = []
    for i, a in enumerate(terms):
        if i % 2 == 0:
            word.extend([2] * a)
        else:
            word.extend([-1] * a)
    return plat_closure(word, 4)


def pretzel_link(twists):
    """Cyclic pretzel P(c1,...,cn): vertical twist regions side by side.

    Positive entries give the standard all-alike alternating form.
    """
    n = len(twists)
    k = 2 * n
    word = []
    for i, c in enumerate(twists):
        g = 2 * i + 1
        word.extend([g if c > 0 else -g] * abs(c))
    caps = [(2 * i, 2 * i + 1) for i in range(1, n)] + [(k, 1)]
    return plat_closure(word, k, caps)
