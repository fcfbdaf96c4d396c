"""Oriented link diagrams from Gauss or planar-diagram codes.

A diagram is a list of components, each a cyclic sequence of crossing
passages.  Virtual crossings are never recorded: a virtual link is simply a
Gauss code that need not be planar.  Semiarcs are numbered in diagram order
(component by component, one semiarc following each passage; a free loop
contributes a single unconstrained semiarc).
"""

import re
from dataclasses import dataclass

OVER = "O"
UNDER = "U"


class DiagramError(ValueError):
    """Malformed Gauss or PD input."""


@dataclass(frozen=True)
class CrossingPassage:
    crossing_id: int
    role: str      # OVER or UNDER
    sign: int      # +1 or -1


@dataclass(frozen=True)
class Crossing:
    id: int
    sign: int
    cls: str       # "s" single-component, "m" multi-component
    under_in: int  # incident semiarc ids
    over_in: int
    under_out: int
    over_out: int


class LinkDiagram:
    """Validated oriented diagram; immutable after construction."""

    def __init__(self, components):
        self.components = tuple(tuple(p) for p in components)
        self._validate_and_index()

    def _validate_and_index(self):
        # semiarc ids in diagram order; free loops get one id at their position
        out_semiarc = {}       # (comp, pos) -> id of semiarc following the passage
        free_loop_semiarcs = []
        sid = 0
        for ci, comp in enumerate(self.components):
            if not comp:
                free_loop_semiarcs.append(sid)
                sid += 1
                continue
            for pi in range(len(comp)):
                out_semiarc[(ci, pi)] = sid
                sid += 1
        self.semiarc_count = sid
        self.free_loop_semiarcs = tuple(free_loop_semiarcs)

        seen = {}
        for ci, comp in enumerate(self.components):
            for pi, p in enumerate(comp):
                seen.setdefault(p.crossing_id, []).append((ci, pi, p))
        crossings = {}
        for cid, occ in sorted(seen.items()):
            if len(occ) != 2:
                raise DiagramError(f"crossing {cid} appears {len(occ)} times, expected 2")
            (c1, p1, a), (c2, p2, b) = occ
            if {a.role, b.role} != {OVER, UNDER}:
                raise DiagramError(f"crossing {cid}: need one over and one under passage")
            if a.sign != b.sign:
                raise DiagramError(f"crossing {cid}: sign mismatch between passages")
            if a.role == UNDER:
                (c1, p1, a), (c2, p2, b) = (c2, p2, b), (c1, p1, a)
            # a is the over passage, b the under passage
            cls = "s" if c1 == c2 else "m"

            def inarc(ci, pi):
                m = len(self.components[ci])
                return out_semiarc[(ci, (pi - 1) % m)]

            crossings[cid] = Crossing(
                id=cid, sign=a.sign, cls=cls,
                under_in=inarc(c2, p2), over_in=inarc(c1, p1),
                under_out=out_semiarc[(c2, p2)], over_out=out_semiarc[(c1, p1)],
            )
        self.crossings = crossings

    @property
    def crossing_ids(self):
        return sorted(self.crossings)

    def classify(self):
        """Map crossing id -> "s"/"m"."""
        return {cid: c.cls for cid, c in self.crossings.items()}

    def component_of_semiarc(self, sid):
        k = 0
        for ci, comp in enumerate(self.components):
            k += max(len(comp), 1)
            if sid < k:
                return ci
        raise IndexError(sid)

    def virtualize(self, crossing_id):
        """Delete a classical crossing (make it virtual): drop both passages."""
        if crossing_id not in self.crossings:
            raise DiagramError(f"unknown crossing id {crossing_id}")
        comps = [[p for p in comp if p.crossing_id != crossing_id]
                 for comp in self.components]
        return LinkDiagram(comps)

    def with_sign_flipped(self, crossing_id):
        """Reverse the sign of one crossing (a crossing change composed with a flip
        of which strand is on top keeps the over/under roles; here only the sign
        flips, i.e. the crossing is switched and the diagram mirrored locally)."""
        if crossing_id not in self.crossings:
            raise DiagramError(f"unknown crossing id {crossing_id}")
        comps = [[CrossingPassage(p.crossing_id, p.role, -p.sign)
                  if p.crossing_id == crossing_id else p for p in comp]
                 for comp in self.components]
        return LinkDiagram(comps)

    def with_crossing_switched(self, crossing_id):
        """Exchange which strand passes over (sign preserved in the passage data
        sense: roles swap, sign flips as the strands' geometric relation reverses)."""
        if crossing_id not in self.crossings:
            raise DiagramError(f"unknown crossing id {crossing_id}")
        comps = [[CrossingPassage(p.crossing_id,
                                  OVER if p.role == UNDER else UNDER, -p.sign)
                  if p.crossing_id == crossing_id else p for p in comp]
                 for comp in self.components]
        return LinkDiagram(comps)

    def reversed_component(self, ci):
        """Reverse the orientation of one component.

        Crossings involving the reversed component exactly once change sign;
        self-crossings of the component and crossings not touching it keep theirs.
        """
        touch = {}
        for i, comp in enumerate(self.components):
            for p in comp:
                touch.setdefault(p.crossing_id, []).append(i)

        def adjust(p):
            if touch[p.crossing_id].count(ci) == 1:
                return CrossingPassage(p.crossing_id, p.role, -p.sign)
            return p

        comps = []
        for i, comp in enumerate(self.components):
            seq = reversed(comp) if i == ci else comp
            comps.append([adjust(p) for p in seq])
        return LinkDiagram(comps)

    def __eq__(self, other):
        return isinstance(other, LinkDiagram) and self.components == other.components

    def __repr__(self):
        return f"LinkDiagram({serialize_gauss(self)!r})"


# ---------------------------------------------------------------------------
# Gauss code wire format.

_TOKEN = re.compile(r"([OU])(\d+)([+-−])$")


def parse_gauss(text: str) -> LinkDiagram:
    """Components separated by ';', tokens (O|U)<id>(+|-); empty component = free loop."""
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines()) \
        if "#" in text else text
    components = []
    for part in text.split(";"):
        passages = []
        for tok in part.split():
            m = _TOKEN.match(tok)
            if not m:
                raise DiagramError(f"bad Gauss token {tok!r}")
            role, cid, sign = m.group(1), int(m.group(2)), m.group(3)
            passages.append(CrossingPassage(cid, role, 1 if sign == "+" else -1))
        components.append(passages)
    return LinkDiagram(components)


def serialize_gauss(d: LinkDiagram) -> str:
    parts = []
    for comp in d.components:
        parts.append(" ".join(
            f"{p.role}{p.crossing_id}{'+' if p.sign > 0 else '-'}" for p in comp))
    return " ; ".join(parts)


# ---------------------------------------------------------------------------
# Planar diagram (PD) codes: X(a,b,c,d), a the incoming under-edge, edges
# listed counterclockwise, numbered sequentially along each oriented component.

_PD_ENTRY = re.compile(r"X[\(\[]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\)\]]")


def parse_pd(text: str) -> LinkDiagram:
    text = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    entries = []
    cleaned = text
    for m in _PD_ENTRY.finditer(text):
        entries.append(tuple(int(g) for g in m.groups()))
        cleaned = cleaned.replace(m.group(0), " ", 1)
    if cleaned.split():
        raise DiagramError(f"unparsed PD input near {cleaned.split()[0]!r}")
    if not entries:
        raise DiagramError("empty PD code")

    occurrences = {}
    for idx, (a, b, c, d) in enumerate(entries):
        for slot, e in zip("abcd", (a, b, c, d)):
            occurrences.setdefault(e, []).append((idx, slot))
    for e, occ in occurrences.items():
        if len(occ) != 2:
            raise DiagramError(f"edge {e} used {len(occ)} times, expected 2")

    # components: edges linked through each crossing (a-c under, b-d over)
    adj = {e: set() for e in occurrences}
    for (a, b, c, d) in entries:
        adj[a].add(c), adj[c].add(a)
        adj[b].add(d), adj[d].add(b)
    comps = []
    unvisited = set(occurrences)
    while unvisited:
        start = min(unvisited)
        stack, comp = [start], set()
        while stack:
            e = stack.pop()
            if e in comp:
                continue
            comp.add(e)
            stack.extend(adj[e] - comp)
        comps.append(sorted(comp))
        unvisited -= comp
    for comp in comps:
        if comp != list(range(comp[0], comp[0] + len(comp))):
            raise DiagramError(f"edges {comp} do not form a sequential component")

    comp_of = {e: i for i, comp in enumerate(comps) for e in comp}

    def succ(e):
        comp = comps[comp_of[e]]
        return e + 1 if e + 1 <= comp[-1] else comp[0]

    # orient the over strand of each crossing; sign from the counterclockwise frame
    over_in = {}
    sign = {}
    for idx, (a, b, c, d) in enumerate(entries):
        if succ(a) != c:
            raise DiagramError(
                f"crossing X({a},{b},{c},{d}): under-edges not sequential")
        fwd = succ(b) == d
        bwd = succ(d) == b
        if fwd and bwd:
            # two-edge over strand: decide by where the edges' other endpoints sit
            fwd = _incoming_by_slots(occurrences, idx, b, d)
        elif not fwd and not bwd:
            raise DiagramError(
                f"crossing X({a},{b},{c},{d}): over-edges not sequential")
        over_in[idx] = b if fwd else d
        sign[idx] = 1 if fwd else -1

    # passage at the far end of each edge
    passage_at_end = {}
    for idx, (a, b, c, d) in enumerate(entries):
        passage_at_end[a] = CrossingPassage(idx + 1, UNDER, sign[idx])
        passage_at_end[over_in[idx]] = CrossingPassage(idx + 1, OVER, sign[idx])
    components = []
    for comp in comps:
        components.append([passage_at_end[e] for e in comp])
    return LinkDiagram(components)


def _incoming_by_slots(occurrences, idx, b, d):
    """For a length-2 over component {b, d}: is b the incoming over-edge?

    Looks at the edges' other crossing occurrence: an edge leaving an 'a' slot
    elsewhere is outgoing there, hence incoming here, and dually for 'c'.
    """
    for e, want in ((b, True), (d, False)):
        for (j, slot) in occurrences[e]:
            if j == idx:
                continue
            if slot == "c":      # e starts at crossing j, so it ends here: incoming
                return want
            if slot == "a":      # e ends at crossing j: outgoing here
                return not want
    raise DiagramError("ambiguous over-strand orientation in PD code")


# ---------------------------------------------------------------------------
# Fundamental presentation.

@dataclass(frozen=True)
class Relation:
    lhs: int        # semiarc id
    left: int       # semiarc id
    op: str         # "under" or "over"
    side: str       # "s" or "m"
    right: int      # semiarc id

    def render(self):
        sym = "u" if self.op == "under" else "o"
        return f"x{self.lhs} = x{self.left} {sym}^{self.side} x{self.right}"


@dataclass(frozen=True)
class Presentation:
    generators: tuple[int, ...]
    relations: tuple[Relation, ...]

    def render(self):
        gens = ", ".join(f"x{g}" for g in self.generators)
        rels = ", ".join(r.render() for r in self.relations)
        return f"< {gens} | {rels} >"


def extract_presentation(d: LinkDiagram) -> Presentation:
    """Two crossing relations per crossing; negative crossings use the inverted forms."""
    rels = []
    for cid in d.crossing_ids:
        c = d.crossings[cid]
        if c.sign > 0:
            rels.append(Relation(c.under_out, c.under_in, "under", c.cls, c.over_in))
            rels.append(Relation(c.over_out, c.over_in, "over", c.cls, c.under_in))
        else:
            rels.append(Relation(c.under_in, c.under_out, "under", c.cls, c.over_out))
            rels.append(Relation(c.over_in, c.over_out, "over", c.cls, c.under_out))
    return Presentation(tuple(range(d.semiarc_count)), tuple(rels))
