"""Gauss and PD parsing, diagram surgery, presentations."""

import pytest

from mcbiq import (
    DiagramError,
    extract_presentation,
    parse_gauss,
    parse_pd,
    serialize_gauss,
)
from mcbiq.cli import _data_text, load_link_table

HOPF_GAUSS = "O1+ U2+ ; U1+ O2+"
HOPF_PD = "X(4,2,3,1) X(1,3,2,4)"
TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"


def test_gauss_round_trip():
    for text in (HOPF_GAUSS, TREFOIL, "U1- O1-", ";", "O1+ U1+ ; "):
        d = parse_gauss(text)
        assert parse_gauss(serialize_gauss(d)) == d


def test_gauss_comments_and_whitespace():
    d = parse_gauss("O1+ U2+  # over first\n; U1+ O2+\n")
    assert d == parse_gauss(HOPF_GAUSS)


def test_free_loop_component():
    d = parse_gauss("O1+ U1+ ; ")
    assert len(d.components) == 2
    assert d.semiarc_count == 3
    assert d.free_loop_semiarcs == (2,)


def test_gauss_errors():
    with pytest.raises(DiagramError):
        parse_gauss("O1 U1")                  # missing signs
    with pytest.raises(DiagramError):
        parse_gauss("Q1+ U1+")                # bad role
    with pytest.raises(DiagramError):
        parse_gauss("O1+ U1+ O1+ U1+")        # crossing appears 4 times
    with pytest.raises(DiagramError):
        parse_gauss("O1+")                    # only one passage
    with pytest.raises(DiagramError):
        parse_gauss("O1+ O1+")                # two over passages
    with pytest.raises(DiagramError):
        parse_gauss("O1+ U1-")                # sign mismatch


def test_crossing_classification():
    d = parse_gauss(HOPF_GAUSS)
    assert d.classify() == {1: "m", 2: "m"}
    t = parse_gauss(TREFOIL)
    assert t.classify() == {1: "s", 2: "s", 3: "s"}
    mixed = parse_gauss("O1+ U1+ O2+ ; U2+")
    assert mixed.classify() == {1: "s", 2: "m"}


def test_semiarc_numbering_and_incidence():
    d = parse_gauss(TREFOIL)
    assert d.semiarc_count == 6
    c1 = d.crossings[1]
    # passage positions: O1 at 0, U1 at 3 -> out-arcs 0 and 3, in-arcs 5 and 2
    assert (c1.over_out, c1.under_out) == (0, 3)
    assert (c1.over_in, c1.under_in) == (5, 2)


def test_component_of_semiarc():
    d = parse_gauss(HOPF_GAUSS)
    assert [d.component_of_semiarc(s) for s in range(4)] == [0, 0, 1, 1]


def test_virtualize_removes_crossing():
    d = parse_gauss(TREFOIL)
    v = d.virtualize(2)
    assert sorted(v.crossings) == [1, 3]
    assert v.semiarc_count == 4
    with pytest.raises(DiagramError):
        d.virtualize(9)


def test_sign_flip_and_switch():
    d = parse_gauss(HOPF_GAUSS)
    assert d.with_sign_flipped(1).crossings[1].sign == -1
    sw = d.with_crossing_switched(1)
    assert sw.crossings[1].sign == -1
    # switching exchanges which component holds the over passage
    assert sw.components[0][0].role == "U"


def test_reversed_component_flips_mixed_signs():
    d = parse_gauss(HOPF_GAUSS)
    r = d.reversed_component(1)
    assert all(c.sign == -1 for c in r.crossings.values())
    # reversing both components restores all signs
    rr = r.reversed_component(0)
    assert all(c.sign == 1 for c in rr.crossings.values())


def test_pd_parses_hopf():
    d = parse_pd(HOPF_PD)
    assert len(d.components) == 2
    assert d.classify() == {1: "m", 2: "m"}
    assert all(c.sign == 1 for c in d.crossings.values())


def test_pd_negative_crossing():
    import braidlib

    pd = braidlib.braid_closure_pd([-1, -1], 2)
    d = parse_pd(pd)
    assert len(d.components) == 2
    assert all(c.sign == -1 for c in d.crossings.values())


def test_pd_errors():
    with pytest.raises(DiagramError):
        parse_pd("")
    with pytest.raises(DiagramError):
        parse_pd("X(1,2,3,4)")                # edges used once
    with pytest.raises(DiagramError):
        parse_pd("X(4,2,3,1) X(1,3,2,4) garbage")
    with pytest.raises(DiagramError):
        parse_pd("X(4,2,2,1) X(1,3,3,4)")     # under-edges not sequential


def test_pd_comments_in_links_file_match_gauss_entries():
    """Every '# pd:' comment in the shipped table describes the same diagram."""
    pds = [line.split("pd:", 1)[1].strip()
           for line in _data_text("links.txt").splitlines()
           if line.startswith("# pd: ")]
    table = load_link_table()
    assert len(pds) == len(table) == 18
    for pd_text, entry in zip(pds, table):
        dp = parse_pd(pd_text)
        dg = parse_gauss(entry.gauss)
        assert len(dp.components) == len(dg.components) == entry.components
        assert sorted(c.sign for c in dp.crossings.values()) == \
            sorted(c.sign for c in dg.crossings.values())
        assert sorted(c.cls for c in dp.crossings.values()) == \
            sorted(c.cls for c in dg.crossings.values())


def test_presentation_counts_and_render():
    d = parse_gauss(TREFOIL)
    pres = extract_presentation(d)
    assert len(pres.generators) == 6
    assert len(pres.relations) == 6
    text = pres.render()
    assert text.startswith("< x0, x1, x2, x3, x4, x5 |")
    assert "u^s" in text and "o^s" in text


def test_presentation_negative_crossing_uses_inverted_forms():
    d = parse_gauss("U1- O1-")
    rels = extract_presentation(d).relations
    # the incoming semiarcs appear on the left-hand side at a negative crossing
    assert {r.lhs for r in rels} == {d.crossings[1].under_in, d.crossings[1].over_in}
