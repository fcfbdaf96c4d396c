"""Coloring quivers, in-degree polynomials, isomorphism, exports."""

import json
from collections import Counter

import pytest

from mcbiq import (
    build_quiver,
    endomorphisms,
    export_dot,
    export_json,
    find_colorings,
    indegree_polynomial,
    parse_gauss,
    quiver_isomorphic,
)
from mcbiq.quiver import InDegreePolynomial, Quiver


def quiver_for(text, x):
    h = find_colorings(parse_gauss(text), x)
    return build_quiver(h, endomorphisms(x))


def test_unknot_quiver_shape(ex33):
    q = quiver_for("", ex33)
    assert q.vertices == 3
    assert len(q.edges) == 9
    indeg = Counter(dst for _, dst, _ in q.edges)
    assert sorted(indeg.values()) == [2, 2, 5]
    assert indegree_polynomial(q).render() == "1*u^5 + 2*u^2"


def test_kinked_unknot_same_quiver(ex33):
    a = quiver_for("", ex33)
    b = quiver_for("O1+ U1+", ex33)
    assert quiver_isomorphic(a, b) is not None


def test_hopf_quiver_with_x4(x4):
    q = quiver_for("O1+ U2+ ; U1+ O2+", x4)
    assert q.vertices == 8
    assert len(q.edges) == 64
    assert indegree_polynomial(q).render() == "2*u^20 + 6*u^4"


def test_out_degree_equals_endo_count(x4, ex33):
    for text, x in (("O1+ U2+ ; U1+ O2+", x4), ("O1+ U1+", ex33)):
        q = quiver_for(text, x)
        outdeg = Counter(src for src, _, _ in q.edges)
        assert all(outdeg[v] == len(q.endos) for v in range(q.vertices))


def test_polynomial_identities(x4, ex33, ex34):
    for text, x in (("O1+ U2+ ; U1+ O2+", x4),
                    ("O1+ U2+ O3+ U1+ O2+ U3+", ex34),
                    ("", ex33)):
        q = quiver_for(text, x)
        poly = indegree_polynomial(q)
        phi = q.vertices
        assert poly.evaluate(1) == phi
        assert poly.derivative_at_one() == len(q.endos) * phi


def test_build_quiver_input_validation(x4):
    h = find_colorings(parse_gauss("O1+ U2+ ; U1+ O2+"), x4)
    with pytest.raises(ValueError):
        build_quiver(h, [])
    ident = tuple(range(1, 5))
    with pytest.raises(ValueError):
        build_quiver(h, [ident, ident])
    with pytest.raises(ValueError):
        build_quiver(h, [(2, 1, 4, 4)])


def test_quiver_isomorphism_detects_relabelling():
    edges_a = ((0, 1, 0), (1, 2, 0), (2, 0, 0))
    edges_b = ((2, 0, 0), (0, 1, 0), (1, 2, 0))
    a = Quiver(3, edges_a, ((1,),))
    b = Quiver(3, edges_b, ((1,),))
    assert quiver_isomorphic(a, b) is not None
    # a 3-cycle is not isomorphic to a path with a loop
    c = Quiver(3, ((0, 0, 0), (0, 1, 0), (1, 2, 0)), ((1,),))
    assert quiver_isomorphic(a, c) is None


def test_quiver_isomorphism_respects_multiplicity():
    a = Quiver(2, ((0, 1, 0), (0, 1, 1), (1, 0, 0)), ((1,), (2,)))
    swapped = Quiver(2, ((1, 0, 0), (1, 0, 1), (0, 1, 0)), ((1,), (2,)))
    assert quiver_isomorphic(a, swapped) is not None
    # same degree multiset, but a self-loop replaces the doubled edge
    b = Quiver(2, ((0, 1, 0), (1, 0, 0), (0, 0, 1)), ((1,), (2,)))
    assert quiver_isomorphic(a, b) is None


def test_dot_export(ex33):
    q = quiver_for("", ex33)
    dot = export_dot(q)
    assert dot.startswith("digraph")
    assert dot.count("->") == len(q.edges)
    assert '[label="[2,2,2]"]' in dot


def test_json_export_round_trips(ex33):
    q = quiver_for("", ex33)
    doc = json.loads(export_json(q))
    assert len(doc["vertices"]) == q.vertices
    assert len(doc["edges"]) == len(q.edges)
    assert sorted(tuple(e) for e in doc["endomorphisms"]) == sorted(q.endos)


def test_polynomial_rendering():
    poly = InDegreePolynomial(((5, 1), (2, 2)))
    assert poly.render() == "1*u^5 + 2*u^2"
    assert InDegreePolynomial(()).render() == "0"
