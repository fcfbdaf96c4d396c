"""Coloring invariants of classical and virtual links from finite mc-biquandles."""

from .algebra import (
    AlexanderParams,
    AxiomReport,
    McBiquandle,
    TableFormatError,
    alexander_mcb,
    check_axioms,
    dumps_mcb,
    endomorphisms,
    enumerate_mcb,
    load_mcb,
    loads_mcb,
    mcb_isomorphic,
    save_mcb,
    trivial_extension,
)
from .coloring import Homset, brute_force_colorings, count, find_colorings
from .diagram import (
    DiagramError,
    LinkDiagram,
    Presentation,
    extract_presentation,
    parse_gauss,
    parse_pd,
    serialize_gauss,
)
from .linear import ColoringMatrix, build_coloring_matrix, linear_count, rref_mod_p
from .quiver import (
    InDegreePolynomial,
    Quiver,
    build_quiver,
    export_dot,
    export_json,
    indegree_polynomial,
    quiver_isomorphic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
