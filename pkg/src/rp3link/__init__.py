"""Exact certification of intrinsic linking in real projective 3-space.

The engine enumerates all GF(2) homology assignments on a graph's cycle
space and forces each one with sound rules (disjoint 1-homologous cycle
pairs, Petersen-family apex conditions, all-zero K4 subgraphs of K6
minors).  Family constructions rebuild the low-connectivity catalogs and
the marked delta-wye gluing family.
"""

from .canon import (
    OrbitTable,
    are_isomorphic,
    automorphism_generators,
    canonical_form,
    canonical_form_marked,
    canonical_graph,
    canonical_labeling,
    group_order,
    orbits,
)
from .config import DEFAULT_LIMITS, Limits, limits_from_env
from .connectivity import is_planar, is_projective_planar, vertex_connectivity
from .families import (
    CatalogEntry,
    CatalogReport,
    PetersenFamily,
    ThereforeFamily,
    build_catalog,
    delta_y,
    glue_pair,
    glue_therefore,
    glue_vertex,
    gluing_count,
    grand_total,
    k6_therefore,
    petersen_family,
    sporadic_graphs,
    therefore_family,
    y_delta,
)
from .graphs import Graph, MarkedGraph
from .homology import (
    HomologyAssignment,
    all_simple_cycles,
    assignment_from_edge_weights,
    assignment_from_serial,
    assignment_to_serial,
    cycle_basis,
    cycle_space,
    enumerate_assignments,
    evaluate,
    lift,
    pullback,
    restrict,
)
from .io_formats import (
    emit_edge_list,
    fixture_path,
    g6_to_graph,
    graph_to_g6,
    load_fixture,
    load_graph_records,
    parse_graph,
    parse_graph_file,
)
from .linkage import (
    Certificate,
    MinimalityReport,
    RuleAEvidence,
    RuleBEvidence,
    RuleCEvidence,
    certify,
    minimality_scan,
    rule_a,
    rule_b,
    rule_c,
    rule_context,
    verify_certificate,
)
from .minors import MinorModel, enumerate_minor_models, is_minor, validate_model
from .patterns import (
    AllZero,
    FourPattern,
    Pattern,
    SixPattern,
    classify_k33,
    four_cycle_count,
    k33_census,
)

__version__ = "0.1.0"
