"""Dowker complexes of relations, finite posets as T0-spaces, collapses, and exact homology."""

from .complexes import (
    SimplicialComplex,
    Universe,
    VertexMap,
    apply_simplicial_map,
    are_contiguous,
    complex_from_facets,
    cone_apex,
    full_complex,
    is_subcomplex,
)
from .relations import (
    Relation,
    RelationMorphism,
    are_equivalent,
    canonical_relation,
    find_morphism,
    induced_l_map,
    is_covered,
    is_morphism,
    k_complex,
    l_complex,
    support_simplex,
    transpose,
)
from .posets import (
    FiniteTopology,
    Poset,
    connected_components,
    down_set,
    dual_poset,
    has_maximum,
    induced_subposet,
    is_up_set,
    lattice_condition,
    lattice_condition_witness,
    maximal_elements,
    maximum,
    membership_relation,
    minimal_elements,
    order_complex,
    order_to_topology,
    pair_label,
    poset_dowker_complex,
    poset_from_pairs,
    product_poset,
    realize_as_poset_k_complex,
    topology_to_order,
    up_set,
)
from .collapses import (
    CollapseSequence,
    CollapseStep,
    apply_step,
    collapse_leq_to_strict,
    free_coface,
    greedy_collapse,
    verify_sequence,
)
from .homology import (
    HomologyProfile,
    IntegerMatrix,
    boundary_matrices,
    homology,
    matrix_product,
    same_homology,
    smith_normal_form,
)
from .closed_relations import (
    ClosedRelation,
    fiber,
    is_closed,
    preimage_facet_check,
    quillen_hypothesis,
    relation_poset,
    verify_closed_relation,
    weak_hypothesis,
)
from . import errors, formats

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex",
    "Universe",
    "VertexMap",
    "apply_simplicial_map",
    "are_contiguous",
    "complex_from_facets",
    "cone_apex",
    "full_complex",
    "is_subcomplex",
    "Relation",
    "RelationMorphism",
    "are_equivalent",
    "canonical_relation",
    "find_morphism",
    "induced_l_map",
    "is_covered",
    "is_morphism",
    "k_complex",
    "l_complex",
    "support_simplex",
    "transpose",
    "FiniteTopology",
    "Poset",
    "connected_components",
    "down_set",
    "dual_poset",
    "has_maximum",
    "induced_subposet",
    "is_up_set",
    "lattice_condition",
    "lattice_condition_witness",
    "maximal_elements",
    "maximum",
    "membership_relation",
    "minimal_elements",
    "order_complex",
    "order_to_topology",
    "pair_label",
    "poset_dowker_complex",
    "poset_from_pairs",
    "product_poset",
    "realize_as_poset_k_complex",
    "topology_to_order",
    "up_set",
    "CollapseSequence",
    "CollapseStep",
    "apply_step",
    "collapse_leq_to_strict",
    "free_coface",
    "greedy_collapse",
    "verify_sequence",
    "HomologyProfile",
    "IntegerMatrix",
    "boundary_matrices",
    "homology",
    "matrix_product",
    "same_homology",
    "smith_normal_form",
    "ClosedRelation",
    "fiber",
    "is_closed",
    "preimage_facet_check",
    "quillen_hypothesis",
    "relation_poset",
    "verify_closed_relation",
    "weak_hypothesis",
    "errors",
    "formats",
]
