"""Exact Goeritz-matrix determinants and quasi-alternating certificates for
link diagrams given as signed Tait graphs."""

from .certifier import (
    Certificate,
    CertNode,
    SearchBudget,
    base_case,
    certify,
    certify_guided,
    link_det,
    verify_certificate,
)
from .exact_linalg import det_bareiss, poly_det, signed_tree_sum, smith_normal_form
from .families import (
    ResolutionSpec,
    closed_form,
    paper_family,
    parse_spec,
    pretzel_graph,
    resolve_family,
    symbolic_goeritz,
)
from .isomorphism import canonical_form, canonical_key, is_isomorphic
from .pd import PDDiagram, faces, parse_pd, to_tait
from .poly import PolyZ, parse_poly
from .tait_graph import (
    ResolutionOutcome,
    SignedTaitGraph,
    contract_edge,
    delete_edge,
    goeritz_reduced,
    goeritz_unreduced,
    is_alternating,
    is_connected,
    new_graph,
    reduce_nugatory,
    simplify_diagram,
)

__version__ = "0.1.0"

__all__ = [
    "base_case",
    "canonical_form",
    "canonical_key",
    "Certificate",
    "certify",
    "certify_guided",
    "CertNode",
    "closed_form",
    "contract_edge",
    "delete_edge",
    "det_bareiss",
    "faces",
    "goeritz_reduced",
    "goeritz_unreduced",
    "is_alternating",
    "is_connected",
    "is_isomorphic",
    "link_det",
    "new_graph",
    "paper_family",
    "parse_pd",
    "parse_poly",
    "parse_spec",
    "PDDiagram",
    "poly_det",
    "PolyZ",
    "pretzel_graph",
    "reduce_nugatory",
    "ResolutionOutcome",
    "ResolutionSpec",
    "resolve_family",
    "SearchBudget",
    "signed_tree_sum",
    "SignedTaitGraph",
    "simplify_diagram",
    "smith_normal_form",
    "symbolic_goeritz",
    "to_tait",
    "verify_certificate",
]
