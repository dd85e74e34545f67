//! An executable laboratory for H-linked graph theory.
//!
//! A graph G is H-linked for a pattern multigraph H when every injective
//! placement of H's vertices into G extends to internally disjoint paths
//! realizing every H-edge. This crate provides:
//!
//! - value-semantic graphs and pattern multigraphs with a small textual
//!   pattern grammar, graph6 and DOT serialization ([`graph`], [`pattern`],
//!   [`graph6`], [`dot`]);
//! - minimum degree, local and global vertex connectivity via
//!   unit-capacity max-flow on the split digraph, and separation
//!   extraction ([`connectivity`]);
//! - complete, budgeted decision procedures for linkages, H-linkedness,
//!   linked pairs and obstructions ([`linkage`]);
//! - generators for the lower-bound extremal families ([`constructions`]);
//! - the stated bound tables as a queryable oracle plus exact threshold
//!   computation for tiny N by exhaustive enumeration ([`bounds`]).

mod bitset;

pub mod bounds;
pub mod connectivity;
pub mod constructions;
pub mod dot;
pub mod graph;
pub mod graph6;
pub mod linkage;
pub mod pattern;

#[cfg(any(test, feature = "oracle"))]
pub mod oracle;

pub use bounds::{
    delta_exact, delta_shift_check, paper_bounds, verify_construction, BoundRange, ExactDeltaResult,
    HId, PaperBound, Validity, VerificationReport, WitnessVerdict,
};
pub use connectivity::{
    find_separation, local_connectivity, min_degree, vertex_connectivity, ConnectivityReport,
    Separation,
};
pub use constructions::{
    construct_k2p3_k5, construct_p3p3_k7, construct_p4_k4, construct_p4_k5, lk2_lower_bound_graph,
    lk2p3_lower_bound_graph, snub_cube, three_cliques_k3, two_cliques, universal_augment,
    ConstructedInstance, TwoCliquesVariant,
};
pub use dot::export_dot;
pub use graph::{build_graph, complete_graph, Graph, GraphBuilder, GraphError};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use linkage::{
    double_vertices, is_h_linked, is_linked_pair, is_obstruction, solve_linkage,
    validate_path_system, HLinkedVerdict, LinkageVerdict, LinkedPairVerdict, ObstructionVerdict,
    PathSystem, SearchBudget, SolveOutcome, TerminalInjection,
};
pub use pattern::{make_pattern, pattern_union, PatternMultigraph, PatternParseError};
