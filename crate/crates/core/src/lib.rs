//! Parity compilation of optimization-problem graphs.
//!
//! A problem graph (one vertex per spin, one edge per two-body term) is
//! encoded by choosing a basis of its GF(2) cycle space: every edge becomes a
//! vertex of the compiled hypergraph and every basis cycle becomes a
//! constraint. This crate builds those compiled hypergraphs, reconstructs the
//! graphs that compile to a given layout via loop labelings, and recognises
//! problems that fit a rectangular plaquette layout.
//!
//! Module overview:
//!
//! - [`hypergraph`]: value types ([`Hypergraph`], [`Graph`], [`Edge`]).
//! - [`canon`]: canonical forms and isomorphism.
//! - [`gf2`]: edge vectors, cycle and constraint space bases.
//! - [`compile`]: compiled hypergraphs, basis enumeration, par-equality.
//! - [`labeling`]: loop labelings and preimage search.
//! - [`rect`]: rectangular layouts and the complete-bipartite compiler.
//! - [`oracle`]: brute-force reference implementations for small instances.

pub mod canon;
pub mod compile;
pub mod error;
pub mod gf2;
pub mod hypergraph;
pub mod labeling;
pub mod oracle;
pub mod rect;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use compile::{compile, compiled_set, enumerate_bases, par_equal, CompiledHypergraph, CompiledSet};
pub use error::{Error, Result};
pub use gf2::{
    classify_basis, constraint_space_basis, cycle_basis, dim_formula, enumerate_space, in_span,
    is_constraint, sym_diff, BasisClass, EdgeIndex, EdgeVector, Gf2Basis,
};
pub use hypergraph::{Edge, Graph, Hypergraph, VertexId};
pub use labeling::{
    induced_graph, is_loop_labeling, preimage, search_labelings, LoopLabeling, PreimageResult,
    SearchOptions,
};
pub use rect::{cycle_edge_restriction, is_complete_bipartite, is_rect_layout, rect_compile, RectCompilation, RectLayout};
