//! Tools for checking Reed's bound `χ(G) ≤ ⌈(Δ(G) + ω(G) + 1) / 2⌉` on
//! small graphs from hereditary classes defined by two forbidden induced
//! subgraphs.
//!
//! - [`graph`]: the [`Graph`] value type and [`VertexSet`] bitsets.
//! - [`graph6`]: the standard graph6 codec.
//! - [`iso`]: isomorphism tests and canonical labelling.
//! - [`patterns`]: the named patterns and the four registered classes.
//! - [`invariants`]: exact `ω` and `χ` with certificate colourings.
//! - [`reed`]: the bound and per-graph reports.
//! - [`enumerate`]: isomorph-free generation, G(n, p) sampling and
//!   exhaustive counterexample search.
//! - [`kempe`]: bi-colour components, Kempe swaps and colouring extension.
//!
//! ```
//! use reed_core::{check_reed, Graph};
//!
//! let c5 = Graph::cycle(5).unwrap();
//! let report = check_reed(&c5).unwrap();
//! assert_eq!((report.chi, report.bound), (3, 3));
//! assert!(report.tight);
//! ```

pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod iso;
pub mod kempe;
pub mod patterns;
pub mod reed;

pub use enumerate::{
    counterexample_search, counterexample_search_with, enumerate_graphs, sample_gnp,
    EnumerateError, Levels, SearchResult, MAX_ENUMERATION_ORDER,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
pub use invariants::{
    chromatic_number, clique_number, greedy_bound, is_k_colorable, BudgetExhausted, Coloring,
    ColoringError, Solver,
};
pub use iso::{canonical_form, canonical_graph, find_isomorphism, is_isomorphic};
pub use kempe::{
    audit_facts, bicolor_component, extend_coloring, extend_coloring_with, kempe_swap,
    reed_color, unique_color_neighbors, AuditFacts, ExtendOptions, ExtensionProblem, KempeError,
};
pub use patterns::{
    catalog, contains_induced, find_induced, is_in_class, is_self_complementary, pattern,
    registry, ClassSpec, Embedding, Pattern,
};
pub use reed::{check_reed, check_reed_with, classify, reed_bound, ReedReport};
