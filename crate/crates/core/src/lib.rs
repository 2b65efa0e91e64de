//! The geometric-arithmetic (GA) index on unicyclic graphs.
//!
//! For a graph `G`, `GA(G)` sums `2·sqrt(d(u)·d(v)) / (d(u) + d(v))` over
//! its edges. Among unicyclic graphs on `n` vertices,
//!
//! ```text
//! GA(S_{n;3}) <= GA(G) <= GA(C_n) = n
//! ```
//!
//! where `S_{n;3}` is a triangle carrying `n - 3` pendant vertices on a
//! single vertex. This crate computes the index, builds the extremal
//! families and their closed forms, implements the GA-decreasing graph
//! transformations that reduce any unicyclic graph to a family member, and
//! checks the bounds exhaustively on small orders.
//!
//! ```
//! use unicyclic_ga::{families::ga_sn3_closed, ga_index, reduction_pipeline, Graph};
//!
//! let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5)]).unwrap();
//! let ga = ga_index(&g).unwrap();
//! assert!(ga_sn3_closed(6).unwrap() <= ga && ga <= 6.0);
//!
//! let trace = reduction_pipeline(&g).unwrap();
//! assert!(trace.terminal_ga <= ga);
//! ```

pub mod canon;
pub mod edgelist;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod index;
pub mod structure;
pub mod tables;
pub mod transform;

pub use canon::{canonical_form, canonical_labeling, CanonicalKey};
pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError};
pub use families::{identify_family, make_family, FamilyError, FamilySpec};
pub use graph::{Edge, Graph, GraphError};
pub use index::{ag_index, edge_contribution, edge_contributions, ga_index, EdgeContribution, IndexError};
pub use structure::{
    classify_cycle_vertex, find_cycle, is_unicyclic, pendant_tree, CycleStructure,
    CycleVertexClass, PendantTree,
};
pub use tables::{ComparisonTable, TableKind};
pub use transform::{reduction_pipeline, TransformError, TransformTrace};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/ga-index.md")]
    mod ga_index {}
    #[doc = include_str!("../../../book/src/unicyclic-structure.md")]
    mod unicyclic_structure {}
    #[doc = include_str!("../../../book/src/extremal-families.md")]
    mod extremal_families {}
    #[doc = include_str!("../../../book/src/transformations.md")]
    mod transformations {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
