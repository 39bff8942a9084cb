//! Modular decomposition of undirected graphs and a few of its applications.
//!
//! The main entry point is [`md_tree`], which returns the modular decomposition
//! tree of a [`Graph`]. The building blocks are exposed as well: ordered
//! partition refinement, coarsest modular partitions, factoring permutations,
//! and the vertex-spine construction.
//!
//! ```
//! use modtree::{md_tree, Graph, Label};
//! // A path on four vertices is prime.
//! let t = md_tree(&Graph::path(4));
//! assert_eq!(t.label(t.root()), Label::Prime);
//! ```

#![forbid(unsafe_code)]

mod cograph;
mod error;
mod factperm;
pub mod generate;
mod graph;
mod intervals;
mod io;
mod kernel;
mod mdtree;
mod modpart;
mod partition;

pub use cograph::{cotree_adjacent, parse_edit_script, recognize_cograph, Cotree, Edit, Update, P4};
pub use error::{Error, Result};
pub use factperm::{
    factoring_permutation, fracture_tree, fractures, md_tree_from_factperm, FactoringPermutation, Fracture,
    FractureKind, FractureTree,
};
pub use graph::{is_module, parallel_compose, series_compose, substitute, Graph, ModuleTester, VertexSet};
pub use intervals::{
    common_intervals, parse_permutations, realizer_to_permutation_graph, strong_interval_tree,
    strong_modules_equal_strong_common_intervals, CommonIntervals, Permutation, StrongIntervalTree,
};
pub use io::{
    graph_from_json, graph_to_json, parse_edge_list, parse_instance, write_edge_list, write_instance,
};
pub use kernel::{
    clique_modules, is_cluster_graph, kernelize, solve_branching, solve_branching_with, EditInstance, EditSet, Kernel,
    PairEdit, RuleStep, DEFAULT_GUARD, SOLVER_VERTEX_LIMIT,
};
pub use mdtree::{
    adjacency_via_tree, build_strong_tree, classify_nodes, forcing_graph, md_tree_skeleton, modules_bruteforce,
    quotient, spine, strong_members, strong_modules_bruteforce, verify_md_tree, verify_md_tree_with,
    ForcingGraph, Label, MdTree, Node, NodeKind, Representatives, SetFamily, Spine, SpineNode, StrongTree,
    TreeBuilder, VerifyOptions, Violation, BRUTE_FORCE_LIMIT,
};
pub use modpart::{coarsest_modular_partition, coarsest_modular_partition_stats, v_modular_partition, RefineStats};
pub use partition::{OrderedPartition, PartId, Placement, Side, Split};

/// The modular decomposition tree of `g`.
///
/// Built from a factoring permutation; falls back to the vertex-spine
/// construction if that route fails verification. Panics on the empty graph.
pub fn md_tree(g: &Graph) -> MdTree {
    assert!(g.n() > 0, "graph must have a vertex");
    md_tree_from_factperm(g, &factoring_permutation(g)).unwrap_or_else(|_| md_tree_skeleton(g))
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/factperm.md")]
    mod factperm {}
    #[doc = include_str!("../../../book/src/cographs.md")]
    mod cographs {}
    #[doc = include_str!("../../../book/src/intervals.md")]
    mod intervals {}
    #[doc = include_str!("../../../book/src/cluster.md")]
    mod cluster {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
