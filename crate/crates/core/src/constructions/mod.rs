//! Graph families and functors: tournaments, paths, circular cliques,
//! arc-graphs, interleaved adjoints and their left adjoints, categorical
//! products, oriented-path families and tree duals.
//!
//! Every builder emits a dense [`Digraph`](crate::Digraph); structured
//! vertices are ranked lexicographically and their structure is kept in the
//! label table.

mod dual;
mod families;
mod functors;
mod oriented_path;
mod product;

pub use dual::{is_oriented_tree, tree_dual, tree_dual_bounded, DEFAULT_DUAL_LIMIT};
pub use families::{b_graph, circular_complete, complete, path, tournament};
pub use functors::{
    arc_graph, arc_graph_iter, arc_graph_iter_bounded, interleaved_adjoint,
    interleaved_adjoint_bounded, inverse_interleaved_adjoint,
};
pub use oriented_path::{algebraic_length, path_family, Direction, OrientedPath, PathFamily};
pub use product::{categorical_product, AdjacencyOracle, ProductSpec, DEFAULT_PRODUCT_THRESHOLD};

/// Default cap on the vertex count of any explicitly built digraph.
pub const DEFAULT_VERTEX_LIMIT: usize = 1 << 21;

/// Lexicographic rank of `digits` in base `radix` (first digit most
/// significant).
pub(crate) fn rank(digits: &[usize], radix: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * radix + d)
}

pub(crate) fn unrank_into(mut index: usize, radix: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d = index % radix;
        index /= radix;
    }
}

pub(crate) fn checked_power(base: usize, exp: usize) -> Option<usize> {
    u32::try_from(exp).ok().and_then(|e| base.checked_pow(e))
}
