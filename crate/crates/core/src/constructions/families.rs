use crate::digraph::Digraph;
use crate::error::{Error, Result};

use super::functors::interleaved_adjoint;

/// Transitive tournament `T_n`: vertex `i` stands for `i + 1`, arcs `(i, j)`
/// for every `i < j`.
pub fn tournament(n: usize) -> Digraph {
    let arcs = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Digraph::from_sorted(n, arcs).with_name(format!("T_{n}"))
}

/// Directed path `P_n` with `n` forward arcs on `n + 1` vertices.
pub fn path(n: usize) -> Digraph {
    Digraph::from_sorted(n + 1, (0..n).map(|i| (i, i + 1)).collect()).with_name(format!("P_{n}"))
}

/// Complete symmetric loopless digraph `K_n`.
pub fn complete(n: usize) -> Digraph {
    let arcs = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    Digraph::from_sorted(n, arcs).with_name(format!("K_{n}"))
}

fn check_ratio(n: usize, k: usize) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2k >= 2, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Circular complete graph `K_{n/k}`: residues mod `n`, adjacent when their
/// circular distance is at least `k`.
pub fn circular_complete(n: usize, k: usize) -> Result<Digraph> {
    check_ratio(n, k)?;
    let arcs = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let d = (i + n - j) % n;
            k <= d && d <= n - k
        })
        .collect();
    Ok(Digraph::from_sorted(n, arcs).with_name(format!("K_{n}/{k}")))
}

/// Symmetrisation of the `k`-th interleaved adjoint of `T_n`.
pub fn b_graph(n: usize, k: usize) -> Result<Digraph> {
    check_ratio(n, k)?;
    let g = interleaved_adjoint(&tournament(n), k)?.symmetrize();
    Ok(g.with_name(format!("B({n},{k})")))
}
