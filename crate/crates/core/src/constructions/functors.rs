use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

use super::{checked_power, rank, DEFAULT_VERTEX_LIMIT};

/// Arc-graph `δ(G)`: one vertex per arc of `G` (in sorted arc order), and an
/// arc from `(u, v)` to `(v, w)` for every composable pair. Arcs of `G` that
/// compose with nothing stay as isolated vertices.
pub fn arc_graph(g: &Digraph) -> Digraph {
    let mut first = vec![0; g.vertex_count() + 1];
    for &(u, _) in g.arcs() {
        first[u + 1] += 1;
    }
    for i in 0..g.vertex_count() {
        first[i + 1] += first[i];
    }
    let mut arcs = Vec::new();
    for (a, &(_, v)) in g.arcs().iter().enumerate() {
        arcs.extend((first[v]..first[v + 1]).map(|b| (a, b)));
    }
    let labels = g.arcs().iter().map(|&(u, v)| vec![u, v]).collect();
    Digraph::from_sorted(g.arc_count(), arcs)
        .with_labels(labels)
        .with_name(format!("delta({})", g.name().unwrap_or("G")))
}

/// Iterated arc-graph `δ^k(G)` with the default vertex guard.
pub fn arc_graph_iter(g: &Digraph, k: usize) -> Result<Digraph> {
    arc_graph_iter_bounded(g, k, DEFAULT_VERTEX_LIMIT)
}

/// Iterated arc-graph `δ^k(G)`. Vertices are the walks `(u_0, …, u_k)` of
/// `G` in lexicographic order (labels hold the walk) and arcs join each walk
/// to its one-step shifts `(u_1, …, u_k, u_{k+1})`. This ordering coincides
/// with applying [`arc_graph`] `k` times.
pub fn arc_graph_iter_bounded(g: &Digraph, k: usize, limit: usize) -> Result<Digraph> {
    let count = walk_count(g, k);
    if count > limit as u128 {
        return Err(Error::SizeGuard {
            what: "iterated arc-graph vertices",
            size: count,
            limit: limit as u128,
        });
    }
    let mut walks: Vec<Vec<Vertex>> = Vec::with_capacity(count as usize);
    let mut stack = Vec::with_capacity(k + 1);
    for u in g.vertices() {
        stack.push(u);
        collect_walks(g, k, &mut stack, &mut walks);
        stack.pop();
    }
    // DFS over sorted out-lists already yields lexicographic order.
    debug_assert!(walks.windows(2).all(|w| w[0] < w[1]));

    let mut arcs = Vec::new();
    let mut shifted = vec![0; k + 1];
    for (i, w) in walks.iter().enumerate() {
        if k == 0 {
            arcs.extend(g.out_neighbors(w[0]).iter().map(|&v| (i, v)));
            continue;
        }
        shifted[..k].copy_from_slice(&w[1..]);
        for &next in g.out_neighbors(w[k]) {
            shifted[k] = next;
            let j = walks
                .binary_search(&shifted)
                .expect("shifted walk is a walk");
            arcs.push((i, j));
        }
    }
    let name = format!("delta^{k}({})", g.name().unwrap_or("G"));
    Ok(Digraph::from_sorted(walks.len(), arcs)
        .with_labels(walks)
        .with_name(name))
}

fn collect_walks(g: &Digraph, k: usize, stack: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    if stack.len() == k + 1 {
        out.push(stack.clone());
        return;
    }
    let last = *stack.last().expect("walk is never empty");
    for &v in g.out_neighbors(last) {
        stack.push(v);
        collect_walks(g, k, stack, out);
        stack.pop();
    }
}

fn walk_count(g: &Digraph, k: usize) -> u128 {
    let mut ending: Vec<u128> = vec![1; g.vertex_count()];
    for _ in 0..k {
        let mut next = vec![0u128; g.vertex_count()];
        for &(u, v) in g.arcs() {
            next[v] = next[v].saturating_add(ending[u]);
        }
        ending = next;
    }
    ending.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

/// `k`-th interleaved adjoint with the default vertex guard.
pub fn interleaved_adjoint(g: &Digraph, k: usize) -> Result<Digraph> {
    interleaved_adjoint_bounded(g, k, DEFAULT_VERTEX_LIMIT)
}

/// `k`-th interleaved adjoint `ι_k(G)`: vertices are the `k`-tuples over
/// `V(G)` in lexicographic order, with an arc `u → v` whenever
/// `u_1 → v_1 → u_2 → v_2 → … → u_k → v_k` is a walk of `G`.
pub fn interleaved_adjoint_bounded(g: &Digraph, k: usize, limit: usize) -> Result<Digraph> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "interleaved adjoint needs k >= 1".into(),
        ));
    }
    let n = g.vertex_count();
    let size = checked_power(n, k)
        .filter(|&s| s <= limit)
        .ok_or(Error::SizeGuard {
            what: "interleaved adjoint vertices",
            size: (n as u128).saturating_pow(k as u32),
            limit: limit as u128,
        })?;

    let mut arcs = Vec::new();
    let mut walk = Vec::with_capacity(2 * k);
    for u in g.vertices() {
        walk.push(u);
        interleaving_walks(g, k, &mut walk, &mut arcs);
        walk.pop();
    }

    let mut labels = Vec::with_capacity(size);
    let mut tuple = vec![0; k];
    for i in 0..size {
        super::unrank_into(i, n, &mut tuple);
        labels.push(tuple.clone());
    }
    let name = format!("iota_{k}({})", g.name().unwrap_or("G"));
    Ok(Digraph::from_unsorted(size, arcs)
        .with_labels(labels)
        .with_name(name))
}

fn interleaving_walks(
    g: &Digraph,
    k: usize,
    walk: &mut Vec<Vertex>,
    arcs: &mut Vec<(Vertex, Vertex)>,
) {
    let n = g.vertex_count();
    if walk.len() == 2 * k {
        let tail: Vec<Vertex> = walk.iter().step_by(2).copied().collect();
        let head: Vec<Vertex> = walk.iter().skip(1).step_by(2).copied().collect();
        arcs.push((rank(&tail, n), rank(&head, n)));
        return;
    }
    let last = *walk.last().expect("walk is never empty");
    for &next in g.out_neighbors(last) {
        walk.push(next);
        interleaving_walks(g, k, walk, arcs);
        walk.pop();
    }
}

/// `k`-th inverse interleaved adjoint `ι_k*(G)`, the left adjoint of `ι_k`.
///
/// Vertex `(u, c)` (copy `c ∈ 0..k` of `u`) has index `u·k + c` and label
/// `[u, c]`. Each arc `(u, v)` of `G` becomes the zigzag
/// `(u,0)→(v,0)`, `(v,0)→(u,1)`, `(u,1)→(v,1)`, …, `(u,k-1)→(v,k-1)`.
pub fn inverse_interleaved_adjoint(g: &Digraph, k: usize) -> Result<Digraph> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "inverse interleaved adjoint needs k >= 1".into(),
        ));
    }
    let n = g.vertex_count();
    let at = |u: Vertex, c: usize| u * k + c;
    let mut arcs = Vec::with_capacity((2 * k - 1) * g.arc_count());
    for &(u, v) in g.arcs() {
        for c in 0..k {
            arcs.push((at(u, c), at(v, c)));
            if c + 1 < k {
                arcs.push((at(v, c), at(u, c + 1)));
            }
        }
    }
    let labels = (0..n * k).map(|i| vec![i / k, i % k]).collect();
    let name = format!("iota*_{k}({})", g.name().unwrap_or("G"));
    Ok(Digraph::from_unsorted(n * k, arcs)
        .with_labels(labels)
        .with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{path, tournament};

    #[test]
    fn arc_graph_small_cases() {
        let d = arc_graph(&path(1));
        assert_eq!((d.vertex_count(), d.arc_count()), (1, 0));

        // arcs of T_3: (0,1), (0,2), (1,2); only (0,1)·(1,2) compose
        let d = arc_graph(&tournament(3));
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.arcs(), &[(0, 2)]);
        assert_eq!(d.label(0), Some(&[0, 1][..]));
        assert_eq!(d.label(2), Some(&[1, 2][..]));
    }

    #[test]
    fn iterated_arc_graph_matches_repeated_application() {
        let t4 = tournament(4);
        assert_eq!(arc_graph_iter(&t4, 0).unwrap(), t4);
        assert_eq!(arc_graph_iter(&t4, 1).unwrap(), arc_graph(&t4));
        let twice = arc_graph(&arc_graph(&t4));
        let d2 = arc_graph_iter(&t4, 2).unwrap();
        assert_eq!(d2, twice);
        // increasing 3-chains in a 4-set
        assert_eq!(d2.vertex_count(), 4);
    }

    #[test]
    fn iterated_arc_graph_respects_guard() {
        let err = arc_graph_iter_bounded(&tournament(6), 2, 10).unwrap_err();
        assert!(err.is_guard());
    }

    #[test]
    fn interleaved_adjoint_small_cases() {
        let t4 = tournament(4);
        assert_eq!(interleaved_adjoint(&t4, 1).unwrap(), t4);
        assert!(interleaved_adjoint(&t4, 0).is_err());

        let i2 = interleaved_adjoint(&t4, 2).unwrap();
        assert_eq!(i2.vertex_count(), 16);
        // (1,3) -> (2,4) in 1-based labels
        let u = i2.vertex_with_label(&[0, 2]).unwrap();
        let v = i2.vertex_with_label(&[1, 3]).unwrap();
        assert_eq!(i2.arcs(), &[(u, v)]);
    }

    #[test]
    fn interleaved_adjoint_of_tournament_counts_2k_subsets() {
        fn binom(n: usize, r: usize) -> usize {
            if r > n {
                return 0;
            }
            (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for n in 0..8 {
            for k in 1..4 {
                let g = interleaved_adjoint(&tournament(n), k).unwrap();
                assert_eq!(g.arc_count(), binom(n, 2 * k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn inverse_adjoint_unrolls_a_single_arc() {
        let p1 = path(1);
        assert_eq!(inverse_interleaved_adjoint(&p1, 1).unwrap(), p1);
        for k in 1..5 {
            let g = inverse_interleaved_adjoint(&p1, k).unwrap();
            assert_eq!(g.arc_count(), 2 * k - 1);
            // (0,0) -> (1,0) -> (0,1) -> (1,1) -> ...
            let order: Vec<_> = (0..2 * k).map(|i| (i % 2) * k + i / 2).collect();
            for w in order.windows(2) {
                assert!(g.has_arc(w[0], w[1]));
            }
        }
        let g = inverse_interleaved_adjoint(&tournament(3), 3).unwrap();
        assert_eq!(g.arc_count(), 15);
    }
}
