//! Seeded and exhaustive instance generators.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;

use super::iso::canonical_arcs;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each off-diagonal pair becomes an arc with probability `p`, each vertex
/// gets a loop with probability `loop_p`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64, loop_p: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let q = if u == v { loop_p } else { p };
            if q > 0.0 && rng.gen_bool(q) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_sorted(n, arcs)
}

/// Random digraph with `1..=max_n` vertices and a random arc density.
pub fn random_small(rng: &mut impl Rng, max_n: usize, loop_p: f64) -> Digraph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.2..0.8);
    random_digraph(rng, n, p, loop_p)
}

/// Every digraph on vertex set `0..n` (labelled, `2^(n²)` of them with loops
/// or `2^(n²-n)` without).
pub fn all_digraphs(n: usize, loops: bool) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .cartesian_product(0..n)
        .filter(|&(u, v)| loops || u != v)
        .collect();
    assert!(pairs.len() < 32, "too many digraphs to enumerate");
    (0u32..1 << pairs.len()).map(move |mask| {
        let arcs = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &a)| a)
            .collect();
        Digraph::from_sorted(n, arcs)
    })
}

/// All digraphs with at most `max_n` vertices, starting from the empty one.
pub fn all_digraphs_up_to(max_n: usize, loops: bool) -> impl Iterator<Item = Digraph> {
    (0..=max_n).flat_map(move |n| all_digraphs(n, loops))
}

/// Edge sets of all labelled trees on `n` vertices, via Prüfer sequences.
fn labelled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Vec::new()],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    (0..n - 2)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(|seq| {
            let mut degree = vec![1usize; n];
            for &x in &seq {
                degree[x] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
                edges.push((leaf, x));
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            edges
        })
        .collect()
}

/// One representative of every isomorphism class of oriented trees with at
/// most `max_arcs` arcs, smallest first.
pub fn all_oriented_trees(max_arcs: usize) -> Vec<Digraph> {
    let mut out = Vec::new();
    for m in 0..=max_arcs {
        let mut seen = std::collections::BTreeSet::new();
        for edges in labelled_trees(m + 1) {
            for mask in 0u32..1 << m {
                let arcs: Vec<(usize, usize)> = edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| if mask & (1 << i) != 0 { (b, a) } else { (a, b) })
                    .collect();
                let g = Digraph::from_unsorted(m + 1, arcs);
                if seen.insert(canonical_arcs(&g)) {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Random oriented tree on `n` vertices: each vertex attaches to an earlier
/// one with a random orientation.
pub fn random_oriented_tree(rng: &mut impl Rng, n: usize) -> Digraph {
    let arcs = (1..n)
        .map(|v| {
            let u = rng.gen_range(0..v);
            if rng.gen_bool(0.5) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    Digraph::from_unsorted(n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::is_oriented_tree;

    #[test]
    fn digraph_counts() {
        assert_eq!(all_digraphs(3, true).count(), 512);
        assert_eq!(all_digraphs(3, false).count(), 64);
        assert_eq!(all_digraphs_up_to(2, true).count(), 1 + 2 + 16);
    }

    #[test]
    fn cayley_counts() {
        for (n, c) in [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)] {
            assert_eq!(labelled_trees(n).len(), c);
        }
    }

    #[test]
    fn oriented_tree_classes() {
        // unlabelled oriented trees with 0..=4 arcs: 1, 1, 3, 8, 27
        let trees = all_oriented_trees(4);
        let by_size = (0..=4)
            .map(|m| trees.iter().filter(|t| t.arc_count() == m).count())
            .collect::<Vec<_>>();
        assert_eq!(by_size, vec![1, 1, 3, 8, 27]);
        assert!(trees.iter().all(is_oriented_tree));
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_small(&mut rng(5), 5, 0.1);
        let b = random_small(&mut rng(5), 5, 0.1);
        assert_eq!(a, b);
        assert!(is_oriented_tree(&random_oriented_tree(&mut rng(1), 6)));
    }
}
