//! Brute-force isomorphism for graphs of at most ten vertices.

use itertools::Itertools;

use crate::digraph::Digraph;

pub const ISO_VERTEX_LIMIT: usize = 10;

/// Lexicographically least sorted arc list over all relabellings. Exponential;
/// meant for graphs of six vertices or fewer.
pub fn canonical_arcs(g: &Digraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut arcs: Vec<_> = g.arcs().iter().map(|&(u, v)| (p[u], p[v])).collect();
            arcs.sort_unstable();
            arcs
        })
        .min()
        .unwrap_or_default()
}

fn degrees(g: &Digraph, u: usize) -> (usize, usize, bool) {
    (
        g.out_neighbors(u).len(),
        g.in_neighbors(u).len(),
        g.has_loop(u),
    )
}

/// A bijection `φ` with `u→v ⇔ φ(u)→φ(v)`, or `None`.
pub fn find_isomorphism(g: &Digraph, h: &Digraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    assert!(
        n <= ISO_VERTEX_LIMIT,
        "isomorphism check limited to {ISO_VERTEX_LIMIT} vertices"
    );
    if n != h.vertex_count() || g.arc_count() != h.arc_count() {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &mut map, &mut used, 0).then_some(map)
}

pub fn is_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    find_isomorphism(g, h).is_some()
}

fn extend(g: &Digraph, h: &Digraph, map: &mut [usize], used: &mut [bool], u: usize) -> bool {
    if u == map.len() {
        return true;
    }
    for x in 0..map.len() {
        if used[x] || degrees(g, u) != degrees(h, x) {
            continue;
        }
        let ok = (0..u).all(|w| {
            g.has_arc(u, w) == h.has_arc(x, map[w]) && g.has_arc(w, u) == h.has_arc(map[w], x)
        });
        if ok {
            map[u] = x;
            used[x] = true;
            if extend(g, h, map, used, u + 1) {
                return true;
            }
            used[x] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{interleaved_adjoint, tournament};

    #[test]
    fn relabelled_copies() {
        let g = Digraph::new(3, [(0, 1), (1, 2), (2, 2)]).unwrap();
        let h = Digraph::new(3, [(2, 0), (0, 1), (1, 1)]).unwrap();
        let phi = find_isomorphism(&g, &h).unwrap();
        assert!(g.arcs().iter().all(|&(u, v)| h.has_arc(phi[u], phi[v])));
        assert_eq!(canonical_arcs(&g), canonical_arcs(&h));
        assert!(!is_isomorphic(&g, &tournament(3)));
    }

    #[test]
    fn first_adjoint_is_identity_up_to_iso() {
        let t = tournament(5);
        assert!(is_isomorphic(&interleaved_adjoint(&t, 1).unwrap(), &t));
    }
}
