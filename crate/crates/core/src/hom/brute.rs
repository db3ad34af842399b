use crate::digraph::{Digraph, Hom};
use crate::error::{Error, Result};

/// Largest search space `|V(H)|^|V(G)|` the oracle agrees to enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

pub fn brute_force_hom(g: &Digraph, h: &Digraph) -> Result<Option<Hom>> {
    brute_force_hom_bounded(g, h, BRUTE_FORCE_LIMIT)
}

/// Exhaustive enumeration of vertex maps in lexicographic order. A partial
/// map is abandoned as soon as an arc between assigned vertices breaks;
/// there is no propagation and no reordering, so this shares nothing with
/// the arc-consistency search it is used to check.
pub fn brute_force_hom_bounded(g: &Digraph, h: &Digraph, limit: u128) -> Result<Option<Hom>> {
    let n = g.vertex_count();
    let m = h.vertex_count();
    let space = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space > limit {
        return Err(Error::SizeGuard {
            what: "brute-force map space",
            size: space,
            limit,
        });
    }
    let mut map = vec![0usize; n];
    Ok(extend(g, h, &mut map, 0).then(|| Hom::new(map)))
}

fn extend(g: &Digraph, h: &Digraph, map: &mut [usize], next: usize) -> bool {
    if next == map.len() {
        return true;
    }
    for x in h.vertices() {
        map[next] = x;
        let ok = g
            .out_neighbors(next)
            .iter()
            .filter(|&&v| v <= next)
            .all(|&v| h.has_arc(x, map[v]))
            && g.in_neighbors(next)
                .iter()
                .filter(|&&u| u < next)
                .all(|&u| h.has_arc(map[u], x));
        if ok && extend(g, h, map, next + 1) {
            return true;
        }
    }
    false
}
