use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Default cap on the number of incidence functions a dual may have.
pub const DEFAULT_DUAL_LIMIT: usize = 1 << 16;

/// Connected, `|A| = |V| - 1`, no loops and no 2-cycles.
pub fn is_oriented_tree(t: &Digraph) -> bool {
    check_tree(t).is_ok()
}

fn check_tree(t: &Digraph) -> Result<()> {
    let n = t.vertex_count();
    if n == 0 {
        return Err(Error::NotATree("no vertices".into()));
    }
    if let Some(u) = t.loops().next() {
        return Err(Error::NotATree(format!("loop at {u}")));
    }
    if let Some(&(u, v)) = t.arcs().iter().find(|&&(u, v)| t.has_arc(v, u)) {
        return Err(Error::NotATree(format!("2-cycle between {u} and {v}")));
    }
    if t.arc_count() + 1 != n {
        return Err(Error::NotATree(format!(
            "{} arcs on {n} vertices",
            t.arc_count()
        )));
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in t.out_neighbors(u).iter().chain(t.in_neighbors(u)) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotATree("disconnected".into()));
    }
    Ok(())
}

/// Dual of an oriented tree with the default size guard.
pub fn tree_dual(t: &Digraph) -> Result<Digraph> {
    tree_dual_bounded(t, DEFAULT_DUAL_LIMIT)
}

/// Dual `D(T)` of an oriented tree `T`: `G → D(T)` exists iff `T ↛ G`.
///
/// Vertices are the functions `f: V(T) → A(T)` with `f(u)` incident to `u`,
/// ranked lexicographically (each coordinate ranges over the incident arcs
/// of that vertex in arc order); the label of `f` lists the arc indices
/// `f(0), f(1), …`. There is an arc `f → g` iff `f(u) ≠ g(v)` for every arc
/// `(u, v)` of `T`.
pub fn tree_dual_bounded(t: &Digraph, limit: usize) -> Result<Digraph> {
    check_tree(t)?;
    let n = t.vertex_count();
    let incident: Vec<Vec<usize>> = t
        .vertices()
        .map(|u| {
            let mut arcs: Vec<usize> = t
                .out_neighbors(u)
                .iter()
                .map(|&v| t.arc_index(u, v).expect("out-arc"))
                .chain(
                    t.in_neighbors(u)
                        .iter()
                        .map(|&w| t.arc_index(w, u).expect("in-arc")),
                )
                .collect();
            arcs.sort_unstable();
            arcs
        })
        .collect();

    let size = incident
        .iter()
        .try_fold(1usize, |acc, a| acc.checked_mul(a.len()))
        .filter(|&s| s <= limit)
        .ok_or_else(|| Error::SizeGuard {
            what: "tree dual vertices",
            size: incident
                .iter()
                .fold(1u128, |acc, a| acc.saturating_mul(a.len() as u128)),
            limit: limit as u128,
        })?;

    let radices: Vec<usize> = incident.iter().map(Vec::len).collect();
    let rank_of = |choice: &[usize]| {
        choice
            .iter()
            .zip(&radices)
            .fold(0usize, |acc, (&c, &r)| acc * r + c)
    };

    let mut labels = Vec::with_capacity(size);
    let mut arcs = Vec::new();
    let mut f_choice = vec![0usize; n];
    let mut allowed: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut g_choice = vec![0usize; n];
    for f in 0..size {
        let mut rest = f;
        for u in (0..n).rev() {
            f_choice[u] = rest % radices[u];
            rest /= radices[u];
        }
        labels.push((0..n).map(|u| incident[u][f_choice[u]]).collect::<Vec<_>>());

        // g(v) must avoid f(u) for every arc (u, v); since T is a tree,
        // f(u) and g(v) can only coincide on the arc (u, v) itself.
        for v in 0..n {
            allowed[v].clear();
            allowed[v].extend((0..radices[v]).filter(|&s| {
                let arc = incident[v][s];
                t.in_neighbors(v)
                    .iter()
                    .all(|&u| incident[u][f_choice[u]] != arc)
            }));
        }
        if allowed.iter().any(Vec::is_empty) {
            continue;
        }
        let mut pos = vec![0usize; n];
        'odometer: loop {
            for v in 0..n {
                g_choice[v] = allowed[v][pos[v]];
            }
            arcs.push((f, rank_of(&g_choice)));
            let mut i = n;
            loop {
                if i == 0 {
                    break 'odometer;
                }
                i -= 1;
                pos[i] += 1;
                if pos[i] < allowed[i].len() {
                    break;
                }
                pos[i] = 0;
            }
        }
    }
    let name = format!("D({})", t.name().unwrap_or("T"));
    Ok(Digraph::from_sorted(size, arcs)
        .with_labels(labels)
        .with_name(name))
}
