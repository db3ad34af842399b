//! Exact chromatic number of the symmetrisation of a digraph.
//!
//! Bounds first: a clique gives the lower bound, a DSATUR greedy colouring
//! the upper one. When they differ, each intermediate colour count is
//! decided by DSATUR-ordered backtracking with forward checking, where a
//! vertex may only open the next unused colour.

use serde::Serialize;

use crate::constructions::arc_graph;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Node budget for each colourability decision.
pub const DEFAULT_COLOURING_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColouringResult {
    pub chi: usize,
    /// Proper colouring with colours `0..chi`.
    pub colouring: Vec<usize>,
    /// A clique of size `chi`, when one certifies optimality. Otherwise the
    /// lower bound was established by exhausting the `chi - 1` search.
    pub clique: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChromaticOutcome {
    Exact(ColouringResult),
    /// `χ > limit`; `lower` is the best lower bound found.
    ExceedsLimit {
        lower: usize,
    },
}

impl ChromaticOutcome {
    pub fn exact(&self) -> Option<&ColouringResult> {
        match self {
            ChromaticOutcome::Exact(r) => Some(r),
            ChromaticOutcome::ExceedsLimit { .. } => None,
        }
    }

    pub fn chi(&self) -> Option<usize> {
        self.exact().map(|r| r.chi)
    }
}

/// True iff `colour[u] != colour[v]` for every arc `(u, v)`.
pub fn check_colouring(g: &Digraph, colour: &[usize]) -> bool {
    colour.len() == g.vertex_count() && g.arcs().iter().all(|&(u, v)| colour[u] != colour[v])
}

pub fn chromatic_number(g: &Digraph, limit: usize) -> Result<ChromaticOutcome> {
    chromatic_number_with_budget(g, limit, DEFAULT_COLOURING_BUDGET)
}

pub fn chromatic_number_with_budget(
    g: &Digraph,
    limit: usize,
    budget: u64,
) -> Result<ChromaticOutcome> {
    if let Some(u) = g.loops().next() {
        return Err(Error::LoopPresent(u));
    }
    if limit == 0 {
        return Err(Error::InvalidParameter(
            "colour limit must be at least 1".into(),
        ));
    }
    let graph = Simple::new(g);
    if graph.n == 0 {
        return Ok(ChromaticOutcome::Exact(ColouringResult {
            chi: 0,
            colouring: Vec::new(),
            clique: Some(Vec::new()),
        }));
    }
    let clique = graph.large_clique();
    let lower = clique.len();
    if lower > limit {
        return Ok(ChromaticOutcome::ExceedsLimit { lower });
    }
    let greedy = graph.dsatur_greedy();
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    if lower == upper {
        return Ok(ChromaticOutcome::Exact(ColouringResult {
            chi: upper,
            colouring: greedy,
            clique: Some(clique),
        }));
    }
    for k in lower..upper.min(limit + 1) {
        if let Some(colouring) = graph.colour_with(k, budget)? {
            return Ok(ChromaticOutcome::Exact(ColouringResult {
                chi: k,
                colouring,
                clique: (k == lower).then_some(clique),
            }));
        }
    }
    if upper <= limit {
        Ok(ChromaticOutcome::Exact(ColouringResult {
            chi: upper,
            colouring: greedy,
            clique: None,
        }))
    } else {
        Ok(ChromaticOutcome::ExceedsLimit { lower: limit + 1 })
    }
}

/// Whether `g` admits a proper colouring with `k` colours; returns one.
pub fn colourable(g: &Digraph, k: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    if let Some(u) = g.loops().next() {
        return Err(Error::LoopPresent(u));
    }
    Simple::new(g).colour_with(k, budget)
}

/// The bounds `log₂ χ(G) ≤ χ(δ(G)) ≤ 2 log₂ χ(G)` next to the exact value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArcGraphBounds {
    pub chi: usize,
    pub lower: f64,
    pub upper: f64,
    pub chi_arc_graph: usize,
    pub within: bool,
}

pub fn chi_bounds_arc_graph(g: &Digraph, limit: usize) -> Result<ArcGraphBounds> {
    let exact = |h: &Digraph| -> Result<usize> {
        chromatic_number(h, limit)?.chi().ok_or(Error::SizeGuard {
            what: "chromatic number",
            size: limit as u128 + 1,
            limit: limit as u128,
        })
    };
    let chi = exact(g)?;
    let chi_arc_graph = exact(&arc_graph(g))?;
    let log = if chi <= 1 { 0.0 } else { (chi as f64).log2() };
    let (lower, upper) = (log, 2.0 * log);
    let eps = 1e-9;
    Ok(ArcGraphBounds {
        chi,
        lower,
        upper,
        chi_arc_graph,
        within: lower <= chi_arc_graph as f64 + eps && chi_arc_graph as f64 <= upper + eps,
    })
}

/// Symmetrised, loop-free adjacency.
struct Simple {
    n: usize,
    adj: Vec<Vec<usize>>,
}

const NONE: usize = usize::MAX;

impl Simple {
    fn new(g: &Digraph) -> Self {
        let s = g.symmetrize();
        let adj = s.vertices().map(|u| s.out_neighbors(u).to_vec()).collect();
        Simple {
            n: s.vertex_count(),
            adj,
        }
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    fn large_clique(&self) -> Vec<usize> {
        let mut best: Vec<usize> = Vec::new();
        for v in 0..self.n {
            let mut cand = self.adj[v].clone();
            cand.sort_by_key(|&w| std::cmp::Reverse(self.adj[w].len()));
            let mut clique = vec![v];
            for w in cand {
                if clique.iter().all(|&c| self.adjacent(c, w)) {
                    clique.push(w);
                }
            }
            if clique.len() > best.len() {
                best = clique;
            }
        }
        // exact search among the highest-degree vertices
        let mut top: Vec<usize> = (0..self.n).collect();
        top.sort_by_key(|&v| (std::cmp::Reverse(self.adj[v].len()), v));
        top.truncate(20);
        let masks: Vec<u32> = top
            .iter()
            .map(|&u| {
                top.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adjacent(u, v))
                    .fold(0u32, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let mut exact = 0u32;
        max_clique(&masks, 0, (1u32 << top.len()) - 1, &mut exact);
        if exact.count_ones() as usize > best.len() {
            best = (0..top.len())
                .filter(|&j| exact & (1 << j) != 0)
                .map(|j| top[j])
                .collect();
        }
        best.sort_unstable();
        best
    }

    fn pick(&self, colour: &[usize], sat: &[usize]) -> Option<usize> {
        (0..self.n)
            .filter(|&v| colour[v] == NONE)
            .max_by_key(|&v| (sat[v], self.adj[v].len(), std::cmp::Reverse(v)))
    }

    fn dsatur_greedy(&self) -> Vec<usize> {
        let mut colour = vec![NONE; self.n];
        let mut seen: Vec<Vec<bool>> = vec![Vec::new(); self.n];
        let mut sat = vec![0; self.n];
        while let Some(v) = self.pick(&colour, &sat) {
            let c = (0..)
                .find(|&c| !seen[v].get(c).copied().unwrap_or(false))
                .unwrap();
            colour[v] = c;
            for &w in &self.adj[v] {
                if seen[w].len() <= c {
                    seen[w].resize(c + 1, false);
                }
                if !seen[w][c] {
                    seen[w][c] = true;
                    sat[w] += 1;
                }
            }
        }
        colour
    }

    fn colour_with(&self, k: usize, budget: u64) -> Result<Option<Vec<usize>>> {
        if k == 0 {
            return Ok((self.n == 0).then(Vec::new));
        }
        let mut state = Decision {
            g: self,
            k,
            colour: vec![NONE; self.n],
            count: vec![0; self.n * k],
            sat: vec![0; self.n],
            nodes: 0,
            budget,
        };
        match state.descend(0, 0) {
            Some(true) => Ok(Some(state.colour)),
            Some(false) => Ok(None),
            None => Err(Error::BudgetExceeded(budget)),
        }
    }
}

fn max_clique(masks: &[u32], current: u32, candidates: u32, best: &mut u32) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    max_clique(masks, current | 1 << v, candidates & masks[v], best);
    max_clique(masks, current, candidates & !(1 << v), best);
}

struct Decision<'a> {
    g: &'a Simple,
    k: usize,
    colour: Vec<usize>,
    count: Vec<u32>,
    sat: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Decision<'_> {
    /// `Some(true)`: coloured; `Some(false)`: refuted; `None`: out of budget.
    fn descend(&mut self, coloured: usize, used: usize) -> Option<bool> {
        if coloured == self.g.n {
            return Some(true);
        }
        let v = self
            .g
            .pick(&self.colour, &self.sat)
            .expect("an uncoloured vertex remains");
        let options = self.k.min(used + 1);
        for c in 0..options {
            if self.count[v * self.k + c] > 0 {
                continue;
            }
            if self.nodes >= self.budget {
                return None;
            }
            self.nodes += 1;
            let viable = self.paint(v, c);
            if viable {
                match self.descend(coloured + 1, used.max(c + 1)) {
                    Some(false) => {}
                    done => return done,
                }
            }
            self.unpaint(v, c);
        }
        Some(false)
    }

    /// Colours `v` and reports whether every uncoloured neighbour still has
    /// a free colour.
    fn paint(&mut self, v: usize, c: usize) -> bool {
        self.colour[v] = c;
        let mut viable = true;
        for &w in &self.g.adj[v] {
            let slot = &mut self.count[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[w] += 1;
                if self.colour[w] == NONE && self.sat[w] == self.k {
                    viable = false;
                }
            }
        }
        viable
    }

    fn unpaint(&mut self, v: usize, c: usize) {
        self.colour[v] = NONE;
        for &w in &self.g.adj[v] {
            let slot = &mut self.count[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{circular_complete, complete, interleaved_adjoint, tournament};

    fn chi(g: &Digraph) -> usize {
        chromatic_number(g, 16).unwrap().chi().unwrap()
    }

    #[test]
    fn complete_graphs() {
        for n in 0..8 {
            let r = chromatic_number(&complete(n), 16).unwrap();
            let r = r.exact().unwrap();
            assert_eq!(r.chi, n);
            assert!(check_colouring(&complete(n), &r.colouring));
            assert_eq!(r.clique.as_ref().map(Vec::len), Some(n));
        }
    }

    #[test]
    fn degenerate_conventions() {
        assert_eq!(chi(&Digraph::empty(0)), 0);
        assert_eq!(chi(&Digraph::empty(4)), 1);
        let looped = Digraph::new(2, [(0, 1), (1, 1)]).unwrap();
        assert!(matches!(
            chromatic_number(&looped, 3),
            Err(Error::LoopPresent(1))
        ));
    }

    #[test]
    fn odd_cycles_need_an_exhaustive_refutation() {
        // C_5 and C_7 have clique number 2 but chromatic number 3
        for n in [5, 7] {
            let c = circular_complete(n, n / 2).unwrap();
            let r = chromatic_number(&c, 8).unwrap();
            let r = r.exact().unwrap();
            assert_eq!(r.chi, 3);
            assert!(check_colouring(&c, &r.colouring));
            assert_eq!(r.clique, None);
        }
    }

    #[test]
    fn limit_is_respected() {
        assert_eq!(
            chromatic_number(&complete(5), 3).unwrap(),
            ChromaticOutcome::ExceedsLimit { lower: 5 }
        );
        assert_eq!(chromatic_number(&complete(5), 5).unwrap().chi(), Some(5));
    }

    #[test]
    fn check_colouring_cases() {
        assert!(check_colouring(&Digraph::empty(3), &[0, 0, 0]));
        assert!(!check_colouring(&tournament(3), &[0, 1, 0]));
        assert!(!check_colouring(&tournament(3), &[0, 1]));
    }

    #[test]
    fn iota2_t6_has_chromatic_number_three() {
        assert_eq!(chi(&interleaved_adjoint(&tournament(6), 2).unwrap()), 3);
    }

    #[test]
    fn arc_graph_bounds() {
        let b = chi_bounds_arc_graph(&complete(2), 8).unwrap();
        assert_eq!((b.lower, b.upper, b.chi_arc_graph), (1.0, 2.0, 2));
        assert!(b.within);

        let b = chi_bounds_arc_graph(&complete(4), 8).unwrap();
        assert_eq!((b.lower, b.upper), (2.0, 4.0));
        assert!(b.within);

        let b = chi_bounds_arc_graph(&Digraph::empty(3), 8).unwrap();
        assert_eq!((b.chi, b.chi_arc_graph), (1, 0));
        assert!(b.within);
    }
}
