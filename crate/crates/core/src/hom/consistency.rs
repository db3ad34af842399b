use std::collections::VecDeque;

use crate::digraph::Digraph;

use super::domains::{intersects, Domains, TargetIndex};

/// A homomorphism question `source → target` with per-vertex candidate
/// sets. An empty candidate set means no homomorphism exists.
#[derive(Clone, Debug)]
pub struct HomProblem<'a> {
    pub source: &'a Digraph,
    pub target: &'a Digraph,
    pub domains: Domains,
    pub budget: u64,
}

impl<'a> HomProblem<'a> {
    pub fn new(source: &'a Digraph, target: &'a Digraph, budget: u64) -> Self {
        HomProblem {
            source,
            target,
            domains: Domains::full(source.vertex_count(), target.vertex_count()),
            budget,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AcOutcome {
    /// The largest arc-consistent sub-domains; all non-empty.
    Consistent(Domains),
    Unsat,
}

/// Reduces the candidate sets to their arc-consistent fixpoint: value `x`
/// survives at `u` iff every arc at `u` has a compatible surviving value at
/// its other end. Complete for targets with tree duality, a sound filter
/// otherwise.
pub fn arc_consistency(problem: &HomProblem<'_>) -> AcOutcome {
    let index = TargetIndex::new(problem.target);
    let mut domains = problem.domains.clone();
    if !restrict_loops(problem.source, &index, &mut domains) {
        return AcOutcome::Unsat;
    }
    let all: Vec<usize> = problem.source.vertices().collect();
    if propagate(problem.source, &index, &mut domains, &all) {
        AcOutcome::Consistent(domains)
    } else {
        AcOutcome::Unsat
    }
}

/// A source loop at `u` is a unary constraint: `u` must go to a looped
/// target vertex.
pub(crate) fn restrict_loops(source: &Digraph, index: &TargetIndex, domains: &mut Domains) -> bool {
    for u in source.loops() {
        domains
            .words_mut(u)
            .iter_mut()
            .zip(&index.loops)
            .for_each(|(w, l)| *w &= l);
    }
    source.vertices().all(|u| !domains.is_empty(u))
}

/// Worklist fixpoint starting from the vertices in `changed`. Returns false
/// as soon as some domain empties.
pub(crate) fn propagate(
    source: &Digraph,
    index: &TargetIndex,
    domains: &mut Domains,
    changed: &[usize],
) -> bool {
    let n = source.vertex_count();
    let mut queued = vec![false; n];
    let mut queue: VecDeque<usize> = VecDeque::with_capacity(n);
    for &u in changed {
        if !queued[u] {
            queued[u] = true;
            queue.push_back(u);
        }
    }
    let mut support = vec![0u64; index.words];
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        support.copy_from_slice(domains.words(u));
        // u -> w: x stays at w iff some in-neighbour of x lies in D(u)
        for &w in source.out_neighbors(u) {
            if w != u && revise(domains, w, &support, |x| index.inn(x)) {
                if domains.is_empty(w) {
                    return false;
                }
                if !queued[w] {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
        // w -> u: x stays at w iff some out-neighbour of x lies in D(u)
        for &w in source.in_neighbors(u) {
            if w != u && revise(domains, w, &support, |x| index.out(x)) {
                if domains.is_empty(w) {
                    return false;
                }
                if !queued[w] {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    true
}

fn revise<'i>(
    domains: &mut Domains,
    w: usize,
    support: &[u64],
    neighbours: impl Fn(usize) -> &'i [u64],
) -> bool {
    let doomed: Vec<usize> = domains
        .values(w)
        .filter(|&x| !intersects(neighbours(x), support))
        .collect();
    let words = domains.words_mut(w);
    for &x in &doomed {
        words[x / 64] &= !(1 << (x % 64));
    }
    !doomed.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{path, tournament};

    #[test]
    fn p2_into_t2_is_refuted() {
        let (p2, t2) = (path(2), tournament(2));
        assert_eq!(
            arc_consistency(&HomProblem::new(&p2, &t2, 1)),
            AcOutcome::Unsat
        );
    }

    #[test]
    fn long_paths_into_t3_are_refuted() {
        let t3 = tournament(3);
        for n in [3, 4] {
            let p = path(n);
            assert_eq!(
                arc_consistency(&HomProblem::new(&p, &t3, 1)),
                AcOutcome::Unsat
            );
        }
        let p2 = path(2);
        let AcOutcome::Consistent(d) = arc_consistency(&HomProblem::new(&p2, &t3, 1)) else {
            panic!("P_2 maps to T_3");
        };
        // the path is forced onto the chain 0 < 1 < 2
        assert_eq!(d.to_sets(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn arcless_source_keeps_domains() {
        let g = Digraph::empty(3);
        let t3 = tournament(3);
        let p = HomProblem::new(&g, &t3, 1);
        assert_eq!(
            arc_consistency(&p),
            AcOutcome::Consistent(p.domains.clone())
        );
    }

    #[test]
    fn source_loop_needs_target_loop() {
        let g = Digraph::new(1, [(0, 0)]).unwrap();
        let t = tournament(3);
        assert_eq!(
            arc_consistency(&HomProblem::new(&g, &t, 1)),
            AcOutcome::Unsat
        );
        let h = Digraph::new(2, [(0, 1), (1, 1)]).unwrap();
        let AcOutcome::Consistent(d) = arc_consistency(&HomProblem::new(&g, &h, 1)) else {
            panic!("loop maps to loop");
        };
        assert_eq!(d.to_sets(), vec![vec![1]]);
    }
}
