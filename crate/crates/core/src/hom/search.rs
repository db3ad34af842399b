use crate::digraph::{Digraph, Hom};

use super::consistency::{propagate, restrict_loops, HomProblem};
use super::domains::{Domains, TargetIndex};
use super::HomOutcome;

struct Search<'a> {
    source: &'a Digraph,
    index: TargetIndex,
    nodes: u64,
    budget: u64,
}

enum Step {
    Solved(Domains),
    Dead,
    OutOfBudget,
}

/// Backtracking with arc consistency maintained after every assignment.
/// Variables are taken smallest-domain-first (ties to the lowest id), values
/// in ascending order.
pub(crate) fn solve(problem: &HomProblem<'_>) -> (HomOutcome, u64) {
    let mut search = Search {
        source: problem.source,
        index: TargetIndex::new(problem.target),
        nodes: 0,
        budget: problem.budget,
    };
    let mut domains = problem.domains.clone();
    let all: Vec<usize> = problem.source.vertices().collect();
    if !restrict_loops(search.source, &search.index, &mut domains)
        || !propagate(search.source, &search.index, &mut domains, &all)
    {
        return (HomOutcome::NotFound, 0);
    }
    let outcome = match search.descend(domains) {
        Step::Solved(d) => {
            let map = (0..d.var_count())
                .map(|u| d.values(u).next().expect("solved domains are singletons"))
                .collect();
            HomOutcome::Found(Hom::new(map))
        }
        Step::Dead => HomOutcome::NotFound,
        Step::OutOfBudget => HomOutcome::BudgetExceeded,
    };
    (outcome, search.nodes)
}

impl Search<'_> {
    fn descend(&mut self, domains: Domains) -> Step {
        let Some(u) = (0..domains.var_count())
            .map(|u| (domains.len(u), u))
            .filter(|&(len, _)| len > 1)
            .min()
            .map(|(_, u)| u)
        else {
            // every domain is a singleton and arc consistent, so the
            // singletons already form a homomorphism
            return Step::Solved(domains);
        };
        for x in domains.values(u).collect::<Vec<_>>() {
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            let mut next = domains.clone();
            next.assign(u, x);
            if !propagate(self.source, &self.index, &mut next, &[u]) {
                continue;
            }
            match self.descend(next) {
                Step::Dead => {}
                done => return done,
            }
        }
        Step::Dead
    }
}
