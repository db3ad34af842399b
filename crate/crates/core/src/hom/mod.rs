//! Homomorphism decision and witness search.
//!
//! [`hom_exists`] runs arc consistency followed by backtracking that keeps
//! the domains arc consistent after every assignment. For targets of width
//! one (those with tree duality) the initial filtering already decides the
//! question and the search never backtracks. [`brute_force_hom`] is an
//! independent exhaustive oracle for tiny instances.

mod brute;
mod consistency;
mod domains;
mod search;

use serde::Serialize;

use crate::constructions::ProductSpec;
use crate::digraph::{validate_hom, Digraph, Hom};

pub use brute::{brute_force_hom, brute_force_hom_bounded, BRUTE_FORCE_LIMIT};
pub use consistency::{arc_consistency, AcOutcome, HomProblem};
pub use domains::Domains;

/// Node-expansion budget used when none is given.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomOutcome {
    Found(Hom),
    /// Search space exhausted: no homomorphism exists.
    NotFound,
    /// Budget ran out first; nothing is claimed.
    BudgetExceeded,
}

impl HomOutcome {
    pub fn exists(&self) -> Option<bool> {
        match self {
            HomOutcome::Found(_) => Some(true),
            HomOutcome::NotFound => Some(false),
            HomOutcome::BudgetExceeded => None,
        }
    }

    pub fn witness(&self) -> Option<&Hom> {
        match self {
            HomOutcome::Found(h) => Some(h),
            _ => None,
        }
    }

    pub fn into_witness(self) -> Option<Hom> {
        match self {
            HomOutcome::Found(h) => Some(h),
            _ => None,
        }
    }

    /// Machine form: `{"result": "found", "map": [...], "labels": [...]}`,
    /// with `labels` only when the target carries a label table.
    pub fn to_json(&self, target: Option<&Digraph>) -> serde_json::Value {
        #[derive(Serialize)]
        struct Found<'a> {
            result: &'static str,
            map: &'a [usize],
            #[serde(skip_serializing_if = "Option::is_none")]
            labels: Option<Vec<&'a [usize]>>,
        }
        match self {
            HomOutcome::Found(h) => serde_json::to_value(Found {
                result: "found",
                map: &h.map,
                labels: target
                    .and_then(|t| t.labels())
                    .map(|l| h.map.iter().map(|&x| l[x].as_slice()).collect()),
            })
            .expect("serializable"),
            HomOutcome::NotFound => serde_json::json!({"result": "none"}),
            HomOutcome::BudgetExceeded => serde_json::json!({"result": "budget-exceeded"}),
        }
    }
}

/// Decides whether `g → h` exists, returning a validated witness.
pub fn hom_exists(g: &Digraph, h: &Digraph, budget: u64) -> HomOutcome {
    hom_search(HomProblem::new(g, h, budget)).0
}

/// Like [`hom_exists`] but starting from caller-restricted domains; also
/// reports the number of search nodes expanded.
pub fn hom_search(problem: HomProblem<'_>) -> (HomOutcome, u64) {
    let (outcome, nodes) = search::solve(&problem);
    if let HomOutcome::Found(hom) = &outcome {
        debug_assert!(validate_hom(hom, problem.source, problem.target).unwrap_or(false));
    }
    (outcome, nodes)
}

/// `g → Π factors`, solved one factor at a time: a map into the product is
/// exactly a tuple of maps into the factors. Witness values are tuple ranks
/// of the product.
pub fn hom_exists_product(g: &Digraph, product: &ProductSpec, budget: u64) -> HomOutcome {
    let mut coords = Vec::with_capacity(product.factors().len());
    let mut remaining = budget;
    for f in product.factors() {
        let (outcome, nodes) = hom_search(HomProblem::new(g, f, remaining.max(1)));
        remaining = remaining.saturating_sub(nodes);
        match outcome {
            HomOutcome::Found(h) => coords.push(h),
            other => return other,
        }
    }
    let map = g
        .vertices()
        .map(|u| {
            let tuple: Vec<usize> = coords.iter().map(|h| h.map[u]).collect();
            product.index(&tuple)
        })
        .collect();
    HomOutcome::Found(Hom::new(map))
}

/// Checks a map into a product through the coordinatewise adjacency oracle.
pub fn validate_product_hom(h: &Hom, g: &Digraph, product: &ProductSpec) -> bool {
    use crate::constructions::AdjacencyOracle;
    h.map.len() == g.vertex_count()
        && h.map.iter().all(|&x| x < product.vertex_count())
        && g.arcs()
            .iter()
            .all(|&(u, v)| product.has_arc(h.map[u], h.map[v]))
}

#[derive(Clone, Debug)]
pub struct Equivalence {
    pub forward: HomOutcome,
    pub backward: HomOutcome,
}

impl Equivalence {
    /// `Some(true)` with witnesses both ways, `Some(false)` once either
    /// direction is refuted, `None` if a budget ran out before that.
    pub fn decided(&self) -> Option<bool> {
        match (self.forward.exists(), self.backward.exists()) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        }
    }
}

pub fn hom_equivalent(g: &Digraph, h: &Digraph, budget: u64) -> Equivalence {
    Equivalence {
        forward: hom_exists(g, h, budget),
        backward: hom_exists(h, g, budget),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        b_graph, categorical_product, circular_complete, complete, path, tournament, tree_dual,
    };

    #[test]
    fn basic_existence() {
        for n in 1..7 {
            let w = hom_exists(&tournament(n), &complete(n), DEFAULT_BUDGET);
            assert_eq!(w, HomOutcome::Found(Hom::identity(n)));
        }
        assert_eq!(
            hom_exists(&complete(3), &complete(2), DEFAULT_BUDGET),
            HomOutcome::NotFound
        );
    }

    #[test]
    fn directed_paths_against_tournaments() {
        for n in 1..=5 {
            let t = tournament(n);
            let w = hom_exists(&path(n - 1), &t, DEFAULT_BUDGET);
            let hom = w.witness().expect("P_{n-1} maps onto the chain of T_n");
            assert!(validate_hom(hom, &path(n - 1), &t).unwrap());
            assert_eq!(
                hom_exists(&path(n), &t, DEFAULT_BUDGET),
                HomOutcome::NotFound
            );
            assert_eq!(
                hom_exists(&path(n + 1), &t, DEFAULT_BUDGET),
                HomOutcome::NotFound
            );
        }
    }

    #[test]
    fn empty_cases() {
        let k0 = Digraph::empty(0);
        let k1 = Digraph::empty(1);
        assert!(matches!(hom_exists(&k0, &k0, 1), HomOutcome::Found(_)));
        assert_eq!(hom_exists(&k1, &k0, 1), HomOutcome::NotFound);
        assert!(matches!(
            hom_exists(&k1, &tournament(3), 1),
            HomOutcome::Found(_)
        ));
    }

    #[test]
    fn brute_force_small_cases() {
        assert_eq!(brute_force_hom(&path(2), &tournament(2)).unwrap(), None);
        assert!(brute_force_hom(&Digraph::empty(1), &tournament(2))
            .unwrap()
            .is_some());
        assert!(brute_force_hom(&path(9), &complete(8))
            .unwrap_err()
            .is_guard());
    }

    #[test]
    fn budget_exceeded_is_a_value() {
        // K_5 -> K_4 refutation needs more than one node
        assert_eq!(
            hom_exists(&complete(5), &complete(4), 2),
            HomOutcome::BudgetExceeded
        );
    }

    #[test]
    fn equivalences() {
        let t3 = tournament(3);
        assert_eq!(
            hom_equivalent(&t3, &t3, DEFAULT_BUDGET).decided(),
            Some(true)
        );
        let d = tree_dual(&path(3)).unwrap();
        assert_eq!(
            hom_equivalent(&d, &t3, DEFAULT_BUDGET).decided(),
            Some(true)
        );
        let b = b_graph(5, 2).unwrap();
        let c = circular_complete(5, 2).unwrap();
        assert_eq!(hom_equivalent(&b, &c, DEFAULT_BUDGET).decided(), Some(true));
        assert_eq!(
            hom_equivalent(&complete(3), &complete(2), DEFAULT_BUDGET).decided(),
            Some(false)
        );
    }

    #[test]
    fn product_targets_factorize() {
        let factors = vec![tournament(3), complete(2), path(3)];
        let spec = categorical_product(factors.clone(), 0).unwrap();
        let g = path(2);
        let w = hom_exists_product(&g, &spec, DEFAULT_BUDGET);
        let hom = w.witness().unwrap();
        assert!(validate_product_hom(hom, &g, &spec));

        let too_long = path(3);
        assert_eq!(
            hom_exists_product(&too_long, &spec, DEFAULT_BUDGET),
            HomOutcome::NotFound
        );
        let explicit = categorical_product(factors, 1000).unwrap();
        assert_eq!(
            hom_exists(&too_long, explicit.explicit().unwrap(), DEFAULT_BUDGET),
            HomOutcome::NotFound
        );
    }

    #[test]
    fn witness_json_decodes_labels() {
        let t = crate::constructions::interleaved_adjoint(&tournament(4), 2).unwrap();
        let w = hom_exists(&path(1), &t, DEFAULT_BUDGET);
        let json = w.to_json(Some(&t));
        assert_eq!(json["result"], "found");
        assert_eq!(json["labels"][0].as_array().unwrap().len(), 2);
        assert_eq!(
            HomOutcome::NotFound.to_json(None).to_string(),
            r#"{"result":"none"}"#
        );
    }
}
