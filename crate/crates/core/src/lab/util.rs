use crate::chromatic::{check_colouring, chromatic_number_with_budget, ColouringResult};
use crate::constructions::complete;
use crate::digraph::{validate_hom, Digraph, Hom};
use crate::error::{Error, Result};
use crate::hom::{brute_force_hom_bounded, hom_search, Domains, HomOutcome, HomProblem};

use super::report::{ReportBuilder, Verdict, VerifyReport};
use super::LabConfig;

/// Why a check stopped before reaching its own verdict.
#[derive(Debug)]
pub(crate) enum Halt {
    /// A size guard or budget ran out.
    Guard(Error),
    /// Bad parameters; surfaced to the caller as an error.
    Invalid(Error),
    /// Two independent procedures disagreed.
    Disagreement(String),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        if e.is_guard() {
            Halt::Guard(e)
        } else {
            Halt::Invalid(e)
        }
    }
}

pub(crate) type Step<T> = std::result::Result<T, Halt>;

pub(crate) fn conclude(mut b: ReportBuilder, outcome: Step<Verdict>) -> Result<VerifyReport> {
    match outcome {
        Ok(v) => Ok(b.finish(v)),
        Err(Halt::Guard(e)) => {
            b.note("guard", e.to_string());
            Ok(b.finish(Verdict::Indeterminate))
        }
        Err(Halt::Disagreement(msg)) => {
            b.note("disagreement", msg);
            Ok(b.finish(Verdict::Fail))
        }
        Err(Halt::Invalid(e)) => Err(e),
    }
}

/// Decides `g → h` with the engine. A found map is re-validated, and when
/// the instance is small the exhaustive oracle must agree.
pub(crate) fn decide(g: &Digraph, h: &Digraph, cfg: &LabConfig) -> Step<Option<Hom>> {
    settle(HomProblem::new(g, h, cfg.hom_budget), cfg)
}

/// `g → K_m`. All colours are interchangeable, so the vertices of a greedy
/// clique of `g` may be pinned to colours `0, 1, …` before searching.
pub(crate) fn decide_complete(g: &Digraph, m: usize, cfg: &LabConfig) -> Step<Option<Hom>> {
    let km = complete(m);
    let clique = greedy_clique(g);
    let sets: Vec<Vec<usize>> = g
        .vertices()
        .map(|u| match clique.iter().take(m).position(|&c| c == u) {
            Some(i) => vec![i],
            None => (0..m).collect(),
        })
        .collect();
    let problem = HomProblem {
        source: g,
        target: &km,
        domains: Domains::from_sets(m, &sets),
        budget: cfg.hom_budget,
    };
    settle(problem, cfg)
}

fn greedy_clique(g: &Digraph) -> Vec<usize> {
    let s = g.symmetrize();
    let Some(start) = s
        .vertices()
        .filter(|&u| !s.has_loop(u))
        .max_by_key(|&u| (s.out_neighbors(u).len(), std::cmp::Reverse(u)))
    else {
        return Vec::new();
    };
    let mut clique = vec![start];
    let mut cand: Vec<usize> = s
        .out_neighbors(start)
        .iter()
        .copied()
        .filter(|&v| v != start)
        .collect();
    cand.sort_by_key(|&v| (std::cmp::Reverse(s.out_neighbors(v).len()), v));
    for v in cand {
        if !s.has_loop(v) && clique.iter().all(|&c| s.has_arc(c, v)) {
            clique.push(v);
        }
    }
    clique
}

fn settle(problem: HomProblem<'_>, cfg: &LabConfig) -> Step<Option<Hom>> {
    let (g, h) = (problem.source, problem.target);
    let found = match hom_search(problem).0 {
        HomOutcome::Found(f) => Some(f),
        HomOutcome::NotFound => None,
        HomOutcome::BudgetExceeded => {
            return Err(Halt::Guard(Error::BudgetExceeded(cfg.hom_budget)))
        }
    };
    if let Some(f) = &found {
        if !validate_hom(f, g, h)? {
            return Err(Halt::Disagreement("engine returned an invalid map".into()));
        }
    }
    if cfg.cross_check {
        if let Ok(oracle) = brute_force_hom_bounded(g, h, cfg.brute_force_limit) {
            if oracle.is_some() != found.is_some() {
                return Err(Halt::Disagreement(format!(
                    "engine and brute force disagree on {} -> {}",
                    g.to_json(),
                    h.to_json()
                )));
            }
        }
    }
    Ok(found)
}

/// Exact χ with a checked colouring. Loops make χ undefined: `Invalid`.
pub(crate) fn exact_chi(g: &Digraph, cfg: &LabConfig) -> Step<ColouringResult> {
    let outcome = chromatic_number_with_budget(g, cfg.chi_limit, cfg.colouring_budget)?;
    let r = outcome
        .exact()
        .cloned()
        .ok_or(Halt::Guard(Error::SizeGuard {
            what: "chromatic number",
            size: cfg.chi_limit as u128 + 1,
            limit: cfg.chi_limit as u128,
        }))?;
    if !check_colouring(g, &r.colouring) || r.colouring.iter().any(|&c| c >= r.chi) {
        return Err(Halt::Disagreement(
            "solver returned an improper colouring".into(),
        ));
    }
    Ok(r)
}

/// Independent certificate that χ is exact: a proper χ-colouring plus
/// either a validated χ-clique or a refuted map into `K_{χ-1}`.
pub(crate) fn certify_chi(
    b: &mut ReportBuilder,
    label: &str,
    g: &Digraph,
    r: &ColouringResult,
    cfg: &LabConfig,
) -> Step<bool> {
    let colours_ok = check_colouring(g, &r.colouring) && r.colouring.iter().all(|&c| c < r.chi);
    let lower_ok = match &r.clique {
        Some(c) if c.len() == r.chi => {
            let s = g.symmetrize();
            let ok = c
                .iter()
                .enumerate()
                .all(|(i, &u)| c[i + 1..].iter().all(|&v| s.has_arc(u, v)));
            b.fact(&format!("{label}_clique"), c);
            ok
        }
        _ if r.chi == 0 => g.vertex_count() == 0,
        _ => {
            let refused = decide_complete(g, r.chi - 1, cfg)?.is_none();
            b.fact(&format!("{label}_refuted_below"), refused);
            refused
        }
    };
    b.colouring(&format!("{label}_colouring"), g, &r.colouring);
    Ok(colours_ok && lower_ok)
}
