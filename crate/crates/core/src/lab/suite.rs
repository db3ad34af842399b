//! Seeded sweeps and the ten-criterion acceptance suite.

use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::chromatic_number;
use crate::constructions::{complete, interleaved_adjoint, tournament};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hom::{arc_consistency, brute_force_hom_bounded, hom_exists, AcOutcome, HomProblem};

use super::generate::{all_digraphs_up_to, all_oriented_trees, random_digraph, random_small, rng};
use super::report::{aggregate, ReportBuilder, Verdict, VerifyReport};
use super::*;

/// Runs `check` on every instance in parallel and folds the reports in
/// instance order.
fn sweep<T: Sync>(
    claim: &str,
    seed: Option<u64>,
    instances: &[T],
    check: impl Fn(&T) -> Result<VerifyReport> + Sync + Send,
) -> Result<VerifyReport> {
    let reports = instances
        .par_iter()
        .map(check)
        .collect::<Result<Vec<_>>>()?;
    Ok(aggregate(claim, seed, reports))
}

fn random_loopless(r: &mut impl Rng, max_n: usize) -> Digraph {
    random_small(r, max_n, 0.0)
}

pub fn sweep_gencol(count: usize, k: usize, seed: u64, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut r = rng(seed);
    let graphs: Vec<Digraph> = (0..count).map(|_| random_loopless(&mut r, 5)).collect();
    sweep("gencol", Some(seed), &graphs, |g| verify_gencol(g, k, cfg))
}

pub fn sweep_adjunction(count: usize, seed: u64, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut r = rng(seed);
    let cases: Vec<(Digraph, Digraph, usize)> = (0..count)
        .map(|_| {
            let g = random_small(&mut r, 4, 0.15);
            let h = random_small(&mut r, 4, 0.15);
            (g, h, r.gen_range(1..=3))
        })
        .collect();
    sweep("adjunction", Some(seed), &cases, |(g, h, k)| {
        verify_adjunction(g, h, *k, cfg)
    })
}

pub fn sweep_finobs(
    count: usize,
    n: usize,
    k: usize,
    seed: u64,
    cfg: &LabConfig,
) -> Result<VerifyReport> {
    let mut r = rng(seed);
    let graphs: Vec<Digraph> = (0..count).map(|_| random_small(&mut r, 5, 0.1)).collect();
    sweep("finobs", Some(seed), &graphs, |g| {
        verify_finobs(g, n, k, cfg)
    })
}

pub fn exhaustive_finobs(
    max_n: usize,
    n: usize,
    k: usize,
    cfg: &LabConfig,
) -> Result<VerifyReport> {
    let graphs: Vec<Digraph> = all_digraphs_up_to(max_n, true).collect();
    sweep("finobs", None, &graphs, |g| verify_finobs(g, n, k, cfg))
}

pub fn sweep_duality_tree(
    t: &Digraph,
    count: usize,
    seed: u64,
    cfg: &LabConfig,
) -> Result<VerifyReport> {
    let mut r = rng(seed);
    let graphs: Vec<Digraph> = (0..count).map(|_| random_small(&mut r, 5, 0.1)).collect();
    let mut report = verify_duality_tree(t, &graphs, cfg)?;
    report.seed = Some(seed);
    Ok(report)
}

pub fn sweep_mulpath(count: usize, seed: u64, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut r = rng(seed);
    let cases: Vec<(Vec<Digraph>, usize)> = (0..count)
        .map(|_| {
            let a = random_small(&mut r, 4, 0.1);
            let b = random_small(&mut r, 4, 0.1);
            (vec![a, b], r.gen_range(0..=3))
        })
        .collect();
    sweep("mulpath", Some(seed), &cases, |(f, n)| {
        verify_mulpath(f, *n, cfg)
    })
}

pub fn sweep_hompath(count: usize, seed: u64, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut r = rng(seed);
    let cases: Vec<(Digraph, usize)> = (0..count)
        .map(|_| (random_small(&mut r, 4, 0.1), r.gen_range(0..=3)))
        .collect();
    sweep("hompath", Some(seed), &cases, |(g, n)| {
        verify_hompath(g, *n, cfg)
    })
}

/// Loopless digraphs on 4 to 7 vertices whose chromatic number is at least 4.
pub fn random_four_chromatic(count: usize, seed: u64, cfg: &LabConfig) -> Vec<Digraph> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = r.gen_range(4..=7);
        let g = random_digraph(&mut r, n, 0.7, 0.0);
        if matches!(chromatic_number(&g, cfg.chi_limit).map(|o| o.chi()), Ok(Some(c)) if c >= 4) {
            out.push(g);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Reduced random sample counts.
    Quick,
    /// Sample counts as stated in the criteria.
    Full,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::InvalidParameter(format!("unknown profile {s:?}"))),
        }
    }
}

impl Profile {
    fn pick(self, quick: usize, full: usize) -> usize {
        match self {
            Profile::Quick => quick,
            Profile::Full => full,
        }
    }
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub limit_ms: Option<u64>,
}

pub const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        title: "chi of iota_k(T_n) is ceil(n/k), k <= 3, 2k <= n <= 8",
        limit_ms: Some(60_000),
    },
    Criterion {
        id: 2,
        title: "iota_k(T_3k): formula colouring, induced T_3, chi = 3",
        limit_ms: None,
    },
    Criterion {
        id: 3,
        title: "gencol sandwich and witness maps, plus tightness cases",
        limit_ms: None,
    },
    Criterion {
        id: 4,
        title: "adjunction: existence and witness conversion",
        limit_ms: None,
    },
    Criterion {
        id: 5,
        title: "finobs over all digraphs with <= 3 vertices",
        limit_ms: None,
    },
    Criterion {
        id: 6,
        title: "tree duality: trees <= 4 arcs vs digraphs <= 3 vertices",
        limit_ms: None,
    },
    Criterion {
        id: 7,
        title: "steep path of algebraic length 4 and its consequence",
        limit_ms: Some(600_000),
    },
    Criterion {
        id: 8,
        title: "h(1) = 3 and certified h(2)",
        limit_ms: Some(300_000),
    },
    Criterion {
        id: 9,
        title: "B(n,k) and K_{n/k} map both ways",
        limit_ms: None,
    },
    Criterion {
        id: 10,
        title: "engine vs brute force; arc consistency decides adjoint targets",
        limit_ms: None,
    },
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: String,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
    pub limit_ms: Option<u64>,
    pub report: VerifyReport,
}

impl CriterionOutcome {
    /// One-line summary, e.g. `[PASS] criterion 1: ...`.
    pub fn line(&self) -> String {
        let limit = self
            .limit_ms
            .map(|l| format!(" (limit {l} ms)"))
            .unwrap_or_default();
        format!(
            "[{}] criterion {}: {} in {} ms{}",
            self.verdict, self.id, self.title, self.elapsed_ms, limit
        )
    }

    pub fn clear_timing(&mut self) {
        self.elapsed_ms = 0;
        self.report.clear_timing();
    }
}

fn group(claim: &str, parts: Vec<VerifyReport>) -> VerifyReport {
    aggregate(claim, None, parts)
}

fn with_fact(mut r: VerifyReport, label: &str, value: impl Serialize) -> VerifyReport {
    let mut b = ReportBuilder::new(&r.claim);
    b.fact(label, value);
    r.witnesses.extend(b.finish(Verdict::Pass).witnesses);
    r
}

pub fn run_criterion(
    id: u8,
    profile: Profile,
    seed: u64,
    cfg: &LabConfig,
) -> Result<CriterionOutcome> {
    let spec = CRITERIA
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::InvalidParameter(format!("no criterion {id}")))?;
    let seed = seed.wrapping_add(u64::from(id));
    let started = Instant::now();
    let report = match id {
        1 => {
            let cases: Vec<(usize, usize)> = (1..=3)
                .flat_map(|k| (2 * k..=8).map(move |n| (n, k)))
                .collect();
            sweep("chick", None, &cases, |&(n, k)| verify_chick(n, k, cfg))?
        }
        2 => sweep("chi3k", None, &[1, 2, 3], |&k| verify_chi3k(k, cfg))?,
        3 => group(
            "gencol",
            vec![
                sweep_gencol(profile.pick(30, 100), 2, seed, cfg)?,
                verify_gencol_lower_tight(&complete(4), 2, cfg)?,
                verify_gencol(&complete(3), 2, cfg)?,
            ],
        ),
        4 => sweep_adjunction(profile.pick(60, 200), seed, cfg)?,
        5 => group(
            "finobs",
            vec![
                exhaustive_finobs(3, 3, 2, cfg)?,
                exhaustive_finobs(3, 4, 2, cfg)?,
            ],
        ),
        6 => {
            let trees = all_oriented_trees(4);
            let sources: Vec<Digraph> = all_digraphs_up_to(3, true).collect();
            let r = sweep("duality-tree", None, &trees, |t| {
                verify_duality_tree(t, &sources, cfg)
            })?;
            with_fact(r, "sources", sources.len())
        }
        7 => criterion_steep(profile, seed, cfg)?,
        8 => criterion_h(cfg)?,
        9 => sweep(
            "yz-both-ways",
            None,
            &[(4, 2), (5, 2), (6, 2), (6, 3)],
            |&(n, k)| verify_yz(n, k, cfg),
        )?,
        10 => group(
            "oracle",
            vec![
                oracle_equivalence(profile.pick(150, 500), seed, cfg),
                width_one(profile.pick(60, 300), seed, cfg),
            ],
        ),
        _ => unreachable!("criterion ids are 1..=10"),
    };
    let elapsed_ms = started.elapsed().as_millis() as u64;
    let in_time = spec.limit_ms.is_none_or(|l| elapsed_ms <= l);
    let verdict = if in_time {
        report.verdict
    } else {
        Verdict::Fail
    };
    Ok(CriterionOutcome {
        id,
        title: spec.title.to_owned(),
        verdict,
        elapsed_ms,
        limit_ms: spec.limit_ms,
        report,
    })
}

fn criterion_steep(profile: Profile, seed: u64, cfg: &LabConfig) -> Result<VerifyReport> {
    let (steep, q) = verify_steep_path(4, cfg)?;
    let Some(q) = q else {
        return Ok(steep);
    };
    let mut samples = vec![complete(4), tournament(4)];
    samples.extend(random_four_chromatic(profile.pick(5, 20), seed, cfg));
    let consequence = verify_steep_consequence(&q.path, &samples, cfg)?;
    let all_checked = consequence.fact("checked") == Some(&samples.len().into());
    let r = group("steep", vec![steep, consequence]);
    let mut r = with_fact(r, "all_samples_checked", all_checked);
    if !all_checked {
        r.verdict = r.verdict.and(Verdict::Fail);
    }
    Ok(r)
}

fn criterion_h(cfg: &LabConfig) -> Result<VerifyReport> {
    let (h1, t1) = verify_h_function(1, cfg)?;
    let (h2, t2) = verify_h_function(2, cfg)?;
    let h1_is_three = t1.as_ref().map(|t| t.value) == Some(3);
    let rows_ok = t2.as_ref().is_some_and(|t| t.rows.len() == 7);
    let mut r = group("h-function", vec![h1, h2]);
    r = with_fact(r, "h1", t1.map(|t| t.value));
    r = with_fact(r, "h2", t2.map(|t| t.value));
    if !(h1_is_three && rows_ok) {
        r.verdict = r.verdict.and(Verdict::Fail);
    }
    Ok(r)
}

/// `hom_exists` against the exhaustive oracle on random pairs.
pub fn oracle_equivalence(count: usize, seed: u64, cfg: &LabConfig) -> VerifyReport {
    let mut r = rng(seed);
    let pairs: Vec<(Digraph, Digraph)> = (0..count)
        .map(|_| (random_small(&mut r, 4, 0.15), random_small(&mut r, 4, 0.15)))
        .collect();
    let reports: Vec<VerifyReport> = pairs
        .par_iter()
        .map(|(g, h)| {
            let mut b = ReportBuilder::new("oracle-equivalence");
            b.graph_param("G", g).graph_param("H", h);
            let engine = hom_exists(g, h, cfg.hom_budget).exists();
            let oracle = brute_force_hom_bounded(g, h, cfg.brute_force_limit).map(|w| w.is_some());
            b.fact("engine", engine);
            let verdict = match (engine, oracle) {
                (Some(e), Ok(o)) => {
                    b.fact("oracle", o);
                    Verdict::from_bool(e == o)
                }
                _ => Verdict::Indeterminate,
            };
            b.finish(verdict)
        })
        .collect();
    aggregate("oracle-equivalence", Some(seed), reports)
}

/// Arc consistency alone decides `G → ι_k(T_n)` for `n ≤ 6`, `k ≤ 2`: every
/// source with at most three vertices, and `count` random sources with four
/// to six vertices. Ground truth is brute force where it fits, otherwise the
/// complete search.
pub fn width_one(count: usize, seed: u64, cfg: &LabConfig) -> VerifyReport {
    let mut r = rng(seed);
    let mut sources: Vec<Digraph> = all_digraphs_up_to(3, true).collect();
    sources.extend((0..count).map(|_| {
        let n = r.gen_range(4..=6);
        let p = r.gen_range(0.15..0.6);
        random_digraph(&mut r, n, p, 0.05)
    }));
    let targets: Vec<Digraph> = (1..=2)
        .flat_map(|k| (1..=6).map(move |n| interleaved_adjoint(&tournament(n), k).expect("small")))
        .collect();
    let mut report = width_one_check(&targets, &sources, cfg);
    report.seed = Some(seed);
    report
}

/// For each target, whether the arc-consistency filter alone gets every
/// source right.
pub fn width_one_check(targets: &[Digraph], sources: &[Digraph], cfg: &LabConfig) -> VerifyReport {
    let reports: Vec<VerifyReport> = targets
        .par_iter()
        .map(|t| {
            let mut b = ReportBuilder::new("width-one");
            b.param("target", t.name().unwrap_or("?"))
                .param("sources", sources.len());
            let mut verdict = Verdict::Pass;
            let mut checked = 0;
            for g in sources {
                let ac = !matches!(arc_consistency(&HomProblem::new(g, t, 0)), AcOutcome::Unsat);
                let truth = match brute_force_hom_bounded(g, t, cfg.brute_force_limit) {
                    Ok(w) => Some(w.is_some()),
                    Err(_) => hom_exists(g, t, cfg.hom_budget).exists(),
                };
                match truth {
                    Some(x) if x == ac => checked += 1,
                    Some(_) => {
                        b.digraph("counterexample", g).fact("arc_consistent", ac);
                        verdict = Verdict::Fail;
                        break;
                    }
                    None => verdict = verdict.and(Verdict::Indeterminate),
                }
            }
            b.fact("checked", checked);
            b.finish(verdict)
        })
        .collect();
    let checked: u64 = reports
        .iter()
        .filter_map(|r| r.fact("checked").and_then(|v| v.as_u64()))
        .sum();
    with_fact(
        aggregate("width-one", None, reports),
        "pairs_checked",
        checked,
    )
}

/// Runs the selected criteria concurrently and returns them in id order.
pub fn run_suite(
    ids: &[u8],
    profile: Profile,
    seed: u64,
    cfg: &LabConfig,
) -> Result<Vec<CriterionOutcome>> {
    ids.par_iter()
        .map(|&id| run_criterion(id, profile, seed, cfg))
        .collect()
}

/// [`run_suite`] on a dedicated pool of `threads` workers.
pub fn run_suite_with_threads(
    ids: &[u8],
    profile: Profile,
    seed: u64,
    cfg: &LabConfig,
    threads: usize,
) -> Result<Vec<CriterionOutcome>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    pool.install(|| run_suite(ids, profile, seed, cfg))
}
