use serde::Serialize;

use crate::constructions::{path_family, tournament, tree_dual_bounded, OrientedPath};
use crate::error::{Error, Result};

use super::report::{ReportBuilder, Verdict, VerifyReport};
use super::util::{conclude, decide, decide_complete, exact_chi, Step};
use super::LabConfig;

/// Largest `k` accepted by [`h_function`].
pub const H_FUNCTION_MAX_K: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct HRow {
    pub path: String,
    pub dual_vertices: usize,
    pub chi: usize,
    /// `D(P) → K_χ` found and validated.
    pub maps_to_k_chi: bool,
    /// `D(P) → K_{χ-1}` refuted.
    pub refused_below: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HTable {
    pub k: usize,
    pub value: usize,
    pub argmin: String,
    pub rows: Vec<HRow>,
}

/// `min χ(D(P))` over `P ∈ 𝒫_{3k,k-1}`, with every row certified by hom
/// decisions to complete graphs.
pub fn h_function(k: usize, cfg: &LabConfig) -> Result<HTable> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if k > H_FUNCTION_MAX_K {
        return Err(Error::SizeGuard {
            what: "h-function k",
            size: k as u128,
            limit: H_FUNCTION_MAX_K as u128,
        });
    }
    let family = path_family(3 * k, k - 1)?;
    let mut rows = Vec::with_capacity(family.len());
    for p in &family.members {
        rows.push(row(p, cfg).map_err(|halt| match halt {
            super::util::Halt::Guard(e) | super::util::Halt::Invalid(e) => e,
            super::util::Halt::Disagreement(msg) => Error::InvalidParameter(msg),
        })?);
    }
    let best = rows
        .iter()
        .min_by_key(|r| r.chi)
        .expect("families are non-empty");
    Ok(HTable {
        k,
        value: best.chi,
        argmin: best.path.clone(),
        rows,
    })
}

fn row(p: &OrientedPath, cfg: &LabConfig) -> Step<HRow> {
    let dual = tree_dual_bounded(&p.as_digraph(), cfg.dual_limit)?;
    let chi = exact_chi(&dual, cfg)?.chi;
    let maps_to_k_chi = decide_complete(&dual, chi, cfg)?.is_some();
    let refused_below = chi == 0 || decide_complete(&dual, chi - 1, cfg)?.is_none();
    Ok(HRow {
        path: p.to_string(),
        dual_vertices: dual.vertex_count(),
        chi,
        maps_to_k_chi,
        refused_below,
    })
}

/// Computes `h(k)` and checks each row's certificates. For `k = 1` the
/// single dual `D(P_3)` must also be hom-equivalent to `T_3`.
pub fn verify_h_function(k: usize, cfg: &LabConfig) -> Result<(VerifyReport, Option<HTable>)> {
    let mut b = ReportBuilder::new("h-function");
    b.param("k", k);
    let mut table = None;
    let outcome = (|| -> Step<Verdict> {
        let t = h_function(k, cfg)?;
        let mut ok = t.rows.iter().all(|r| r.maps_to_k_chi && r.refused_below);
        ok &= t.value <= 3 * k;
        b.fact("value", t.value)
            .fact("argmin", &t.argmin)
            .fact("rows", &t.rows);
        if k == 1 {
            let dual = tree_dual_bounded(&OrientedPath::forward(3).as_digraph(), cfg.dual_limit)?;
            let t3 = tournament(3);
            let fwd = decide(&dual, &t3, cfg)?;
            let bwd = decide(&t3, &dual, cfg)?;
            b.fact("equivalent_to_t3", fwd.is_some() && bwd.is_some());
            ok &= fwd.is_some() && bwd.is_some();
        }
        table = Some(t);
        Ok(Verdict::from_bool(ok))
    })();
    Ok((conclude(b, outcome)?, table))
}
