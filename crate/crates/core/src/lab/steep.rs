//! Paths of prescribed algebraic length mapping into every digraph of
//! chromatic number at least four.
//!
//! For `ℓ ≤ 3` the directed path `P_ℓ` already works. For larger `ℓ` take
//! `k = ℓ - 2`: a path maps into every member of `𝒫_{3k,k-1}` exactly when
//! it maps into their product, so a climb to level `ℓ` inside the implicit
//! product yields the path together with one map per member.

use serde::Serialize;

use crate::constructions::{
    algebraic_length, categorical_product, path, path_family, AdjacencyOracle, OrientedPath,
    PathFamily,
};
use crate::digraph::{validate_hom, Digraph, Hom};
use crate::error::{Error, Result};

use super::leveled::shortest_climb;
use super::report::{ReportBuilder, Verdict, VerifyReport};
use super::util::{conclude, decide, exact_chi, Step};
use super::LabConfig;

#[derive(Clone, Debug)]
pub struct SteepPath {
    pub ell: usize,
    pub path: OrientedPath,
    /// `𝒫_{3k,k-1}` with `k = ℓ - 2`; absent when `ℓ ≤ 3`.
    pub family: Option<PathFamily>,
    /// One map into each family member, in family order.
    pub homs: Vec<Hom>,
    /// Product vertices searched, times `ℓ + 1` levels.
    pub states: usize,
}

#[derive(Serialize)]
struct Summary<'a> {
    ell: usize,
    path: String,
    arcs: usize,
    states: usize,
    homs: Vec<&'a [usize]>,
}

impl SteepPath {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&Summary {
            ell: self.ell,
            path: self.path.to_string(),
            arcs: self.path.arc_count(),
            states: self.states,
            homs: self.homs.iter().map(|h| h.map.as_slice()).collect(),
        })
        .expect("serializable")
    }
}

/// Searches for `Q_ℓ`. `Ok(None)` means no climb exists in the product,
/// which would contradict the existence result.
pub fn find_steep_path(ell: usize, cfg: &LabConfig) -> Result<Option<SteepPath>> {
    if ell == 0 {
        return Err(Error::InvalidParameter(
            "algebraic length must be at least 1".into(),
        ));
    }
    if ell <= 3 {
        return Ok(Some(SteepPath {
            ell,
            path: OrientedPath::forward(ell),
            family: None,
            homs: Vec::new(),
            states: 0,
        }));
    }
    if ell > cfg.max_steep_length {
        return Err(Error::SizeGuard {
            what: "steep path length",
            size: ell as u128,
            limit: cfg.max_steep_length as u128,
        });
    }
    let k = ell - 2;
    let family = path_family(3 * k, k - 1)?;
    let factors: Vec<Digraph> = family
        .members
        .iter()
        .map(OrientedPath::as_digraph)
        .collect();
    let states = factors
        .iter()
        .try_fold(ell as u128 + 1, |acc, f| {
            acc.checked_mul(f.vertex_count() as u128)
        })
        .unwrap_or(u128::MAX);
    if states > cfg.max_climb_states as u128 {
        return Err(Error::SizeGuard {
            what: "climb states",
            size: states,
            limit: cfg.max_climb_states as u128,
        });
    }
    let product = categorical_product(factors, cfg.product_threshold)?;
    let Some(climb) = shortest_climb(&product, ell) else {
        return Ok(None);
    };
    let homs = (0..family.len())
        .map(|i| Hom::new(climb.walk.iter().map(|&v| product.project(v, i)).collect()))
        .collect();
    Ok(Some(SteepPath {
        ell,
        path: climb.path,
        family: Some(family),
        homs,
        states: product.vertex_count() * (ell + 1),
    }))
}

/// `al(Q) = ℓ`, each map into a family member validates, and `Q ↛ P_{ℓ-1}`.
pub fn verify_steep_path(ell: usize, cfg: &LabConfig) -> Result<(VerifyReport, Option<SteepPath>)> {
    let mut b = ReportBuilder::new("steep-path");
    b.param("ell", ell);
    let mut found = None;
    let outcome = (|| -> Step<Verdict> {
        let Some(q) = find_steep_path(ell, cfg)? else {
            b.note("search", "no climb exists in the product of the family");
            return Ok(Verdict::Fail);
        };
        let qg = q.path.as_digraph();
        let al = algebraic_length(&q.path);
        b.path("Q", &q.path)
            .fact("algebraic_length", al)
            .fact("arcs", q.path.arc_count())
            .fact("states", q.states);
        let mut ok = al == ell;
        if let Some(family) = &q.family {
            let mut valid = 0;
            for (p, h) in family.members.iter().zip(&q.homs) {
                let pg = p.as_digraph();
                if validate_hom(h, &qg, &pg)? {
                    valid += 1;
                }
                b.hom(&format!("into {p}"), h, &qg, &pg);
            }
            b.fact("members", family.len()).fact("valid_homs", valid);
            ok &= valid == family.len() && q.homs.len() == family.len();
        }
        let below = decide(&qg, &path(ell - 1), cfg)?;
        b.fact("maps_below", below.is_some());
        ok &= below.is_none();
        found = Some(q);
        Ok(Verdict::from_bool(ok))
    })();
    let report = conclude(b, outcome)?;
    Ok((report, found))
}

/// `Q → G` for every sample with `χ(G) ≥ 4`; other samples are skipped.
pub fn verify_steep_consequence(
    q: &OrientedPath,
    samples: &[Digraph],
    cfg: &LabConfig,
) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("steep-consequence");
    b.param("Q", q.to_string()).param("samples", samples.len());
    let outcome = (|| {
        let qg = q.as_digraph();
        let mut checked = 0;
        let mut skipped = 0;
        for (i, g) in samples.iter().enumerate() {
            if !g.is_loopless() || exact_chi(g, cfg)?.chi < 4 {
                skipped += 1;
                continue;
            }
            checked += 1;
            match decide(&qg, g, cfg)? {
                Some(h) => {
                    b.hom(&format!("sample {i}"), &h, &qg, g);
                }
                None => {
                    b.digraph("counterexample", g);
                    return Ok(Verdict::Fail);
                }
            }
        }
        b.fact("checked", checked).fact("skipped", skipped);
        Ok(if checked == 0 {
            Verdict::Skipped
        } else {
            Verdict::Pass
        })
    })();
    conclude(b, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, tournament};

    #[test]
    fn short_lengths_are_directed_paths() {
        let cfg = LabConfig::default();
        for ell in 1..=3 {
            let q = find_steep_path(ell, &cfg).unwrap().unwrap();
            assert_eq!(q.path, OrientedPath::forward(ell));
            let (r, _) = verify_steep_path(ell, &cfg).unwrap();
            assert_eq!(r.verdict, Verdict::Pass);
        }
        assert!(find_steep_path(0, &cfg).is_err());
        assert!(find_steep_path(5, &cfg).unwrap_err().is_guard());
    }

    #[test]
    fn consequence_skips_low_chromatic_samples() {
        let cfg = LabConfig::default();
        let q = OrientedPath::forward(3);
        let r = verify_steep_consequence(&q, &[complete(3)], &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
        let r = verify_steep_consequence(&q, &[complete(4), tournament(4)], &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }
}
