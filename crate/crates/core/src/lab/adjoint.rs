//! Checks about the interleaved adjoints and their chromatic numbers.

use crate::chromatic::check_colouring;
use crate::constructions::{
    arc_graph, arc_graph_iter_bounded, b_graph, circular_complete, interleaved_adjoint_bounded,
    inverse_interleaved_adjoint, tournament,
};
use crate::digraph::{validate_hom, Digraph, Hom};
use crate::error::{Error, Result};

use super::report::{ReportBuilder, Verdict, VerifyReport};
use super::util::{certify_chi, conclude, decide, exact_chi, Halt, Step};
use super::LabConfig;

fn need_k(k: usize) -> Step<()> {
    if k == 0 {
        return Err(Halt::Invalid(Error::InvalidParameter(
            "k must be at least 1".into(),
        )));
    }
    Ok(())
}

/// The map `(u_0, …, u_{2k-2}) ↦ (u_0, u_2, …, u_{2k-2})` from the iterated
/// arc-graph into the adjoint.
fn even_positions(delta: &Digraph, iota: &Digraph) -> Hom {
    let map = delta
        .vertices()
        .map(|w| {
            let chain = delta.label(w).expect("walk labels");
            let tuple: Vec<usize> = chain.iter().step_by(2).copied().collect();
            iota.vertex_with_label(&tuple).expect("tuple vertex")
        })
        .collect();
    Hom::new(map)
}

fn first_coordinate(iota: &Digraph) -> Hom {
    Hom::new(
        iota.vertices()
            .map(|v| iota.label(v).expect("tuple labels")[0])
            .collect(),
    )
}

fn diagonal(g: &Digraph, iota: &Digraph, k: usize) -> Hom {
    Hom::new(
        g.vertices()
            .map(|u| iota.vertex_with_label(&vec![u; k]).expect("diagonal tuple"))
            .collect(),
    )
}

struct Sandwich {
    lower: usize,
    middle: usize,
    upper: usize,
}

fn gencol_body(
    b: &mut ReportBuilder,
    g: &Digraph,
    k: usize,
    cfg: &LabConfig,
) -> Step<Option<(Sandwich, Digraph, Digraph)>> {
    need_k(k)?;
    if !g.is_loopless() {
        b.note(
            "hypothesis",
            "chromatic number is undefined for digraphs with loops",
        );
        return Ok(None);
    }
    let delta = arc_graph_iter_bounded(g, 2 * k - 2, cfg.vertex_limit)?;
    let iota = interleaved_adjoint_bounded(g, k, cfg.vertex_limit)?;
    let lower = exact_chi(&delta, cfg)?.chi;
    let middle = exact_chi(&iota, cfg)?.chi;
    let upper = exact_chi(g, cfg)?.chi;
    b.fact("chi_delta", lower)
        .fact("chi_iota", middle)
        .fact("chi_g", upper);
    Ok(Some((
        Sandwich {
            lower,
            middle,
            upper,
        },
        delta,
        iota,
    )))
}

/// `χ(δ^{2k-2}(G)) ≤ χ(ι_k(G)) ≤ χ(G)` together with the two maps behind
/// it. For symmetric `G` the diagonal map `u ↦ (u, …, u)` is also checked,
/// which makes the upper bound an equality.
pub fn verify_gencol(g: &Digraph, k: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("gencol");
    b.graph_param("G", g).param("k", k);
    let outcome = (|| {
        let Some((s, delta, iota)) = gencol_body(&mut b, g, k, cfg)? else {
            return Ok(Verdict::Skipped);
        };
        let phi = even_positions(&delta, &iota);
        let psi = first_coordinate(&iota);
        let phi_ok = validate_hom(&phi, &delta, &iota)?;
        let psi_ok = validate_hom(&psi, &iota, g)?;
        b.hom("phi", &phi, &delta, &iota)
            .hom("psi", &psi, &iota, g)
            .fact("phi_valid", phi_ok)
            .fact("psi_valid", psi_ok);
        let sandwich = s.lower <= s.middle && s.middle <= s.upper;
        b.fact("sandwich", sandwich);
        let mut ok = sandwich && phi_ok && psi_ok;
        if g.is_symmetric() {
            let diag = diagonal(g, &iota, k);
            let diag_ok = validate_hom(&diag, g, &iota)?;
            b.hom("diagonal", &diag, g, &iota)
                .fact("diagonal_valid", diag_ok)
                .fact("upper_tight", s.middle == s.upper);
            ok &= diag_ok && s.middle == s.upper;
        }
        Ok(Verdict::from_bool(ok))
    })();
    conclude(b, outcome)
}

/// Lower-bound tightness for `G = δ(H)`: the arcs of `ι_k(G)` span a copy
/// of `δ^{2k-2}(G)`, so the two chromatic numbers agree. The copy is given
/// as an explicit map: a non-isolated vertex `((u_0,u_1), …, (u_{2k-2},u_{2k-1}))`
/// goes to the walk `((u_0,u_1),(u_1,u_2), …)`.
pub fn verify_gencol_lower_tight(h: &Digraph, k: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("gencol-lower-tight");
    b.graph_param("H", h).param("k", k);
    let outcome = (|| {
        let g = arc_graph(h);
        let Some((s, delta, iota)) = gencol_body(&mut b, &g, k, cfg)? else {
            return Ok(Verdict::Skipped);
        };
        let mut map = Vec::with_capacity(iota.vertex_count());
        for v in iota.vertices() {
            let arcs: Vec<&[usize]> = iota
                .label(v)
                .expect("tuple labels")
                .iter()
                .map(|&a| g.label(a).expect("arc labels"))
                .collect();
            let chained = arcs.windows(2).all(|w| h.has_arc(w[0][1], w[1][0]));
            let isolated = iota.out_neighbors(v).is_empty() && iota.in_neighbors(v).is_empty();
            if !chained {
                if !isolated {
                    return Err(Halt::Disagreement(format!(
                        "vertex {v} is neither chained nor isolated"
                    )));
                }
                map.push(0);
                continue;
            }
            let chain: Vec<usize> = arcs.iter().flat_map(|a| a.iter().copied()).collect();
            let walk: Vec<usize> = chain
                .windows(2)
                .map(|p| g.vertex_with_label(p).expect("consecutive pair is an arc"))
                .collect();
            map.push(delta.vertex_with_label(&walk).expect("walk of G"));
        }
        let copy = Hom::new(map);
        let copy_ok = delta.vertex_count() > 0 && validate_hom(&copy, &iota, &delta)?;
        b.hom("copy", &copy, &iota, &delta)
            .fact("copy_valid", copy_ok)
            .fact("lower_tight", s.lower == s.middle);
        Ok(Verdict::from_bool(
            copy_ok && s.lower == s.middle && s.middle <= s.upper,
        ))
    })();
    conclude(b, outcome)
}

/// `χ(ι_k(T_n)) = ⌈n/k⌉`, certified.
pub fn verify_chick(n: usize, k: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("chick");
    b.param("n", n).param("k", k);
    let outcome = (|| {
        need_k(k)?;
        let iota = interleaved_adjoint_bounded(&tournament(n), k, cfg.vertex_limit)?;
        let r = exact_chi(&iota, cfg)?;
        let expected = n.div_ceil(k);
        b.fact("chi", r.chi).fact("expected", expected);
        let certified = certify_chi(&mut b, "iota", &iota, &r, cfg)?;
        Ok(Verdict::from_bool(certified && r.chi == expected))
    })();
    conclude(b, outcome)
}

/// `ι_k(T_{3k})`: the colouring `⌊Σ u_i / k⌋ mod 3` is proper, the tuples
/// `(i, i+3, …, i+3(k-1))` for `i = 1, 2, 3` induce `T_3`, and χ is 3.
/// Tournament vertices are `1..=3k` here; vertex `j` is stored as `j - 1`.
pub fn verify_chi3k(k: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("chi3k");
    b.param("k", k);
    let outcome = (|| {
        need_k(k)?;
        let iota = interleaved_adjoint_bounded(&tournament(3 * k), k, cfg.vertex_limit)?;
        let colours: Vec<usize> = iota
            .vertices()
            .map(|v| {
                let sum: usize = iota
                    .label(v)
                    .expect("tuple labels")
                    .iter()
                    .map(|u| u + 1)
                    .sum();
                (sum / k) % 3
            })
            .collect();
        let formula_ok = check_colouring(&iota, &colours);
        b.colouring("formula", &iota, &colours)
            .fact("formula_proper", formula_ok);

        let triple: Vec<usize> = (0..3)
            .map(|i| {
                let tuple: Vec<usize> = (0..k).map(|j| i + 3 * j).collect();
                iota.vertex_with_label(&tuple).expect("triple tuple")
            })
            .collect();
        let induced = iota.induced(&triple)?;
        let t3_ok = induced == tournament(3);
        b.fact("triple", &triple).fact("induces_t3", t3_ok);

        let r = exact_chi(&iota, cfg)?;
        b.fact("chi", r.chi);
        let certified = certify_chi(&mut b, "iota", &iota, &r, cfg)?;
        Ok(Verdict::from_bool(
            formula_ok && t3_ok && certified && r.chi == 3,
        ))
    })();
    conclude(b, outcome)
}

/// `B(n, k) ↔ K_{n/k}` with validated maps both ways.
pub fn verify_yz(n: usize, k: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("yz-both-ways");
    b.param("n", n).param("k", k);
    let outcome = (|| {
        let bg = b_graph(n, k)?;
        let circ = circular_complete(n, k)?;
        let fwd = decide(&bg, &circ, cfg)?;
        let bwd = decide(&circ, &bg, cfg)?;
        if let Some(f) = &fwd {
            b.hom("forward", f, &bg, &circ);
        }
        if let Some(f) = &bwd {
            b.hom("backward", f, &circ, &bg);
        }
        b.fact("forward_exists", fwd.is_some())
            .fact("backward_exists", bwd.is_some());
        Ok(Verdict::from_bool(fwd.is_some() && bwd.is_some()))
    })();
    conclude(b, outcome)
}

/// `G → ι_k(H)` exists iff `ι_k*(G) → H` does, and each witness converts
/// into the other: `ψ(u_c) = φ(u)_c` and `φ(u) = (ψ(u_0), …, ψ(u_{k-1}))`.
pub fn verify_adjunction(
    g: &Digraph,
    h: &Digraph,
    k: usize,
    cfg: &LabConfig,
) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("adjunction");
    b.graph_param("G", g).graph_param("H", h).param("k", k);
    let outcome = (|| {
        need_k(k)?;
        let ih = interleaved_adjoint_bounded(h, k, cfg.vertex_limit)?;
        let sg = inverse_interleaved_adjoint(g, k)?;
        let left = decide(g, &ih, cfg)?;
        let right = decide(&sg, h, cfg)?;
        b.fact("left_exists", left.is_some())
            .fact("right_exists", right.is_some());
        let mut ok = left.is_some() == right.is_some();
        if let Some(phi) = &left {
            let psi = Hom::new(
                sg.vertices()
                    .map(|w| {
                        let (u, c) = (w / k, w % k);
                        ih.label(phi.map[u]).expect("tuple labels")[c]
                    })
                    .collect(),
            );
            let valid = validate_hom(&psi, &sg, h)?;
            b.hom("phi", phi, g, &ih)
                .hom("psi_from_phi", &psi, &sg, h)
                .fact("psi_from_phi_valid", valid);
            ok &= valid;
        }
        if let Some(psi) = &right {
            let phi = Hom::new(
                g.vertices()
                    .map(|u| {
                        let tuple: Vec<usize> = (0..k).map(|c| psi.map[u * k + c]).collect();
                        ih.vertex_with_label(&tuple).expect("tuple vertex")
                    })
                    .collect(),
            );
            let valid = validate_hom(&phi, g, &ih)?;
            b.hom("psi", psi, &sg, h)
                .hom("phi_from_psi", &phi, g, &ih)
                .fact("phi_from_psi_valid", valid);
            ok &= valid;
        }
        Ok(Verdict::from_bool(ok))
    })();
    conclude(b, outcome)
}
