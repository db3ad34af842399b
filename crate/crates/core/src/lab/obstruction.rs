//! Path obstructions for maps into `ι_k(T_n)`.

use crate::constructions::{
    interleaved_adjoint_bounded, inverse_interleaved_adjoint, path, path_family, tournament,
    Direction, OrientedPath, PathFamily,
};
use crate::digraph::{validate_hom, Digraph, Hom};
use crate::error::{Error, Result};

use super::report::{ReportBuilder, Verdict, VerifyReport};
use super::util::{conclude, decide, exact_chi, Halt, Step};
use super::LabConfig;

/// First family member with a map into `g`, in family order.
fn first_member_into(
    family: &PathFamily,
    g: &Digraph,
    cfg: &LabConfig,
) -> Step<Option<(usize, Hom)>> {
    for (i, p) in family.members.iter().enumerate() {
        if let Some(h) = decide(&p.as_digraph(), g, cfg)? {
            return Ok(Some((i, h)));
        }
    }
    Ok(None)
}

/// Copy index along a path: 0 at the start, up by one after each backward
/// arc.
fn copy_levels(p: &OrientedPath) -> Vec<usize> {
    let mut f = vec![0];
    for d in p.dirs() {
        let last = *f.last().expect("non-empty");
        f.push(last + usize::from(*d == Direction::Backward));
    }
    f
}

/// `P → G` lifts to `P_n → ι_k*(G)` by `i ↦ (φ(i), f(i))`.
fn lift(p: &OrientedPath, phi: &Hom, k: usize) -> Hom {
    Hom::new(
        copy_levels(p)
            .into_iter()
            .zip(&phi.map)
            .map(|(c, &u)| u * k + c)
            .collect(),
    )
}

/// Reads a member of the family off a map `P_n → ι_k*(G)`: the arc at
/// position `i` is reversed exactly when the copy index goes up there.
fn unlift(psi: &Hom, k: usize) -> (OrientedPath, Hom) {
    let copies: Vec<usize> = psi.map.iter().map(|&w| w % k).collect();
    let dirs = copies
        .windows(2)
        .map(|w| {
            if w[1] > w[0] {
                Direction::Backward
            } else {
                Direction::Forward
            }
        })
        .collect();
    let projection = Hom::new(psi.map.iter().map(|&w| w / k).collect());
    (OrientedPath::new(dirs), projection)
}

/// No map `G → ι_k(T_n)` exists iff some member of `𝒫_{n,k-1}` maps to `G`.
/// Both constructions from the argument are replayed and validated.
pub fn verify_finobs(g: &Digraph, n: usize, k: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("finobs");
    b.graph_param("G", g).param("n", n).param("k", k);
    let outcome = (|| {
        if k == 0 {
            return Err(Halt::Invalid(Error::InvalidParameter(
                "k must be at least 1".into(),
            )));
        }
        let family = path_family(n, k - 1)?;
        let target = interleaved_adjoint_bounded(&tournament(n), k, cfg.vertex_limit)?;
        let star = inverse_interleaved_adjoint(g, k)?;
        let into_target = decide(g, &target, cfg)?;
        let member = first_member_into(&family, g, cfg)?;
        let no_map = into_target.is_none();
        b.fact("no_map_to_target", no_map)
            .fact("member_maps", member.is_some());
        let mut ok = no_map == member.is_some();

        if let Some(phi) = &into_target {
            // the adjoint transpose ι_k*(G) → T_n
            let psi = Hom::new(
                star.vertices()
                    .map(|w| target.label(phi.map[w / k]).expect("tuple labels")[w % k])
                    .collect(),
            );
            let valid = validate_hom(&psi, &star, &tournament(n))?;
            b.hom("map_to_target", phi, g, &target)
                .fact("transpose_valid", valid);
            ok &= valid;
        }
        if let Some((i, phi)) = &member {
            let p = &family.members[*i];
            let lifted = lift(p, phi, k);
            let valid = validate_hom(&lifted, &path(n), &star)?;
            b.path("member", p)
                .hom("member_map", phi, &p.as_digraph(), g)
                .hom("lift", &lifted, &path(n), &star)
                .fact("lift_valid", valid);
            ok &= valid;
        }
        if no_map {
            // ι_k*(G) ↛ T_n, so P_n maps into it; read a member off that map
            match decide(&path(n), &star, cfg)? {
                Some(psi) => {
                    let (p, projection) = unlift(&psi, k);
                    let in_family = p.reversal_count() < k && p.arc_count() == n;
                    let valid = validate_hom(&projection, &p.as_digraph(), g)?;
                    b.path("read_off", &p)
                        .fact("read_off_in_family", in_family)
                        .fact("read_off_valid", valid);
                    ok &= in_family && valid;
                }
                None => {
                    b.note("read_off", "P_n does not map into the inverse adjoint");
                    ok = false;
                }
            }
        }
        Ok(Verdict::from_bool(ok))
    })();
    conclude(b, outcome)
}

/// If `χ(G) > c` then some member of `𝒫_{ck,k-1}` maps to `G`.
pub fn verify_minty(g: &Digraph, c: usize, k: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("minty");
    b.graph_param("G", g).param("c", c).param("k", k);
    let outcome = (|| {
        if k == 0 {
            return Err(Halt::Invalid(Error::InvalidParameter(
                "k must be at least 1".into(),
            )));
        }
        if !g.is_loopless() {
            b.note(
                "hypothesis",
                "chromatic number is undefined for digraphs with loops",
            );
            return Ok(Verdict::Skipped);
        }
        let chi = exact_chi(g, cfg)?.chi;
        b.fact("chi", chi);
        if chi <= c {
            b.note("hypothesis", format!("chi = {chi} does not exceed c = {c}"));
            return Ok(Verdict::Skipped);
        }
        let family = path_family(c * k, k - 1)?;
        match first_member_into(&family, g, cfg)? {
            Some((i, phi)) => {
                let p = &family.members[i];
                b.path("member", p)
                    .hom("member_map", &phi, &p.as_digraph(), g);
                Ok(Verdict::Pass)
            }
            None => Ok(Verdict::Fail),
        }
    })();
    conclude(b, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complete;

    fn cfg() -> LabConfig {
        LabConfig::default()
    }

    #[test]
    fn obstruction_family_examples() {
        let r = verify_finobs(&tournament(5), 4, 2, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json());
        assert_eq!(r.fact("member_maps"), Some(&true.into()));

        let target = interleaved_adjoint_bounded(&tournament(4), 2, 1 << 10).unwrap();
        let r = verify_finobs(&target, 4, 2, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json());
        assert_eq!(r.fact("member_maps"), Some(&false.into()));
    }

    #[test]
    fn lift_follows_copy_levels() {
        let p: OrientedPath = "+-+".parse().unwrap();
        assert_eq!(copy_levels(&p), vec![0, 0, 1, 1]);
        let psi = lift(&p, &Hom::new(vec![3, 4, 5, 6]), 2);
        assert_eq!(psi.map, vec![6, 8, 11, 13]);
        let (q, proj) = unlift(&psi, 2);
        assert_eq!(q, p);
        assert_eq!(proj.map, vec![3, 4, 5, 6]);
    }

    #[test]
    fn long_paths_into_high_chromatic() {
        let r = verify_minty(&complete(4), 3, 2, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(
            verify_minty(&complete(2), 1, 1, &cfg()).unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(
            verify_minty(&tournament(7), 3, 2, &cfg()).unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(
            verify_minty(&complete(3), 3, 2, &cfg()).unwrap().verdict,
            Verdict::Skipped
        );
    }
}
