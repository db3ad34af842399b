use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

/// Materialization threshold for categorical products, in vertices.
pub const DEFAULT_PRODUCT_THRESHOLD: usize = 200_000;

/// Neighbourhood access for digraphs that may never be stored explicitly.
pub trait AdjacencyOracle {
    fn vertex_count(&self) -> usize;
    fn has_arc(&self, u: Vertex, v: Vertex) -> bool;
    fn for_each_out(&self, u: Vertex, f: &mut dyn FnMut(Vertex));
    fn for_each_in(&self, v: Vertex, f: &mut dyn FnMut(Vertex));
}

impl AdjacencyOracle for Digraph {
    fn vertex_count(&self) -> usize {
        Digraph::vertex_count(self)
    }

    fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        Digraph::has_arc(self, u, v)
    }

    fn for_each_out(&self, u: Vertex, f: &mut dyn FnMut(Vertex)) {
        self.out_neighbors(u).iter().for_each(|&v| f(v));
    }

    fn for_each_in(&self, v: Vertex, f: &mut dyn FnMut(Vertex)) {
        self.in_neighbors(v).iter().for_each(|&u| f(u));
    }
}

/// Categorical product of a list of factors. Tuple vertices are ranked in
/// mixed radix with the first factor most significant. The explicit digraph
/// exists only when the vertex count is within the threshold; adjacency is
/// always answered coordinatewise.
#[derive(Clone, Debug)]
pub struct ProductSpec {
    factors: Vec<Digraph>,
    size: usize,
    threshold: usize,
    materialized: Option<Digraph>,
}

pub fn categorical_product(factors: Vec<Digraph>, threshold: usize) -> Result<ProductSpec> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter(
            "product needs at least one factor".into(),
        ));
    }
    let size = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.vertex_count()))
        .ok_or(Error::SizeGuard {
            what: "product vertices",
            size: u128::MAX,
            limit: usize::MAX as u128,
        })?;
    let mut spec = ProductSpec {
        factors,
        size,
        threshold,
        materialized: None,
    };
    if size <= threshold {
        spec.materialized = Some(spec.build());
    }
    Ok(spec)
}

impl ProductSpec {
    pub fn factors(&self) -> &[Digraph] {
        &self.factors
    }

    /// The explicit product, or a refusal reporting its size.
    pub fn explicit(&self) -> Result<&Digraph> {
        self.materialized.as_ref().ok_or(Error::SizeGuard {
            what: "explicit product vertices",
            size: self.size as u128,
            limit: self.threshold as u128,
        })
    }

    pub fn is_materialized(&self) -> bool {
        self.materialized.is_some()
    }

    pub fn tuple(&self, mut v: Vertex) -> Vec<Vertex> {
        let mut t = vec![0; self.factors.len()];
        for (d, f) in t.iter_mut().zip(&self.factors).rev() {
            *d = v % f.vertex_count();
            v /= f.vertex_count();
        }
        t
    }

    pub fn index(&self, tuple: &[Vertex]) -> Vertex {
        tuple
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&d, f)| acc * f.vertex_count() + d)
    }

    /// Coordinate `i` of tuple vertex `v`.
    pub fn project(&self, v: Vertex, i: usize) -> Vertex {
        let stride: usize = self.factors[i + 1..]
            .iter()
            .map(|f| f.vertex_count())
            .product();
        (v / stride) % self.factors[i].vertex_count()
    }

    pub fn has_arc_tuple(&self, u: &[Vertex], v: &[Vertex]) -> bool {
        self.factors
            .iter()
            .zip(u.iter().zip(v))
            .all(|(f, (&a, &b))| f.has_arc(a, b))
    }

    fn for_each_product_neighbor(
        &self,
        v: Vertex,
        pick: impl Fn(&Digraph, Vertex) -> &[Vertex],
        f: &mut dyn FnMut(Vertex),
    ) {
        let t = self.tuple(v);
        let lists: Vec<&[Vertex]> = self
            .factors
            .iter()
            .zip(&t)
            .map(|(g, &x)| pick(g, x))
            .collect();
        if lists.iter().any(|l| l.is_empty()) {
            return;
        }
        let mut pos = vec![0; lists.len()];
        loop {
            let idx = lists
                .iter()
                .zip(&pos)
                .zip(&self.factors)
                .fold(0, |acc, ((l, &p), g)| acc * g.vertex_count() + l[p]);
            f(idx);
            // odometer, last coordinate fastest
            let mut i = lists.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                pos[i] += 1;
                if pos[i] < lists[i].len() {
                    break;
                }
                pos[i] = 0;
            }
        }
    }

    fn build(&self) -> Digraph {
        let mut arcs = Vec::new();
        for u in 0..self.size {
            self.for_each_product_neighbor(u, |g, x| g.out_neighbors(x), &mut |v| {
                arcs.push((u, v))
            });
        }
        let labels = (0..self.size).map(|v| self.tuple(v)).collect();
        let name = self
            .factors
            .iter()
            .map(|f| f.name().unwrap_or("G"))
            .collect::<Vec<_>>()
            .join(" x ");
        Digraph::from_sorted(self.size, arcs)
            .with_labels(labels)
            .with_name(name)
    }
}

impl AdjacencyOracle for ProductSpec {
    fn vertex_count(&self) -> usize {
        self.size
    }

    fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc_tuple(&self.tuple(u), &self.tuple(v))
    }

    fn for_each_out(&self, u: Vertex, f: &mut dyn FnMut(Vertex)) {
        self.for_each_product_neighbor(u, |g, x| g.out_neighbors(x), f)
    }

    fn for_each_in(&self, v: Vertex, f: &mut dyn FnMut(Vertex)) {
        self.for_each_product_neighbor(v, |g, x| g.in_neighbors(x), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, path, tournament};

    #[test]
    fn single_factor_is_the_factor() {
        let t3 = tournament(3);
        let p = categorical_product(vec![t3.clone()], 100).unwrap();
        assert_eq!(p.explicit().unwrap(), &t3);
    }

    #[test]
    fn k2_squared_is_two_disjoint_edges() {
        let p = categorical_product(vec![complete(2), complete(2)], 100).unwrap();
        let g = p.explicit().unwrap();
        // (0,0)-(1,1) and (0,1)-(1,0)
        assert_eq!(g.arcs(), &[(0, 3), (1, 2), (2, 1), (3, 0)]);
        assert!(g.is_symmetric());
    }

    #[test]
    fn oracle_agrees_with_explicit_product() {
        let factors = vec![tournament(3), path(2), complete(2)];
        let p = categorical_product(factors, 1000).unwrap();
        let g = p.explicit().unwrap().clone();
        for u in g.vertices() {
            let mut out = Vec::new();
            p.for_each_out(u, &mut |v| out.push(v));
            out.sort_unstable();
            assert_eq!(out, g.out_neighbors(u));
            let mut inn = Vec::new();
            p.for_each_in(u, &mut |v| inn.push(v));
            inn.sort_unstable();
            assert_eq!(inn, g.in_neighbors(u));
            for v in g.vertices() {
                assert_eq!(AdjacencyOracle::has_arc(&p, u, v), g.has_arc(u, v));
            }
            assert_eq!(p.index(&p.tuple(u)), u);
            let t = p.tuple(u);
            for (i, &x) in t.iter().enumerate() {
                assert_eq!(p.project(u, i), x);
            }
        }
    }

    #[test]
    fn refuses_materialization_above_threshold() {
        let p = categorical_product(vec![tournament(4); 3], 63).unwrap();
        assert!(!p.is_materialized());
        assert!(matches!(
            p.explicit(),
            Err(Error::SizeGuard { size: 64, .. })
        ));
        assert!(categorical_product(vec![], 10).is_err());
    }
}
