//! Dense-integer digraphs and arc-preserving maps between them.
//!
//! A [`Digraph`] owns a sorted, duplicate-free arc list over vertices
//! `0..n`, together with precomputed out- and in-neighbour lists. Structured
//! vertices (tuples, chains, functions) produced by the constructions are
//! flattened to their lexicographic rank; the original structure is kept in
//! an optional label table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Arc = (Vertex, Vertex);

#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    name: Option<String>,
    labels: Option<Vec<Vec<usize>>>,
}

/// Equality is label-preserving structural equality: same vertex count and
/// same arc set. Names and label tables are metadata and are ignored.
impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arcs == other.arcs
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a digraph on `0..n`. Duplicate arcs collapse; loops are kept.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        if let Some(&(u, v)) = arcs.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::VertexOutOfRange { u, v, n });
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(Self::from_sorted(n, arcs))
    }

    // Callers guarantee `arcs` is sorted, deduplicated and in range.
    pub(crate) fn from_sorted(n: usize, arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
            inn[v].push(u);
        }
        for list in &mut inn {
            list.sort_unstable();
        }
        Digraph {
            n,
            arcs,
            out,
            inn,
            name: None,
            labels: None,
        }
    }

    pub(crate) fn from_unsorted(n: usize, mut arcs: Vec<Arc>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        Self::from_sorted(n, arcs)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub(crate) fn with_labels(mut self, labels: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn out_neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.out[u]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, u: Vertex) -> bool {
        self.has_arc(u, u)
    }

    pub fn loops(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.arcs.iter().filter(|(u, v)| u == v).map(|&(u, _)| u)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().next().is_none()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Structured label of each vertex, when the digraph came out of a
    /// construction whose vertices are tuples, chains or functions.
    pub fn labels(&self) -> Option<&[Vec<usize>]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&[usize]> {
        self.labels.as_ref().map(|l| l[v].as_slice())
    }

    /// Index of arc `(u, v)` in [`Digraph::arcs`].
    pub fn arc_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.arcs.binary_search(&(u, v)).ok()
    }

    /// Closes the arc set under reversal.
    pub fn symmetrize(&self) -> Digraph {
        let arcs = self
            .arcs
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .collect();
        let mut g = Digraph::from_unsorted(self.n, arcs);
        g.name = self.name.as_ref().map(|s| format!("sym({s})"));
        g.labels = self.labels.clone();
        g
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.has_arc(v, u))
    }

    /// Subdigraph induced by `subset`, relabelled in sorted order to
    /// `0..|subset|`.
    pub fn induced(&self, subset: &[Vertex]) -> Result<Digraph> {
        let mut keep: Vec<Vertex> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&vertex) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::NoSuchVertex { vertex, n: self.n });
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        let mut g = Digraph::from_unsorted(keep.len(), arcs);
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    /// Vertex carrying the given structured label, if any.
    pub fn vertex_with_label(&self, label: &[usize]) -> Option<Vertex> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DigraphFile {
            n: self.n,
            arcs: self.arcs.iter().map(|&(u, v)| [u, v]).collect(),
            name: self.name.clone(),
        })
        .expect("digraph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Digraph> {
        let file: DigraphFile = serde_json::from_str(text)?;
        let g = Digraph::new(file.n, file.arcs.into_iter().map(|[u, v]| (u, v)))?;
        Ok(match file.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }

    /// Graphviz rendering. With `collapse_symmetric`, each pair of opposite
    /// arcs is drawn once as an undirected edge.
    pub fn to_dot(&self, collapse_symmetric: bool) -> String {
        let mut s = String::new();
        let title = self.name.as_deref().unwrap_or("G");
        let _ = writeln!(s, "digraph {:?} {{", title);
        for v in self.vertices() {
            match self.label(v) {
                Some(l) => {
                    let _ = writeln!(s, "  {v} [label=\"{v} {l:?}\"];");
                }
                None => {
                    let _ = writeln!(s, "  {v};");
                }
            }
        }
        for &(u, v) in &self.arcs {
            if collapse_symmetric && u != v && self.has_arc(v, u) {
                if u < v {
                    let _ = writeln!(s, "  {u} -> {v} [dir=none];");
                }
            } else {
                let _ = writeln!(s, "  {u} -> {v};");
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphFile {
    n: usize,
    arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

/// A vertex map between two digraphs. Whether it preserves arcs is decided by
/// [`validate_hom`], never assumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hom {
    pub map: Vec<Vertex>,
}

impl Hom {
    pub fn new(map: Vec<Vertex>) -> Self {
        Hom { map }
    }

    pub fn identity(n: usize) -> Self {
        Hom::new((0..n).collect())
    }

    pub fn apply(&self, u: Vertex) -> Vertex {
        self.map[u]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Hom) -> Hom {
        Hom::new(self.map.iter().map(|&x| other.map[x]).collect())
    }
}

/// True iff `h` sends every arc of `source` to an arc of `target`.
pub fn validate_hom(h: &Hom, source: &Digraph, target: &Digraph) -> Result<bool> {
    if h.map.len() != source.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: source.vertex_count(),
            got: h.map.len(),
        });
    }
    if h.map.iter().any(|&x| x >= target.vertex_count()) {
        return Ok(false);
    }
    Ok(source
        .arcs()
        .iter()
        .all(|&(u, v)| target.has_arc(h.map[u], h.map[v])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3() -> Digraph {
        Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn make_digraph_edge_cases() {
        let k0 = Digraph::new(0, []).unwrap();
        assert_eq!((k0.vertex_count(), k0.arc_count()), (0, 0));

        let p1 = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(p1.arcs(), &[(0, 1)]);

        let g = Digraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.arc_count(), 2);

        assert!(matches!(
            Digraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { u: 0, v: 2, n: 2 })
        ));
    }

    #[test]
    fn arcs_come_out_sorted() {
        let g = Digraph::new(3, [(2, 0), (0, 2), (1, 1), (0, 1)]).unwrap();
        assert_eq!(g.arcs(), &[(0, 1), (0, 2), (1, 1), (2, 0)]);
        assert_eq!(g.in_neighbors(0), &[2]);
        assert!(!g.is_loopless());
    }

    #[test]
    fn symmetrize_small_cases() {
        let p1 = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(p1.symmetrize().arcs(), &[(0, 1), (1, 0)]);

        let s = t3().symmetrize();
        assert_eq!(s.arc_count(), 6);
        assert!(s.is_symmetric());
        assert_eq!(s.symmetrize(), s);
    }

    #[test]
    fn validate_hom_cases() {
        let k3 = t3().symmetrize();
        assert!(validate_hom(&Hom::identity(3), &k3, &k3).unwrap());

        let p1 = Digraph::new(2, [(0, 1)]).unwrap();
        let k1 = Digraph::empty(1);
        assert!(!validate_hom(&Hom::new(vec![0, 0]), &p1, &k1).unwrap());

        assert!(matches!(
            validate_hom(&Hom::new(vec![0]), &p1, &k1),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn induced_relabels_in_sorted_order() {
        let t2 = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(t3().induced(&[2, 1]).unwrap(), t2);
        assert!(!t2.is_symmetric());
        assert!(t3().induced(&[3]).is_err());
    }

    #[test]
    fn json_format_is_exact() {
        let g = t3().with_name("T_3");
        assert_eq!(
            g.to_json(),
            r#"{"n":3,"arcs":[[0,1],[0,2],[1,2]],"name":"T_3"}"#
        );
        assert_eq!(Digraph::empty(2).to_json(), r#"{"n":2,"arcs":[]}"#);
        assert!(Digraph::from_json(r#"{"n":1,"arcs":[],"extra":1}"#).is_err());
        assert!(Digraph::from_json(r#"{"n":1,"arcs":[[0,1]]}"#).is_err());
    }

    #[test]
    fn dot_collapses_symmetric_pairs_on_request() {
        let g = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        let dot = g.to_dot(true);
        assert!(dot.contains("0 -> 1 [dir=none];"));
        assert!(!dot.contains("1 -> 0"));
        assert!(g.to_dot(false).contains("1 -> 0;"));
    }
}
