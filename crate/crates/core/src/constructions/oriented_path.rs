use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn step(self) -> i64 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }

    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// An oriented path on vertices `0..=m`; arc `i` joins `i` and `i + 1` and
/// points forward (`i → i+1`) or backward (`i+1 → i`).
///
/// Text form is one character per arc: `+` forward, `-` (or `−`) backward.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedPath {
    dirs: Vec<Direction>,
}

impl OrientedPath {
    pub fn new(dirs: Vec<Direction>) -> Self {
        OrientedPath { dirs }
    }

    /// All-forward path `P_n`.
    pub fn forward(n: usize) -> Self {
        OrientedPath::new(vec![Direction::Forward; n])
    }

    /// `P_n` with the arcs at the given positions reversed.
    pub fn with_reversals(n: usize, reversed: &[usize]) -> Self {
        let mut p = OrientedPath::forward(n);
        for &i in reversed {
            p.dirs[i] = Direction::Backward;
        }
        p
    }

    pub fn dirs(&self) -> &[Direction] {
        &self.dirs
    }

    pub fn arc_count(&self) -> usize {
        self.dirs.len()
    }

    pub fn reversal_count(&self) -> usize {
        self.dirs
            .iter()
            .filter(|&&d| d == Direction::Backward)
            .count()
    }

    /// Cumulative level of each vertex: 0 at vertex 0, +1 across a forward
    /// arc, −1 across a backward one.
    pub fn levels(&self) -> Vec<i64> {
        std::iter::once(0)
            .chain(self.dirs.iter().scan(0, |lvl, d| {
                *lvl += d.step();
                Some(*lvl)
            }))
            .collect()
    }

    pub fn as_digraph(&self) -> Digraph {
        let arcs = self
            .dirs
            .iter()
            .enumerate()
            .map(|(i, d)| match d {
                Direction::Forward => (i, i + 1),
                Direction::Backward => (i + 1, i),
            })
            .collect();
        Digraph::from_unsorted(self.dirs.len() + 1, arcs).with_name(self.to_string())
    }
}

impl fmt::Display for OrientedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.dirs {
            f.write_str(match d {
                Direction::Forward => "+",
                Direction::Backward => "-",
            })?;
        }
        Ok(())
    }
}

impl FromStr for OrientedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Direction::Forward),
                '-' | '\u{2212}' => Ok(Direction::Backward),
                other => Err(Error::PathSyntax(other)),
            })
            .collect::<Result<_, _>>()
            .map(OrientedPath::new)
    }
}

/// Algebraic length: span of the level function, i.e. the least `n` with a
/// homomorphism into `P_n`.
pub fn algebraic_length(p: &OrientedPath) -> usize {
    let levels = p.levels();
    let (lo, hi) = levels
        .iter()
        .minmax()
        .into_option()
        .expect("a path has at least one vertex");
    (hi - lo) as usize
}

/// The paths obtained from `P_n` by reversing at most `k` arcs.
#[derive(Clone, Debug)]
pub struct PathFamily {
    pub n: usize,
    pub k: usize,
    pub members: Vec<OrientedPath>,
    /// Reversed arc positions of each member, parallel to `members`.
    pub reversal_sets: Vec<Vec<usize>>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Every member of the family, ordered by reversal-set size and then
/// lexicographically by reversal set; `P_n` comes first. Members that are
/// reverses of one another are both kept.
pub fn path_family(n: usize, k: usize) -> Result<PathFamily, Error> {
    if k > n {
        return Err(Error::InvalidParameter(format!(
            "path family needs k <= n, got n = {n}, k = {k}"
        )));
    }
    let reversal_sets: Vec<Vec<usize>> = (0..=k).flat_map(|r| (0..n).combinations(r)).collect();
    let members = reversal_sets
        .iter()
        .map(|s| OrientedPath::with_reversals(n, s))
        .collect();
    Ok(PathFamily {
        n,
        k,
        members,
        reversal_sets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_round_trips() {
        let p: OrientedPath = "++−+++".parse().unwrap();
        assert_eq!(p.to_string(), "++-+++");
        assert_eq!(p.reversal_count(), 1);
        assert!("+x".parse::<OrientedPath>().is_err());
        assert_eq!("".parse::<OrientedPath>().unwrap().arc_count(), 0);
    }

    #[test]
    fn as_digraph_shape() {
        let p: OrientedPath = "+-+".parse().unwrap();
        let g = p.as_digraph();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.arcs(), &[(0, 1), (2, 1), (2, 3)]);
    }

    #[test]
    fn algebraic_length_examples() {
        for n in 0..6 {
            assert_eq!(algebraic_length(&OrientedPath::forward(n)), n);
        }
        let p: OrientedPath = "+-+".parse().unwrap();
        assert_eq!(p.levels(), vec![0, 1, 0, 1]);
        assert_eq!(algebraic_length(&p), 1);
        assert_eq!(algebraic_length(&"--+".parse().unwrap()), 2);
    }

    #[test]
    fn family_sizes_and_order() {
        assert_eq!(
            path_family(5, 0).unwrap().members,
            vec![OrientedPath::forward(5)]
        );
        let f = path_family(6, 1).unwrap();
        assert_eq!(f.len(), 7);
        assert_eq!(f.members[1].to_string(), "-+++++");
        assert_eq!(f.members[6].to_string(), "+++++-");
        assert!(path_family(2, 3).is_err());
    }

    #[test]
    fn family_members_have_large_algebraic_length() {
        for k in 1..4 {
            let f = path_family(3 * k, k - 1).unwrap();
            for p in &f.members {
                assert!(algebraic_length(p) >= k + 2, "{p}");
            }
        }
    }
}
