use crate::digraph::Digraph;

/// Candidate sets for every source vertex, one fixed-width bitset each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domains {
    vars: usize,
    size: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Domains {
    /// Every source vertex may go to every target vertex.
    pub fn full(vars: usize, size: usize) -> Self {
        let words = size.div_ceil(64);
        let mut d = Domains {
            vars,
            size,
            words,
            bits: vec![0; vars * words],
        };
        for u in 0..vars {
            for x in 0..size {
                d.insert(u, x);
            }
        }
        d
    }

    pub fn from_sets(size: usize, sets: &[Vec<usize>]) -> Self {
        let mut d = Domains::full(sets.len(), size);
        d.bits.iter_mut().for_each(|w| *w = 0);
        for (u, set) in sets.iter().enumerate() {
            for &x in set {
                d.insert(u, x);
            }
        }
        d
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn target_size(&self) -> usize {
        self.size
    }

    pub(crate) fn words(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn words_mut(&mut self, u: usize) -> &mut [u64] {
        &mut self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn insert(&mut self, u: usize, x: usize) {
        self.bits[u * self.words + x / 64] |= 1 << (x % 64);
    }

    pub fn contains(&self, u: usize, x: usize) -> bool {
        self.bits[u * self.words + x / 64] & (1 << (x % 64)) != 0
    }

    pub fn len(&self, u: usize) -> usize {
        self.words(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self, u: usize) -> bool {
        self.words(u).iter().all(|&w| w == 0)
    }

    pub fn assign(&mut self, u: usize, x: usize) {
        self.words_mut(u).iter_mut().for_each(|w| *w = 0);
        self.insert(u, x);
    }

    pub fn values(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.words(u))
    }

    pub fn to_sets(&self) -> Vec<Vec<usize>> {
        (0..self.vars).map(|u| self.values(u).collect()).collect()
    }
}

pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Target adjacency as bitsets: out- and in-neighbourhoods and the loop set.
pub(crate) struct TargetIndex {
    pub words: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    pub loops: Vec<u64>,
}

impl TargetIndex {
    pub fn new(h: &Digraph) -> Self {
        let n = h.vertex_count();
        let words = n.div_ceil(64);
        let mut out = vec![0u64; n * words];
        let mut inn = vec![0u64; n * words];
        let mut loops = vec![0u64; words];
        for &(x, y) in h.arcs() {
            out[x * words + y / 64] |= 1 << (y % 64);
            inn[y * words + x / 64] |= 1 << (x % 64);
            if x == y {
                loops[x / 64] |= 1 << (x % 64);
            }
        }
        TargetIndex {
            words,
            out,
            inn,
            loops,
        }
    }

    pub fn out(&self, x: usize) -> &[u64] {
        &self.out[x * self.words..(x + 1) * self.words]
    }

    pub fn inn(&self, x: usize) -> &[u64] {
        &self.inn[x * self.words..(x + 1) * self.words]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let mut d = Domains::full(2, 70);
        assert_eq!(d.len(0), 70);
        d.assign(1, 65);
        assert_eq!(d.values(1).collect::<Vec<_>>(), vec![65]);
        assert!(d.contains(1, 65) && !d.contains(1, 3));
        let e = Domains::from_sets(5, &[vec![], vec![4, 1]]);
        assert!(e.is_empty(0));
        assert_eq!(e.to_sets(), vec![vec![], vec![1, 4]]);
    }
}
