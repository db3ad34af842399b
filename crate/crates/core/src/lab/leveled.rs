//! Shortest level-climbing walks.
//!
//! A state is a vertex together with a level in `0..=top`. A forward step
//! follows an arc and raises the level, a backward step walks an arc against
//! its direction and lowers it. A walk from level 0 to level `top` whose
//! levels stay in range spells an oriented path of algebraic length at least
//! `top` together with a homomorphism of it into the graph.

use std::collections::VecDeque;

use crate::constructions::{AdjacencyOracle, Direction, OrientedPath};
use crate::digraph::Vertex;

/// An oriented path and the vertices its walk visits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Climb {
    pub path: OrientedPath,
    pub walk: Vec<Vertex>,
}

const UNREACHED: u32 = u32::MAX;

/// The shortest climb from level 0 to `top`; among shortest ones, the
/// direction pattern that is least with `+` before `-`. `None` when level
/// `top` cannot be reached.
pub fn shortest_climb<G: AdjacencyOracle + ?Sized>(g: &G, top: usize) -> Option<Climb> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    if top == 0 {
        return Some(Climb {
            path: OrientedPath::new(Vec::new()),
            walk: vec![0],
        });
    }
    let levels = top + 1;
    let id = |v: usize, level: usize| level * n + v;
    let states = n * levels;

    // distance from each state to the top level
    let mut dist = vec![UNREACHED; states];
    let mut queue = VecDeque::new();
    for v in 0..n {
        dist[id(v, top)] = 0;
        queue.push_back((v, top));
    }
    while let Some((y, i)) = queue.pop_front() {
        let d = dist[id(y, i)] + 1;
        let mut relax = |x: usize, j: usize, q: &mut VecDeque<(usize, usize)>| {
            if dist[id(x, j)] == UNREACHED {
                dist[id(x, j)] = d;
                q.push_back((x, j));
            }
        };
        if i >= 1 {
            // (x, i-1) --forward--> (y, i) needs x -> y
            g.for_each_in(y, &mut |x| relax(x, i - 1, &mut queue));
        }
        if i + 1 < top {
            // (x, i+1) --backward--> (y, i) needs y -> x
            g.for_each_out(y, &mut |x| relax(x, i + 1, &mut queue));
        }
    }

    let length = (0..n).map(|v| dist[id(v, 0)]).min()?;
    if length == UNREACHED {
        return None;
    }
    let start: Vec<(usize, usize)> = (0..n)
        .filter(|&v| dist[id(v, 0)] == length)
        .map(|v| (v, 0))
        .collect();
    let mut layers = vec![start];
    let mut parents: Vec<Vec<usize>> = Vec::with_capacity(length as usize);
    let mut dirs = Vec::with_capacity(length as usize);
    let mut mark = vec![0u32; states];
    for step in 0..length {
        let want = length - step - 1;
        let stamp = step + 1;
        let frontier = layers.last().expect("non-empty");
        let mut next = Vec::new();
        let mut parent = Vec::new();
        let mut expand = |dir: Direction,
                          next: &mut Vec<(usize, usize)>,
                          parent: &mut Vec<usize>| {
            for (p, &(x, i)) in frontier.iter().enumerate() {
                let mut visit = |y: usize, j: usize| {
                    let s = id(y, j);
                    if dist[s] == want && mark[s] != stamp {
                        mark[s] = stamp;
                        next.push((y, j));
                        parent.push(p);
                    }
                };
                match dir {
                    Direction::Forward if i < top => g.for_each_out(x, &mut |y| visit(y, i + 1)),
                    Direction::Backward if i >= 1 => g.for_each_in(x, &mut |y| visit(y, i - 1)),
                    _ => {}
                }
            }
        };
        expand(Direction::Forward, &mut next, &mut parent);
        let dir = if next.is_empty() {
            expand(Direction::Backward, &mut next, &mut parent);
            Direction::Backward
        } else {
            Direction::Forward
        };
        debug_assert!(!next.is_empty(), "distance labels guarantee progress");
        dirs.push(dir);
        parents.push(parent);
        layers.push(next);
    }

    let mut at = 0;
    let mut walk = vec![layers[length as usize][at].0];
    for step in (0..length as usize).rev() {
        at = parents[step][at];
        walk.push(layers[step][at].0);
    }
    walk.reverse();
    Some(Climb {
        path: OrientedPath::new(dirs),
        walk,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{algebraic_length, path, tournament};
    use crate::digraph::{validate_hom, Digraph, Hom};

    fn check(g: &Digraph, top: usize) -> Climb {
        let c = shortest_climb(g, top).expect("climb exists");
        assert!(algebraic_length(&c.path) >= top);
        let h = Hom::new(c.walk.clone());
        assert!(validate_hom(&h, &c.path.as_digraph(), g).unwrap());
        c
    }

    #[test]
    fn directed_paths_climb_forward() {
        let c = check(&tournament(4), 3);
        assert_eq!(c.path.to_string(), "+++");
        assert_eq!(c.walk, vec![0, 1, 2, 3]);
        // T_4 does not map to P_3, so it admits a climb of height 4
        assert_eq!(check(&tournament(4), 4).path.to_string(), "+++-++");
        assert!(shortest_climb(&path(3), 4).is_none());
    }

    #[test]
    fn directed_cycle_climbs_anywhere() {
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(check(&c3, 5).path.to_string(), "+++++");
    }

    #[test]
    fn zigzag_climb() {
        // the oriented path ++-++ has no directed path of three arcs
        let p: OrientedPath = "++-++".parse().unwrap();
        let c = check(&p.as_digraph(), 3);
        assert_eq!(c.path.to_string(), "++-++");
        assert_eq!(c.walk, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn level_zero_is_trivial() {
        assert_eq!(shortest_climb(&Digraph::empty(1), 0).unwrap().walk, vec![0]);
        assert!(shortest_climb(&Digraph::empty(0), 0).is_none());
    }
}
