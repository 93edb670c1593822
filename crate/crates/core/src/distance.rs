//! All-pairs hop distances by BFS from every source, with optional
//! shortest-path counts.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// A hop distance or the unreachable sentinel. Arithmetic on `Unreachable`
/// is an error rather than a saturation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("arithmetic on an unreachable distance")]
pub struct UnreachableArithmetic;

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn checked_add(self, rhs: Distance) -> Result<Distance, UnreachableArithmetic> {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Ok(Distance::Finite(a + b)),
            _ => Err(UnreachableArithmetic),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u32(*d),
            Distance::Unreachable => s.serialize_none(),
        }
    }
}

const INF: u32 = u32::MAX;

/// Dense n×n distance matrix plus optional path counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
    sigma: Option<Vec<BigUint>>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> Distance {
        match self.dist[u * self.n + v] {
            INF => Distance::Unreachable,
            d => Distance::Finite(d),
        }
    }

    /// Raw hop count, `None` when unreachable.
    pub fn hops(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.dist(u, v).finite()
    }

    pub fn has_counts(&self) -> bool {
        self.sigma.is_some()
    }

    /// Number of shortest u–v paths (0 when unreachable). `None` if the
    /// table was built without counts.
    pub fn sigma(&self, u: Vertex, v: Vertex) -> Option<&BigUint> {
        self.sigma.as_ref().map(|s| &s[u * self.n + v])
    }
}

/// BFS from every source. Sources run in parallel; the table is identical
/// for every schedule because each row is produced by exactly one source.
pub fn all_pairs(g: &Graph, with_counts: bool) -> DistanceTable {
    let n = g.n();
    let rows: Vec<(Vec<u32>, Option<Vec<BigUint>>)> = (0..n)
        .into_par_iter()
        .map(|s| bfs_row(g, s, with_counts))
        .collect();
    let mut dist = Vec::with_capacity(n * n);
    let mut sigma = with_counts.then(|| Vec::with_capacity(n * n));
    for (d, c) in rows {
        dist.extend(d);
        if let (Some(all), Some(c)) = (sigma.as_mut(), c) {
            all.extend(c);
        }
    }
    DistanceTable { n, dist, sigma }
}

/// Single-source BFS distances.
pub fn bfs(g: &Graph, s: Vertex) -> Vec<Distance> {
    bfs_row(g, s, false)
        .0
        .into_iter()
        .map(|d| if d == INF { Distance::Unreachable } else { Distance::Finite(d) })
        .collect()
}

fn bfs_row(g: &Graph, s: Vertex, with_counts: bool) -> (Vec<u32>, Option<Vec<BigUint>>) {
    let n = g.n();
    let mut dist = vec![INF; n];
    let mut sigma = with_counts.then(|| vec![BigUint::zero(); n]);
    dist[s] = 0;
    if let Some(c) = sigma.as_mut() {
        c[s] = BigUint::one();
    }
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == INF {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
            if dist[y] == dist[x] + 1 {
                if let Some(c) = sigma.as_mut() {
                    let add = c[x].clone();
                    c[y] += add;
                }
            }
        }
    }
    (dist, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid3() -> Graph {
        let mut edges = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let v = r * 3 + c;
                if c < 2 {
                    edges.push((v, v + 1));
                }
                if r < 2 {
                    edges.push((v, v + 3));
                }
            }
        }
        Graph::from_edges(9, edges).unwrap()
    }

    #[test]
    fn small_examples() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let dt = all_pairs(&c4, true);
        assert_eq!(dt.dist(0, 2), Distance::Finite(2));
        assert_eq!(dt.sigma(0, 2), Some(&BigUint::from(2u8)));

        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let dt = all_pairs(&p3, true);
        assert_eq!(dt.hops(0, 2), Some(2));
        assert_eq!(dt.sigma(0, 2), Some(&BigUint::one()));

        let dt = all_pairs(&grid3(), true);
        assert_eq!(dt.hops(0, 8), Some(4));
        assert_eq!(dt.sigma(0, 8), Some(&BigUint::from(6u8)));
    }

    #[test]
    fn disconnected_pairs_are_unreachable() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let dt = all_pairs(&g, true);
        assert_eq!(dt.dist(0, 2), Distance::Unreachable);
        assert_eq!(dt.sigma(0, 2), Some(&BigUint::zero()));
        assert!(dt.dist(0, 2).checked_add(Distance::Finite(1)).is_err());
        assert!(!all_pairs(&g, false).has_counts());
    }

    #[test]
    fn bfs_matches_table_row() {
        let g = grid3();
        let dt = all_pairs(&g, false);
        for s in g.vertices() {
            let row = bfs(&g, s);
            for v in g.vertices() {
                assert_eq!(row[v], dt.dist(s, v));
            }
        }
    }

    #[test]
    fn counts_do_not_overflow_on_long_grids() {
        // corner to corner of a 16×16 grid: C(30,15) paths
        let side = 16;
        let mut edges = Vec::new();
        for r in 0..side {
            for c in 0..side {
                let v = r * side + c;
                if c + 1 < side {
                    edges.push((v, v + 1));
                }
                if r + 1 < side {
                    edges.push((v, v + side));
                }
            }
        }
        let g = Graph::from_edges(side * side, edges).unwrap();
        let dt = all_pairs(&g, true);
        assert_eq!(dt.sigma(0, side * side - 1), Some(&BigUint::from(155_117_520u64)));
    }
}
