//! The edge-monitoring predicate, the pair coverage table, MEG-set checks
//! and the forced/excluded vertex rules.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::distance::{all_pairs, bfs, Distance, DistanceTable};
use crate::graph::{EdgeId, Graph, GraphError, Vertex};
use crate::structure::cut_structure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonitorError {
    #[error("monitoring pair must be two distinct vertices, got {0} twice")]
    SamePair(Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertices {0} and {1} are in different components")]
    Unreachable(Vertex, Vertex),
    #[error("distance table was built without shortest-path counts")]
    MissingCounts,
}

fn check_pre(g: &Graph, dt: &DistanceTable, u: Vertex, v: Vertex, e: EdgeId) -> Result<u32, MonitorError> {
    for w in [u, v] {
        if w >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: w, n: g.n() }.into());
        }
    }
    if u == v {
        return Err(MonitorError::SamePair(u));
    }
    g.edge(e.a(), e.b())?;
    dt.hops(u, v).ok_or(MonitorError::Unreachable(u, v))
}

/// Reference predicate: `e` is monitored by `(u, v)` iff removing `e`
/// strictly increases the u–v distance (possibly to unreachable).
pub fn monitors(g: &Graph, dt: &DistanceTable, u: Vertex, v: Vertex, e: EdgeId) -> Result<bool, MonitorError> {
    let d = check_pre(g, dt, u, v, e)?;
    let h = g.delete_edge(e)?;
    Ok(match bfs(&h, u)[v] {
        Distance::Finite(after) => after > d,
        Distance::Unreachable => true,
    })
}

/// Count form of the predicate: with `e = xy` oriented along a shortest
/// u–v path, `e` is on all of them iff `σ(u,x)·σ(y,v) = σ(u,v)`.
pub fn monitors_by_counts(
    g: &Graph,
    dt: &DistanceTable,
    u: Vertex,
    v: Vertex,
    e: EdgeId,
) -> Result<bool, MonitorError> {
    if !dt.has_counts() {
        return Err(MonitorError::MissingCounts);
    }
    let d = check_pre(g, dt, u, v, e)?;
    Ok(counts_test(dt, u, v, d, e))
}

fn counts_test(dt: &DistanceTable, u: Vertex, v: Vertex, d: u32, e: EdgeId) -> bool {
    let (x, y) = e.endpoints();
    let on_path = |x: Vertex, y: Vertex| match (dt.hops(u, x), dt.hops(y, v)) {
        (Some(a), Some(b)) => a + 1 + b == d,
        _ => false,
    };
    let (x, y) = if on_path(x, y) {
        (x, y)
    } else if on_path(y, x) {
        (y, x)
    } else {
        return false;
    };
    let sigma = |a, b| dt.sigma(a, b).expect("counts present");
    let product: BigUint = sigma(u, x) * sigma(y, v);
    &product == sigma(u, v)
}

/// For every pair `u < v`, the set of edges it monitors, as a bitset over
/// edge indices of the graph.
#[derive(Clone, Debug)]
pub struct MonitorTable {
    n: usize,
    edges: Vec<EdgeId>,
    rows: Vec<FixedBitSet>,
}

/// Position of pair `u < v` in the row-major strict upper triangle.
fn pair_index(n: usize, u: Vertex, v: Vertex) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

impl MonitorTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges monitored by `{u, v}`. Empty for `u == v`.
    pub fn row(&self, u: Vertex, v: Vertex) -> Option<&FixedBitSet> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(&self.rows[pair_index(self.n, u, v)]),
            std::cmp::Ordering::Greater => Some(&self.rows[pair_index(self.n, v, u)]),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn monitored(&self, u: Vertex, v: Vertex) -> Vec<EdgeId> {
        self.row(u, v)
            .map(|r| r.ones().map(|i| self.edges[i]).collect())
            .unwrap_or_default()
    }

    /// Union of the rows of all pairs inside `set`.
    pub fn coverage(&self, set: &[Vertex]) -> FixedBitSet {
        let mut cov = FixedBitSet::with_capacity(self.m());
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                if let Some(r) = self.row(a, b) {
                    cov.union_with(r);
                }
            }
        }
        cov
    }
}

/// Builds the table with the count form of the predicate.
pub fn monitor_table(g: &Graph) -> MonitorTable {
    monitor_table_with(g, &all_pairs(g, true))
}

pub fn monitor_table_with(g: &Graph, dt: &DistanceTable) -> MonitorTable {
    let n = g.n();
    let m = g.m();
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let rows = pairs
        .par_iter()
        .map(|&(u, v)| {
            let mut row = FixedBitSet::with_capacity(m);
            if let Some(d) = dt.hops(u, v) {
                for (i, &e) in g.edges().iter().enumerate() {
                    if counts_test(dt, u, v, d, e) {
                        row.insert(i);
                    }
                }
            }
            row
        })
        .collect();
    MonitorTable {
        n,
        edges: g.edges().to_vec(),
        rows,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MegCheck {
    pub is_meg_set: bool,
    pub uncovered: Vec<EdgeId>,
}

pub fn is_meg_set(g: &Graph, s: &BTreeSet<Vertex>) -> Result<MegCheck, GraphError> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(is_meg_set_with(&monitor_table(g), s))
}

pub fn is_meg_set_with(table: &MonitorTable, s: &BTreeSet<Vertex>) -> MegCheck {
    let set: Vec<Vertex> = s.iter().copied().collect();
    let cov = table.coverage(&set);
    let uncovered: Vec<EdgeId> = (0..table.m())
        .filter(|&i| !cov.contains(i))
        .map(|i| table.edges[i])
        .collect();
    MegCheck {
        is_meg_set: uncovered.is_empty(),
        uncovered,
    }
}

/// Vertices in every MEG-set: `v` such that for some neighbor `u`, every
/// induced 2-path `u v x` closes into a 4-cycle `u v x y`. Pendant vertices
/// qualify vacuously. Isolated vertices never do.
pub fn forced_vertices(g: &Graph) -> BTreeSet<Vertex> {
    g.vertices().filter(|&v| is_forced(g, v)).collect()
}

fn is_forced(g: &Graph, v: Vertex) -> bool {
    let nbrs = g.neighbors(v);
    nbrs.iter().any(|&u| {
        nbrs.iter()
            .filter(|&&x| x != u && !g.has_edge(u, x))
            .all(|&x| g.neighbors(u).iter().any(|&y| y != v && g.has_edge(y, x)))
    })
}

/// Vertices in no minimum MEG-set: cut vertices, and cut-edge endpoints of
/// degree at least 2.
pub fn excluded_vertices(g: &Graph) -> BTreeSet<Vertex> {
    let (mut out, cut_edges) = cut_structure(g);
    for e in cut_edges {
        for w in [e.a(), e.b()] {
            if g.degree(w) >= 2 {
                out.insert(w);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn grid(m: usize, n: usize) -> Graph {
        let mut edges = Vec::new();
        for r in 0..m {
            for c in 0..n {
                let v = r * n + c;
                if c + 1 < n {
                    edges.push((v, v + 1));
                }
                if r + 1 < m {
                    edges.push((v, v + n));
                }
            }
        }
        Graph::from_edges(m * n, edges).unwrap()
    }

    fn both(g: &Graph, u: Vertex, v: Vertex, e: (Vertex, Vertex)) -> bool {
        let dt = all_pairs(g, true);
        let e = EdgeId::new(e.0, e.1).unwrap();
        let a = monitors(g, &dt, u, v, e).unwrap();
        assert_eq!(a, monitors_by_counts(g, &dt, u, v, e).unwrap());
        a
    }

    #[test]
    fn predicate_examples() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert!(both(&p3, 0, 2, (0, 1)));
        assert!(!both(&cycle(4), 0, 2, (0, 1)));
        assert!(both(&cycle(5), 0, 2, (1, 2)));
        let g3 = grid(3, 3);
        assert!(!both(&g3, 0, 8, (0, 1)));
        assert!(!both(&g3, 0, 8, (0, 3)));
    }

    #[test]
    fn predicate_errors() {
        let p3 = g(4, &[(0, 1), (1, 2)]);
        let dt = all_pairs(&p3, false);
        let e = EdgeId::new(0, 1).unwrap();
        assert_eq!(monitors(&p3, &dt, 1, 1, e), Err(MonitorError::SamePair(1)));
        assert_eq!(monitors(&p3, &dt, 0, 3, e), Err(MonitorError::Unreachable(0, 3)));
        let missing = EdgeId::new(0, 2).unwrap();
        assert!(matches!(monitors(&p3, &dt, 0, 2, missing), Err(MonitorError::Graph(_))));
        assert_eq!(monitors_by_counts(&p3, &dt, 0, 2, e), Err(MonitorError::MissingCounts));
    }

    #[test]
    fn table_examples() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let t = monitor_table(&p3);
        assert_eq!(t.monitored(0, 2).len(), 2);
        assert_eq!(t.monitored(1, 0), vec![EdgeId::new(0, 1).unwrap()]);

        let c4 = cycle(4);
        let t = monitor_table(&c4);
        assert!(t.monitored(0, 2).is_empty());
        assert!(t.monitored(1, 3).is_empty());
        for &e in c4.edges() {
            assert_eq!(t.monitored(e.a(), e.b()), vec![e]);
        }

        let k3 = cycle(3);
        let t = monitor_table(&k3);
        for &e in k3.edges() {
            assert_eq!(t.monitored(e.a(), e.b()), vec![e]);
        }
    }

    #[test]
    fn pair_index_is_dense() {
        let n = 7;
        let mut seen = vec![false; n * (n - 1) / 2];
        for u in 0..n {
            for v in u + 1..n {
                let i = pair_index(n, u, v);
                assert!(!seen[i]);
                seen[i] = true;
            }
        }
        assert!(seen.into_iter().all(|b| b));
    }

    #[test]
    fn meg_set_checks() {
        let c5 = cycle(5);
        let all: BTreeSet<_> = c5.vertices().collect();
        assert!(is_meg_set(&c5, &all).unwrap().is_meg_set);
        let two = BTreeSet::from([0, 2]);
        let r = is_meg_set(&c5, &two).unwrap();
        assert!(!r.is_meg_set);
        assert!(!r.uncovered.is_empty());

        let tree = g(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]);
        assert!(is_meg_set(&tree, &BTreeSet::from([0, 2, 4, 5])).unwrap().is_meg_set);
        assert!(!is_meg_set(&tree, &BTreeSet::from([0, 2, 4])).unwrap().is_meg_set);
    }

    #[test]
    fn forced_examples() {
        let tree = g(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]);
        assert_eq!(forced_vertices(&tree), BTreeSet::from([0, 2, 4, 5]));
        assert_eq!(forced_vertices(&cycle(4)), BTreeSet::from([0, 1, 2, 3]));
        assert!(forced_vertices(&cycle(6)).is_empty());
        let boundary: BTreeSet<_> = (0..9).filter(|&v| v != 4).collect();
        assert_eq!(forced_vertices(&grid(3, 3)), boundary);
        assert_eq!(forced_vertices(&g(2, &[(0, 1)])), BTreeSet::from([0, 1]));
        assert!(forced_vertices(&Graph::empty(3)).is_empty());
    }

    #[test]
    fn excluded_examples() {
        assert_eq!(excluded_vertices(&g(4, &[(0, 1), (1, 2), (2, 3)])), BTreeSet::from([1, 2]));
        assert!(excluded_vertices(&cycle(5)).is_empty());
        let star = g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert_eq!(excluded_vertices(&star), BTreeSet::from([0]));
        // two triangles joined by a bridge 2-3
        let h = g(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(excluded_vertices(&h), BTreeSet::from([2, 3]));
    }
}
