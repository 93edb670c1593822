//! Seeded constructions for every graph family the analyzers use.
//!
//! Random families draw from `ChaCha8Rng::seed_from_u64(seed)`; the same
//! tag always regenerates the same graph.
//!
//! Distributions: random trees attach vertex `i` to a uniform earlier
//! vertex and then relabel by a uniform permutation; random unicyclic
//! graphs do the same starting from a `k`-cycle; random connected graphs
//! take a random tree and add uniformly chosen non-edges.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid parameters: {0}")]
pub struct GenError(pub String);

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), GenError> {
    if cond {
        Ok(())
    } else {
        Err(GenError(msg()))
    }
}

/// Family and parameters. Enough to rebuild the graph with [`regenerate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GraphTag {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    /// Vertex `(r, c)`, 1-indexed, is `(r − 1)·n + (c − 1)`.
    Grid { m: usize, n: usize },
    PerfectBinaryTree { h: usize },
    RandomTree { n: usize, seed: u64 },
    RandomUnicyclic { n: usize, k: usize, seed: u64 },
    RandomConnected { n: usize, m: usize, seed: u64 },
    RandomSplit { n: usize, seed: u64 },
    /// `k`-cycle on `0..k` with a random tree of `sizes[i]` vertices hung
    /// from cycle vertex `positions[i]`.
    UnicyclicAttachments {
        k: usize,
        positions: Vec<usize>,
        sizes: Vec<usize>,
        seed: u64,
    },
    ExtremalTree {
        k: usize,
        pads: Vec<usize>,
        designated: Vec<EdgeId>,
    },
    SplitCounterexample {
        n: usize,
        u1: Vertex,
        u2: Vertex,
        v1: Vertex,
        v2: Vertex,
        fragile: Vec<EdgeId>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratedGraph {
    #[serde(skip)]
    pub graph: Graph,
    pub tag: GraphTag,
    pub seed: Option<u64>,
}

fn done(edges: Vec<(Vertex, Vertex)>, n: usize, tag: GraphTag, seed: Option<u64>) -> GeneratedGraph {
    GeneratedGraph {
        graph: Graph::from_edges(n, edges).expect("generator builds a simple graph"),
        tag,
        seed,
    }
}

pub fn gen_path(n: usize) -> Result<GeneratedGraph, GenError> {
    require(n >= 1, || "path needs n >= 1".into())?;
    Ok(done((1..n).map(|i| (i - 1, i)).collect(), n, GraphTag::Path { n }, None))
}

pub fn gen_cycle(n: usize) -> Result<GeneratedGraph, GenError> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Ok(done((0..n).map(|i| (i, (i + 1) % n)).collect(), n, GraphTag::Cycle { n }, None))
}

/// `K_{1,n−1}`: `n` vertices in total, center 0.
pub fn gen_star(n: usize) -> Result<GeneratedGraph, GenError> {
    require(n >= 2, || format!("star needs n >= 2, got {n}"))?;
    Ok(done((1..n).map(|i| (0, i)).collect(), n, GraphTag::Star { n }, None))
}

pub fn grid_index(cols: usize, r: usize, c: usize) -> Vertex {
    (r - 1) * cols + (c - 1)
}

pub fn grid_coords(cols: usize, v: Vertex) -> (usize, usize) {
    (v / cols + 1, v % cols + 1)
}

pub fn gen_grid(m: usize, n: usize) -> Result<GeneratedGraph, GenError> {
    require(m >= 1 && n >= 1 && m * n >= 2, || format!("grid {m}x{n} too small"))?;
    let mut edges = Vec::new();
    for r in 1..=m {
        for c in 1..=n {
            let v = grid_index(n, r, c);
            if c < n {
                edges.push((v, grid_index(n, r, c + 1)));
            }
            if r < m {
                edges.push((v, grid_index(n, r + 1, c)));
            }
        }
    }
    Ok(done(edges, m * n, GraphTag::Grid { m, n }, None))
}

/// Height-`h` perfect binary tree in heap order: `2^(h+1) − 1` vertices,
/// `2^h` leaves.
pub fn gen_perfect_binary_tree(h: usize) -> Result<GeneratedGraph, GenError> {
    require((1..=20).contains(&h), || format!("height {h} outside 1..=20"))?;
    let n = (1usize << (h + 1)) - 1;
    Ok(done((1..n).map(|i| ((i - 1) / 2, i)).collect(), n, GraphTag::PerfectBinaryTree { h }, None))
}

fn relabel(edges: &mut [(Vertex, Vertex)], n: usize, rng: &mut ChaCha8Rng) {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    for (a, b) in edges.iter_mut() {
        *a = perm[*a];
        *b = perm[*b];
    }
}

pub fn gen_random_tree(n: usize, seed: u64) -> Result<GeneratedGraph, GenError> {
    require(n >= 1, || "tree needs n >= 1".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<_> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    relabel(&mut edges, n, &mut rng);
    Ok(done(edges, n, GraphTag::RandomTree { n, seed }, Some(seed)))
}

pub fn gen_random_unicyclic(n: usize, k: usize, seed: u64) -> Result<GeneratedGraph, GenError> {
    require(k >= 3 && n >= k, || format!("unicyclic needs n >= k >= 3, got n={n} k={k}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((k..n).map(|i| (rng.random_range(0..i), i)));
    relabel(&mut edges, n, &mut rng);
    Ok(done(edges, n, GraphTag::RandomUnicyclic { n, k, seed }, Some(seed)))
}

pub fn gen_random_connected(n: usize, m: usize, seed: u64) -> Result<GeneratedGraph, GenError> {
    require(n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2, || {
        format!("no connected simple graph with n={n} m={m}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<_> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    let mut spare: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !edges.contains(&(a, b)) && !edges.contains(&(b, a)))
        .collect();
    spare.shuffle(&mut rng);
    edges.extend(spare.into_iter().take(m + 1 - n));
    relabel(&mut edges, n, &mut rng);
    Ok(done(edges, n, GraphTag::RandomConnected { n, m, seed }, Some(seed)))
}

/// Connected split graph: a clique on `0..q` with `2 <= q < n`, and each
/// remaining vertex joined to a random nonempty subset of the clique.
pub fn gen_random_split(n: usize, seed: u64) -> Result<GeneratedGraph, GenError> {
    require(n >= 3, || format!("split graph needs n >= 3, got {n}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = rng.random_range(2..n);
    let mut edges: Vec<_> = (0..q).flat_map(|a| (a + 1..q).map(move |b| (a, b))).collect();
    for v in q..n {
        let first = rng.random_range(0..q);
        for c in 0..q {
            if c == first || rng.random_bool(0.4) {
                edges.push((c, v));
            }
        }
    }
    relabel(&mut edges, n, &mut rng);
    Ok(done(edges, n, GraphTag::RandomSplit { n, seed }, Some(seed)))
}

/// A `k`-cycle on `0..k`; at each `positions[i]` hangs a random tree with
/// `sizes[i]` vertices whose root is joined to that cycle vertex. Labels
/// are not shuffled, so the cycle stays on `0..k`.
pub fn gen_unicyclic_attachments(
    k: usize,
    positions: &[usize],
    sizes: &[usize],
    seed: u64,
) -> Result<GeneratedGraph, GenError> {
    require(k >= 3, || format!("cycle length {k} < 3"))?;
    require(positions.len() == sizes.len(), || "positions and sizes differ in length".into())?;
    require(positions.iter().all(|&p| p < k), || "attachment position off the cycle".into())?;
    require(sizes.iter().all(|&s| s >= 1), || "attached trees need at least one vertex".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (&p, &s) in positions.iter().zip(sizes) {
        let root = next;
        edges.push((p, root));
        for i in 1..s {
            edges.push((root + rng.random_range(0..i), root + i));
        }
        next += s;
    }
    let tag = GraphTag::UnicyclicAttachments {
        k,
        positions: positions.to_vec(),
        sizes: sizes.to_vec(),
        seed,
    };
    Ok(done(edges, next, tag, Some(seed)))
}

/// Chain of blocks `u_ii – u_i – v_i – v_ii` (i = 1..k) joined through
/// subtrees `T_1 .. T_{k+1}`; the designated edges are the `u_i v_i`.
///
/// `pads` has `k + 1` entries (empty means all zero). `pads[0]` and
/// `pads[k]` hang that many extra leaves on `u_11` and `v_kk`. A middle pad
/// of 0 merges `v_{i−1,i−1}` with `u_ii`; a pad `p ≥ 1` joins them by an
/// edge and hangs `p − 1` leaves on `v_{i−1,i−1}`.
pub fn gen_extremal_tree(k: usize, pads: &[usize]) -> Result<GeneratedGraph, GenError> {
    require(k >= 1, || "extremal tree needs k >= 1".into())?;
    let pads: Vec<usize> = if pads.is_empty() { vec![0; k + 1] } else { pads.to_vec() };
    require(pads.len() == k + 1, || format!("expected {} pads, got {}", k + 1, pads.len()))?;

    let mut edges = Vec::new();
    let mut n = 0;
    let mut fresh = || {
        n += 1;
        n - 1
    };
    let mut designated = Vec::new();
    let mut prev_vv: Option<Vertex> = None;
    for i in 0..k {
        let uu = match prev_vv {
            None => fresh(),
            Some(x) if pads[i] == 0 => x,
            Some(x) => {
                let y = fresh();
                edges.push((x, y));
                for _ in 1..pads[i] {
                    let leaf = fresh();
                    edges.push((x, leaf));
                }
                y
            }
        };
        if i == 0 {
            for _ in 0..pads[0] {
                let leaf = fresh();
                edges.push((uu, leaf));
            }
        }
        let u = fresh();
        let v = fresh();
        let vv = fresh();
        edges.extend([(uu, u), (u, v), (v, vv)]);
        designated.push(EdgeId::new(u, v).expect("distinct"));
        prev_vv = Some(vv);
    }
    let last = prev_vv.expect("k >= 1");
    for _ in 0..pads[k] {
        let leaf = fresh();
        edges.push((last, leaf));
    }
    Ok(done(edges, n, GraphTag::ExtremalTree { k, pads, designated }, None))
}

/// Clique on `0..n−2`; `v1 = n−2` and `v2 = n−1` are each joined to
/// `u1 = 0` and `u2 = 1` only.
pub fn gen_split_counterexample(n: usize) -> Result<GeneratedGraph, GenError> {
    require(n >= 6, || format!("split counterexample needs n >= 6, got {n}"))?;
    let (u1, u2, v1, v2) = (0, 1, n - 2, n - 1);
    let mut edges: Vec<_> = (0..n - 2).flat_map(|a| (a + 1..n - 2).map(move |b| (a, b))).collect();
    let fragile_pairs = [(u1, v1), (u1, v2), (u2, v1), (u2, v2)];
    edges.extend(fragile_pairs);
    let mut fragile: Vec<EdgeId> = fragile_pairs.iter().map(|&(a, b)| EdgeId::new(a, b).expect("distinct")).collect();
    fragile.sort();
    let tag = GraphTag::SplitCounterexample {
        n,
        u1,
        u2,
        v1,
        v2,
        fragile,
    };
    Ok(done(edges, n, tag, None))
}

/// Rebuilds a graph from its tag.
pub fn regenerate(tag: &GraphTag) -> Result<GeneratedGraph, GenError> {
    match tag {
        GraphTag::Path { n } => gen_path(*n),
        GraphTag::Cycle { n } => gen_cycle(*n),
        GraphTag::Star { n } => gen_star(*n),
        GraphTag::Grid { m, n } => gen_grid(*m, *n),
        GraphTag::PerfectBinaryTree { h } => gen_perfect_binary_tree(*h),
        GraphTag::RandomTree { n, seed } => gen_random_tree(*n, *seed),
        GraphTag::RandomUnicyclic { n, k, seed } => gen_random_unicyclic(*n, *k, *seed),
        GraphTag::RandomConnected { n, m, seed } => gen_random_connected(*n, *m, *seed),
        GraphTag::RandomSplit { n, seed } => gen_random_split(*n, *seed),
        GraphTag::UnicyclicAttachments {
            k,
            positions,
            sizes,
            seed,
        } => gen_unicyclic_attachments(*k, positions, sizes, *seed),
        GraphTag::ExtremalTree { k, pads, .. } => gen_extremal_tree(*k, pads),
        GraphTag::SplitCounterexample { n, .. } => gen_split_counterexample(*n),
    }
}
