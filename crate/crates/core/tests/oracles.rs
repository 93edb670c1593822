//! Cross-checks against brute force written independently of the library:
//! its own BFS, its own edge deletion, subset scans over bitmasks.

use std::collections::{BTreeSet, VecDeque};

use meg_core::generators::{gen_grid, gen_random_connected, gen_random_tree, gen_random_unicyclic};
use meg_core::monitor::{excluded_vertices, forced_vertices};
use meg_core::solver::enumerate_min_meg_sets;
use meg_core::{all_pairs, min_meg, Graph};

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if d[y].is_none() {
                d[y] = Some(d[x].unwrap() + 1);
                q.push_back(y);
            }
        }
    }
    d
}

/// `cover[pair]` = bitmask of edges whose removal lengthens that pair.
fn brute_cover(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
    let full = adjacency(n, &edges);
    let base: Vec<_> = (0..n).map(|s| bfs(&full, s)).collect();
    let mut cover = vec![vec![0u64; n]; n];
    for (i, _) in edges.iter().enumerate() {
        let rest: Vec<_> = edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
        let adj = adjacency(n, &rest);
        for u in 0..n {
            let d = bfs(&adj, u);
            for v in 0..n {
                if u != v {
                    if let Some(before) = base[u][v] {
                        if d[v].is_none_or(|after| after > before) {
                            cover[u][v] |= 1 << i;
                        }
                    }
                }
            }
        }
    }
    cover
}

fn covers(cover: &[Vec<u64>], mask: u32, m: usize) -> bool {
    let mut got = 0u64;
    for (u, row) in cover.iter().enumerate() {
        if mask >> u & 1 == 1 {
            for (v, bits) in row.iter().enumerate().skip(u + 1) {
                if mask >> v & 1 == 1 {
                    got |= bits;
                }
            }
        }
    }
    got.count_ones() as usize == m
}

/// All minimum MEG-sets by scanning every subset.
fn brute_min_sets(g: &Graph) -> (usize, Vec<BTreeSet<usize>>) {
    let n = g.n();
    assert!(n <= 16);
    if g.m() == 0 {
        return (0, vec![BTreeSet::new()]);
    }
    let cover = brute_cover(g);
    let mut best = usize::MAX;
    let mut sets = Vec::new();
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > best || !covers(&cover, mask, g.m()) {
            continue;
        }
        // isolated vertices never belong to a minimum set
        if (0..n).any(|v| mask >> v & 1 == 1 && g.degree(v) == 0) {
            continue;
        }
        if size < best {
            best = size;
            sets.clear();
        }
        sets.push((0..n).filter(|v| mask >> v & 1 == 1).collect());
    }
    sets.sort();
    (best, sets)
}

fn samples() -> Vec<Graph> {
    let mut out = Vec::new();
    for seed in 0..40u64 {
        let n = 4 + (seed % 6) as usize;
        out.push(gen_random_tree(n, seed).unwrap().graph);
        out.push(gen_random_unicyclic(n.max(5), 3 + (seed % 3) as usize, seed).unwrap().graph);
        let max_m = n * (n - 1) / 2;
        let m = (n - 1 + (seed as usize * 7) % (max_m - n + 2)).min(max_m);
        out.push(gen_random_connected(n, m, seed).unwrap().graph);
    }
    // a forest with an isolated vertex
    out.push(Graph::from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap());
    out
}

#[test]
fn solver_matches_subset_scan() {
    for g in samples() {
        let (best, sets) = brute_min_sets(&g);
        let cert = min_meg(&g).unwrap();
        assert_eq!(cert.size, best, "{g:?}");
        // lexicographically smallest minimum set
        assert_eq!(Some(&cert.vertex_set), sets.first(), "{g:?}");
        let e = enumerate_min_meg_sets(&g, 10_000, 24).unwrap();
        assert_eq!(e.sets, sets, "{g:?}");
    }
}

#[test]
fn forced_and_excluded_agree_with_all_minimum_sets() {
    for g in samples() {
        if meg_core::structure::components(&g).len() != 1 {
            continue;
        }
        let (_, sets) = brute_min_sets(&g);
        let forced = forced_vertices(&g);
        let excluded = excluded_vertices(&g);
        assert!(forced.is_disjoint(&excluded));
        for s in &sets {
            assert!(forced.is_subset(s), "{g:?}");
            assert!(excluded.is_disjoint(s), "{g:?}");
        }
        // forced is exactly the intersection of all MEG-sets: v is forced iff
        // V − v is not a MEG-set
        let cover = brute_cover(&g);
        let all = (1u32 << g.n()) - 1;
        for v in g.vertices() {
            let without = !covers(&cover, all & !(1 << v), g.m());
            assert_eq!(forced.contains(&v), without, "vertex {v} of {g:?}");
        }
    }
}

/// Shortest-path counts by listing every shortest path.
fn count_paths(adj: &[Vec<usize>], u: usize, v: usize, dist: &[Option<usize>]) -> u64 {
    if u == v {
        return 1;
    }
    let d = dist[v].unwrap();
    adj[v]
        .iter()
        .filter(|&&w| dist[w] == Some(d - 1))
        .map(|&w| count_paths(adj, u, w, dist))
        .sum()
}

#[test]
fn sigma_matches_path_listing() {
    let mut graphs = samples();
    graphs.push(gen_grid(3, 3).unwrap().graph);
    graphs.push(gen_grid(4, 5).unwrap().graph);
    for g in graphs {
        let edges: Vec<_> = g.edges().iter().map(|e| e.endpoints()).collect();
        let adj = adjacency(g.n(), &edges);
        let dt = all_pairs(&g, true);
        for u in g.vertices() {
            let dist = bfs(&adj, u);
            for v in g.vertices() {
                let expected = if dist[v].is_some() { count_paths(&adj, u, v, &dist) } else { 0 };
                assert_eq!(dt.sigma(u, v).unwrap(), &expected.into(), "{u}->{v}");
                assert_eq!(dt.hops(u, v), dist[v].map(|d| d as u32));
            }
        }
    }
    let g = gen_grid(3, 3).unwrap().graph;
    assert_eq!(all_pairs(&g, true).sigma(0, 8).unwrap(), &6u32.into());
}
