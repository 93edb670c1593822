//! Structural classifiers: components, cut vertices and cut edges, pendant
//! and simplicial vertices.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    /// Each component sorted, components ordered by smallest vertex.
    pub components: Vec<Vec<Vertex>>,
    pub cut_vertices: BTreeSet<Vertex>,
    pub cut_edges: BTreeSet<EdgeId>,
    pub pendant_vertices: BTreeSet<Vertex>,
    /// Vertices of degree at least 1 whose neighborhood is a clique.
    pub simplicial_vertices: BTreeSet<Vertex>,
    pub degrees: Vec<usize>,
}

pub fn structure(g: &Graph) -> StructureSummary {
    let (cut_vertices, cut_edges) = cut_structure(g);
    let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    StructureSummary {
        components: components(g),
        cut_vertices,
        cut_edges,
        pendant_vertices: g.vertices().filter(|&v| degrees[v] == 1).collect(),
        simplicial_vertices: g
            .vertices()
            .filter(|&v| degrees[v] >= 1 && g.neighborhood_is_clique(v))
            .collect(),
        degrees,
    }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || components(g).len() == 1
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.m() + 1 == g.n() && is_connected(g)
}

/// Cut vertices and cut edges from one iterative lowpoint DFS.
pub fn cut_structure(g: &Graph) -> (BTreeSet<Vertex>, BTreeSet<EdgeId>) {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut_vertices = BTreeSet::new();
    let mut cut_edges = BTreeSet::new();
    let mut timer = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor position)
        let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (x, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&y) = g.neighbors(x).get(*pos) {
                *pos += 1;
                if Some(y) == parent {
                    continue;
                }
                if disc[y] == usize::MAX {
                    disc[y] = timer;
                    low[y] = timer;
                    timer += 1;
                    if x == root {
                        root_children += 1;
                    }
                    stack.push((y, Some(x), 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[x]);
                    if low[x] > disc[p] {
                        cut_edges.insert(EdgeId::new(p, x).expect("tree edge"));
                    }
                    if p != root && low[x] >= disc[p] {
                        cut_vertices.insert(p);
                    }
                }
            }
        }
        if root_children >= 2 {
            cut_vertices.insert(root);
        }
    }
    (cut_vertices, cut_edges)
}
