//! Exact minimum MEG-set search.
//!
//! Each component is solved on its own. Within a component the search
//! seeds the forced vertices, restricts candidates to non-excluded
//! vertices, takes a greedy cover as an upper bound and then tries sizes
//! from the lower bound upward. At each size a depth-first search over
//! candidates in increasing order returns the first cover it meets, which
//! is the lexicographically smallest cover of that size.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::monitor::{excluded_vertices, forced_vertices, monitor_table, MonitorTable};
use crate::structure::components;

pub const DEFAULT_BUDGET: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest component (in vertices) the exact search will accept.
    pub budget: usize,
    /// Seed forced vertices and skip excluded ones.
    pub use_structure_pruning: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: DEFAULT_BUDGET,
            use_structure_pruning: true,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(budget: usize) -> Self {
        SolverConfig {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("component of {size} vertices exceeds the exact-solver budget of {budget}")]
    BudgetExceeded { size: usize, budget: usize },
}

/// Pair of certificate vertices monitoring one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub edge: EdgeId,
    pub pair: (Vertex, Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MegCertificate {
    pub vertex_set: BTreeSet<Vertex>,
    pub size: usize,
    pub forced: BTreeSet<Vertex>,
    pub witnesses: Vec<Witness>,
    pub optimal: bool,
}

/// Minimum MEG-set with the lexicographically smallest vertex set.
pub fn min_meg(g: &Graph) -> Result<MegCertificate, SolverError> {
    min_meg_with(g, SolverConfig::default())
}

pub fn min_meg_with(g: &Graph, cfg: SolverConfig) -> Result<MegCertificate, SolverError> {
    let mut vertex_set = BTreeSet::new();
    let mut forced = BTreeSet::new();
    let mut witnesses = Vec::new();
    for comp in components(g) {
        let (h, map) = g.induced(&comp);
        if h.m() == 0 {
            continue;
        }
        check_budget(h.n(), cfg.budget)?;
        let table = monitor_table(&h);
        let local = solve_component(&h, &table, cfg.use_structure_pruning);
        let f = forced_vertices(&h);
        vertex_set.extend(local.iter().map(|&v| map[v]));
        forced.extend(f.iter().filter(|v| local.contains(v)).map(|&v| map[v]));
        witnesses.extend(component_witnesses(&table, &local).into_iter().map(|w| Witness {
            edge: EdgeId::new(map[w.edge.a()], map[w.edge.b()]).expect("mapped edge"),
            pair: (map[w.pair.0], map[w.pair.1]),
        }));
    }
    witnesses.sort_by_key(|w| w.edge);
    Ok(MegCertificate {
        size: vertex_set.len(),
        vertex_set,
        forced,
        witnesses,
        optimal: true,
    })
}

pub fn meg_number(g: &Graph) -> Result<usize, SolverError> {
    min_meg(g).map(|c| c.size)
}

pub fn meg_number_with(g: &Graph, cfg: SolverConfig) -> Result<usize, SolverError> {
    min_meg_with(g, cfg).map(|c| c.size)
}

fn check_budget(size: usize, budget: usize) -> Result<(), SolverError> {
    if size > budget {
        Err(SolverError::BudgetExceeded { size, budget })
    } else {
        Ok(())
    }
}

/// Lexicographically smallest witness pair for each edge.
fn component_witnesses(table: &MonitorTable, set: &BTreeSet<Vertex>) -> Vec<Witness> {
    let set: Vec<Vertex> = set.iter().copied().collect();
    let mut out: BTreeMap<usize, (Vertex, Vertex)> = BTreeMap::new();
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if let Some(row) = table.row(a, b) {
                for e in row.ones() {
                    out.entry(e).or_insert((a, b));
                }
            }
        }
    }
    out.into_iter()
        .map(|(e, pair)| Witness {
            edge: table.edges()[e],
            pair,
        })
        .collect()
}

fn solve_component(h: &Graph, table: &MonitorTable, pruning: bool) -> BTreeSet<Vertex> {
    if pruning {
        let forced = forced_vertices(h);
        let excluded = excluded_vertices(h);
        let seeds: Vec<Vertex> = forced.iter().copied().collect();
        let cands: Vec<Vertex> = h
            .vertices()
            .filter(|v| !forced.contains(v) && !excluded.contains(v))
            .collect();
        if let Some(s) = Search::new(table, seeds, cands).minimum() {
            return s;
        }
    }
    let cands: Vec<Vertex> = h.vertices().collect();
    Search::new(table, Vec::new(), cands)
        .minimum()
        .expect("the whole vertex set monitors every edge")
}

/// Depth-first search over supersets of `seeds` drawn from `cands`.
struct Search<'a> {
    table: &'a MonitorTable,
    seeds: Vec<Vertex>,
    cands: Vec<Vertex>,
    /// `reach[i]`: everything a pair with one member in `cands[i..]` can cover.
    reach: Vec<FixedBitSet>,
    base: FixedBitSet,
}

impl<'a> Search<'a> {
    fn new(table: &'a MonitorTable, seeds: Vec<Vertex>, cands: Vec<Vertex>) -> Self {
        let m = table.m();
        let pool: Vec<Vertex> = seeds.iter().chain(&cands).copied().collect();
        let mut reach = vec![FixedBitSet::with_capacity(m); cands.len() + 1];
        for i in (0..cands.len()).rev() {
            let mut r = reach[i + 1].clone();
            for &b in &pool {
                if let Some(row) = table.row(cands[i], b) {
                    r.union_with(row);
                }
            }
            reach[i] = r;
        }
        let base = table.coverage(&seeds);
        Search {
            table,
            seeds,
            cands,
            reach,
            base,
        }
    }

    fn full(&self, cov: &FixedBitSet) -> bool {
        cov.count_ones(..) == self.table.m()
    }

    fn greedy_size(&self) -> Option<usize> {
        let mut chosen = self.seeds.clone();
        let mut cov = self.base.clone();
        let mut left: Vec<Vertex> = self.cands.clone();
        while !self.full(&cov) {
            let (idx, _, next) = left
                .iter()
                .enumerate()
                .map(|(i, &w)| {
                    let mut c = cov.clone();
                    for &b in &chosen {
                        c.union_with(self.table.row(w, b).expect("distinct"));
                    }
                    (i, c.count_ones(..), c)
                })
                .max_by_key(|&(i, gain, _)| (gain, std::cmp::Reverse(i)))?;
            chosen.push(left.remove(idx));
            cov = next;
        }
        Some(chosen.len())
    }

    /// Lexicographically smallest cover of minimum size, if any exists.
    fn minimum(&self) -> Option<BTreeSet<Vertex>> {
        let upper = self.greedy_size()?;
        let lower = self.seeds.len().max(2);
        for k in lower..=upper {
            let mut found = None;
            self.each_cover(k, &mut |s| {
                found = Some(s.iter().copied().collect());
                false
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Calls `visit` on every cover of exactly `k` vertices in lexicographic
    /// order until it returns false.
    fn each_cover(&self, k: usize, visit: &mut dyn FnMut(&BTreeSet<Vertex>) -> bool) {
        if k < self.seeds.len() || k - self.seeds.len() > self.cands.len() {
            return;
        }
        let mut chosen = self.seeds.clone();
        self.dfs(&mut chosen, &self.base, 0, k - self.seeds.len(), visit);
    }

    fn dfs(
        &self,
        chosen: &mut Vec<Vertex>,
        cov: &FixedBitSet,
        start: usize,
        remaining: usize,
        visit: &mut dyn FnMut(&BTreeSet<Vertex>) -> bool,
    ) -> bool {
        if remaining == 0 {
            if self.full(cov) {
                return visit(&chosen.iter().copied().collect());
            }
            return true;
        }
        if self.cands.len() - start < remaining {
            return true;
        }
        let mut bound = cov.clone();
        bound.union_with(&self.reach[start]);
        if !self.full(&bound) {
            return true;
        }
        for i in start..=self.cands.len() - remaining {
            let w = self.cands[i];
            let mut next = cov.clone();
            for &b in chosen.iter() {
                next.union_with(self.table.row(w, b).expect("distinct"));
            }
            chosen.push(w);
            let go_on = self.dfs(chosen, &next, i + 1, remaining - 1, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// All minimum MEG-sets in lexicographic order, up to `limit`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub size: usize,
    pub sets: Vec<BTreeSet<Vertex>>,
    pub truncated: bool,
}

/// Enumerates minimum MEG-sets without any structural pruning, so that the
/// forced/excluded rules can be tested against the result.
pub fn enumerate_min_meg_sets(g: &Graph, limit: usize, budget: usize) -> Result<Enumeration, SolverError> {
    for comp in components(g) {
        if comp.len() > 1 {
            check_budget(comp.len(), budget)?;
        }
    }
    let table = monitor_table(g);
    if g.m() == 0 {
        return Ok(Enumeration {
            size: 0,
            sets: vec![BTreeSet::new()],
            truncated: false,
        });
    }
    let size = meg_number_with(
        g,
        SolverConfig {
            budget,
            use_structure_pruning: false,
        },
    )?;
    let cands: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let search = Search::new(&table, Vec::new(), cands);
    let mut sets = Vec::new();
    let mut truncated = false;
    search.each_cover(size, &mut |s| {
        if sets.len() == limit {
            truncated = true;
            return false;
        }
        sets.push(s.clone());
        true
    });
    Ok(Enumeration { size, sets, truncated })
}
