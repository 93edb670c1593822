//! Closed-form meg values for paths, cycles, trees, unicyclic graphs,
//! rectangular grids and split graphs, plus a small class recognizer.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::structure::{is_connected, is_tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{family} needs at least {min}, got {got}")]
    TooSmall { family: &'static str, min: usize, got: usize },
    #[error("graph is not a tree with at least one edge")]
    NotATree,
    #[error("graph is not connected with exactly one cycle")]
    NotUnicyclic,
    #[error("graph is not a connected split graph on at least 3 vertices")]
    NotSplit,
}

fn at_least(family: &'static str, min: usize, got: usize) -> Result<(), FormulaError> {
    if got < min {
        Err(FormulaError::TooSmall { family, min, got })
    } else {
        Ok(())
    }
}

pub fn meg_path(n: usize) -> Result<usize, FormulaError> {
    at_least("path", 2, n)?;
    Ok(2)
}

pub fn meg_cycle(n: usize) -> Result<usize, FormulaError> {
    at_least("cycle", 3, n)?;
    Ok(if n == 4 { 4 } else { 3 })
}

pub fn leaves(g: &Graph) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.degree(v) == 1).collect()
}

pub fn meg_tree(t: &Graph) -> Result<usize, FormulaError> {
    if !is_tree(t) || t.m() == 0 {
        return Err(FormulaError::NotATree);
    }
    Ok(leaves(t).len())
}

pub fn meg_grid(m: usize, n: usize) -> Result<usize, FormulaError> {
    at_least("grid side", 2, m.min(n))?;
    Ok(2 * (m + n - 2))
}

/// Which branch of the unicyclic formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnicyclicCase {
    /// k ∈ {3, 4}: l + k − |V⁺|
    ShortCycle,
    /// |V⁺| = 0: 3
    BareCycle,
    /// |V⁺| = 1: l + 2
    OneAttachment,
    /// |V⁺| = 2, k even, attachments adjacent or opposite: l + p + 1
    PairAdjacentOrOpposite,
    /// everything else: l + p
    General,
}

impl UnicyclicCase {
    pub const ALL: [UnicyclicCase; 5] = [
        UnicyclicCase::ShortCycle,
        UnicyclicCase::BareCycle,
        UnicyclicCase::OneAttachment,
        UnicyclicCase::PairAdjacentOrOpposite,
        UnicyclicCase::General,
    ];

    pub fn label(self) -> &'static str {
        match self {
            UnicyclicCase::ShortCycle => "unicyclic k<=4: l+k-|V+|",
            UnicyclicCase::BareCycle => "unicyclic |V+|=0: 3",
            UnicyclicCase::OneAttachment => "unicyclic |V+|=1: l+2",
            UnicyclicCase::PairAdjacentOrOpposite => "unicyclic |V+|=2 adjacent/opposite, k even: l+p+1",
            UnicyclicCase::General => "unicyclic general: l+p",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnicyclicProfile {
    /// Cycle vertices in cyclic order, starting from the smallest id.
    pub cycle_vertices: Vec<Vertex>,
    pub k: usize,
    pub l: usize,
    pub v_plus: BTreeSet<Vertex>,
    /// 1 iff some arc of the cycle between consecutive V⁺ vertices (or the
    /// whole cycle when |V⁺| ≤ 1) has at least ⌈k/2⌉ edges. This is the
    /// value the formula uses.
    pub p: usize,
    /// 1 iff G[C ∖ V⁺] contains a path with at least ⌊k/2⌋ edges.
    pub p_as_stated: usize,
    /// Cycle distance between the two V⁺ vertices when |V⁺| = 2.
    pub pair_distance: Option<usize>,
}

impl UnicyclicProfile {
    pub fn case(&self) -> UnicyclicCase {
        let k = self.k;
        match self.v_plus.len() {
            _ if k <= 4 => UnicyclicCase::ShortCycle,
            0 => UnicyclicCase::BareCycle,
            1 => UnicyclicCase::OneAttachment,
            2 if k % 2 == 0 && matches!(self.pair_distance, Some(d) if d == 1 || d == k / 2) => {
                UnicyclicCase::PairAdjacentOrOpposite
            }
            _ => UnicyclicCase::General,
        }
    }

    /// Distinct from `case() == PairAdjacentOrOpposite`: two adjacent V⁺
    /// vertices on an odd cycle, which fall to the general case.
    pub fn adjacent_on_odd_cycle(&self) -> bool {
        self.k >= 5 && self.k % 2 == 1 && self.v_plus.len() == 2 && self.pair_distance == Some(1)
    }
}

pub fn is_unicyclic(g: &Graph) -> bool {
    g.n() >= 3 && g.m() == g.n() && is_connected(g)
}

pub fn unicyclic_profile(g: &Graph) -> Result<UnicyclicProfile, FormulaError> {
    if !is_unicyclic(g) {
        return Err(FormulaError::NotUnicyclic);
    }
    // strip leaves until only the cycle remains
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<Vertex> = g.vertices().filter(|&v| deg[v] == 1).collect();
    while let Some(x) = stack.pop() {
        alive[x] = false;
        for &y in g.neighbors(x) {
            if alive[y] {
                deg[y] -= 1;
                if deg[y] == 1 {
                    stack.push(y);
                }
            }
        }
    }
    let start = (0..g.n()).find(|&v| alive[v]).expect("a cycle survives");
    let mut cycle_vertices = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&y| alive[y] && y != prev)
            .expect("cycle continues");
        if next == start {
            break;
        }
        cycle_vertices.push(next);
        prev = cur;
        cur = next;
        debug_assert!(cycle_vertices.len() <= g.n());
    }
    let k = cycle_vertices.len();
    let v_plus: BTreeSet<Vertex> = cycle_vertices.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
    let positions: Vec<usize> = (0..k).filter(|&i| v_plus.contains(&cycle_vertices[i])).collect();

    // arcs between consecutive attachment points, in edges
    let arcs: Vec<usize> = match positions.len() {
        0 => vec![],
        1 => vec![k],
        _ => (0..positions.len())
            .map(|i| {
                let a = positions[i];
                let b = positions[(i + 1) % positions.len()];
                (b + k - a) % k
            })
            .collect(),
    };
    let (p, p_as_stated) = if arcs.is_empty() {
        // the whole cycle survives
        (1, 1)
    } else {
        let longest = *arcs.iter().max().expect("nonempty");
        let corrected = usize::from(2 * longest >= k);
        // a run of longest−1 free vertices spans longest−2 edges
        let stated = usize::from(longest >= 2 && longest - 2 >= k / 2);
        (corrected, stated)
    };
    let pair_distance = (positions.len() == 2).then(|| {
        let d = positions[1] - positions[0];
        d.min(k - d)
    });
    Ok(UnicyclicProfile {
        cycle_vertices,
        k,
        l: leaves(g).len(),
        v_plus,
        p,
        p_as_stated,
        pair_distance,
    })
}

pub fn meg_unicyclic(p: &UnicyclicProfile) -> usize {
    meg_unicyclic_with(p, p.p)
}

/// The unicyclic formula evaluated with an explicit value for p.
pub fn meg_unicyclic_with(prof: &UnicyclicProfile, p: usize) -> usize {
    let l = prof.l;
    match prof.case() {
        UnicyclicCase::ShortCycle => l + prof.k - prof.v_plus.len(),
        UnicyclicCase::BareCycle => 3,
        UnicyclicCase::OneAttachment => l + 2,
        UnicyclicCase::PairAdjacentOrOpposite => l + p + 1,
        UnicyclicCase::General => l + p,
    }
}

/// Clique/independent-set partition certifying a split graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: BTreeSet<Vertex>,
    pub independent: BTreeSet<Vertex>,
}

/// Degree-sequence split recognition. With degrees sorted descending and
/// `q = max{i : d_i ≥ i − 1}`, the graph is split iff
/// `Σ_{i≤q} d_i = q(q − 1) + Σ_{i>q} d_i`; the top `q` vertices form a clique.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let q = (1..=d.len()).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = d[..q].iter().sum();
    let tail: usize = d[q..].iter().sum();
    if head != q * q.saturating_sub(1) + tail {
        return None;
    }
    let part = SplitPartition {
        clique: order[..q].iter().copied().collect(),
        independent: order[q..].iter().copied().collect(),
    };
    debug_assert!(verify_partition(g, &part));
    Some(part)
}

fn verify_partition(g: &Graph, p: &SplitPartition) -> bool {
    let c: Vec<_> = p.clique.iter().copied().collect();
    let i: Vec<_> = p.independent.iter().copied().collect();
    c.iter().enumerate().all(|(j, &a)| c[j + 1..].iter().all(|&b| g.has_edge(a, b)))
        && i.iter().enumerate().all(|(j, &a)| i[j + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

/// `n` minus the number of vertices with a pendant neighbour.
pub fn meg_split(g: &Graph) -> Result<usize, FormulaError> {
    if g.n() < 3 || !is_connected(g) || split_partition(g).is_none() {
        return Err(FormulaError::NotSplit);
    }
    let with_pendant = g
        .vertices()
        .filter(|&v| g.neighbors(v).iter().any(|&u| g.degree(u) == 1))
        .count();
    Ok(g.n() - with_pendant)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassTag {
    Path,
    Cycle,
    Tree,
    Unicyclic,
    Split,
    Unknown,
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Path => "path",
            ClassTag::Cycle => "cycle",
            ClassTag::Tree => "tree",
            ClassTag::Unicyclic => "unicyclic",
            ClassTag::Split => "split",
            ClassTag::Unknown => "unknown",
        }
    }
}

/// Most specific class among path, cycle, tree, unicyclic, split.
pub fn classify(g: &Graph) -> ClassTag {
    let connected = is_connected(g);
    let max_deg = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    if g.n() >= 2 && is_tree(g) && max_deg <= 2 {
        ClassTag::Path
    } else if connected && g.n() >= 3 && g.vertices().all(|v| g.degree(v) == 2) {
        ClassTag::Cycle
    } else if g.n() >= 2 && is_tree(g) {
        ClassTag::Tree
    } else if is_unicyclic(g) {
        ClassTag::Unicyclic
    } else if connected && g.n() >= 3 && split_partition(g).is_some() {
        ClassTag::Split
    } else {
        ClassTag::Unknown
    }
}

/// Formula value for the recognized class, if the class has one.
pub fn class_formula(g: &Graph) -> Option<(ClassTag, usize)> {
    let tag = classify(g);
    let value = match tag {
        ClassTag::Path => meg_path(g.n()).ok()?,
        ClassTag::Cycle => meg_cycle(g.n()).ok()?,
        ClassTag::Tree => meg_tree(g).ok()?,
        ClassTag::Unicyclic => meg_unicyclic(&unicyclic_profile(g).ok()?),
        ClassTag::Split => meg_split(g).ok()?,
        ClassTag::Unknown => return None,
    };
    Some((tag, value))
}
