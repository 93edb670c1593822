//! Theorem-verification suites: each one generates seeded instances, runs
//! the matching predictor or bound checker, and compares with the exact
//! solver.
//!
//! Seeding: one `ChaCha8Rng` seeded with the command-line seed draws a
//! `u64` per job, in job order; each job seeds its own `ChaCha8Rng` from
//! that value. Jobs run in parallel and are collected in job order.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use meg_core::dynamic::{
    self, check_cut_edge_removal, check_cut_vertex_incident_removal, check_pendant_removal,
    check_simplicial_incident_removal, grid_edge_context_by_id, predict_grid_deletion, predict_grid_deletion_as_stated,
    predict_tree_deletion, predict_unicyclic_deletion, tree_k_deletion_bounds, DeletionReport, Prediction, Verdict,
};
use meg_core::formulas::{self, meg_unicyclic, meg_unicyclic_with, unicyclic_profile};
use meg_core::generators::*;
use meg_core::monitor::{excluded_vertices, forced_vertices, monitors, monitors_by_counts};
use meg_core::solver::{enumerate_min_meg_sets, meg_number_with, SolverConfig};
use meg_core::structure::{cut_structure, structure};
use meg_core::{all_pairs, EdgeId, Graph, GraphTag};

/// Wall-clock cap per suite; jobs not started by then are skipped.
pub const SOFT_CAP: Duration = Duration::from_secs(600);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteId {
    TreeDeletion,
    GridDeletion,
    PendantBounds,
    CutEdgeBounds,
    CutVertexBounds,
    SimplicialBounds,
    UnicyclicFormula,
    UnicyclicDeletion,
    TreeKBounds,
    ClassFormulas,
    OracleEquivalence,
    ForcedVertices,
    ExtremalConstruction,
    SplitExtremal,
}

impl SuiteId {
    pub const ALL: [SuiteId; 14] = [
        SuiteId::TreeDeletion,
        SuiteId::GridDeletion,
        SuiteId::PendantBounds,
        SuiteId::CutEdgeBounds,
        SuiteId::CutVertexBounds,
        SuiteId::SimplicialBounds,
        SuiteId::UnicyclicFormula,
        SuiteId::UnicyclicDeletion,
        SuiteId::TreeKBounds,
        SuiteId::ClassFormulas,
        SuiteId::OracleEquivalence,
        SuiteId::ForcedVertices,
        SuiteId::ExtremalConstruction,
        SuiteId::SplitExtremal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::TreeDeletion => "tree-deletion",
            SuiteId::GridDeletion => "grid-deletion",
            SuiteId::PendantBounds => "pendant-bounds",
            SuiteId::CutEdgeBounds => "cut-edge-bounds",
            SuiteId::CutVertexBounds => "cut-vertex-bounds",
            SuiteId::SimplicialBounds => "simplicial-bounds",
            SuiteId::UnicyclicFormula => "unicyclic-formula",
            SuiteId::UnicyclicDeletion => "unicyclic-deletion",
            SuiteId::TreeKBounds => "tree-k-bounds",
            SuiteId::ClassFormulas => "class-formulas",
            SuiteId::OracleEquivalence => "oracle-equivalence",
            SuiteId::ForcedVertices => "forced-vertices",
            SuiteId::ExtremalConstruction => "extremal-construction",
            SuiteId::SplitExtremal => "split-extremal",
        }
    }

    pub fn theorem(self) -> &'static str {
        match self {
            SuiteId::TreeDeletion => "tree single-edge deletion: meg' fixed by the endpoint degrees",
            SuiteId::GridDeletion => "grid edge deletion: k+2, k-|S1|+2, k-c, k-1, k by edge type",
            SuiteId::PendantBounds => "pendant-edge removal: meg-l <= meg' <= meg",
            SuiteId::CutEdgeBounds => "cut-edge removal, both ends of degree >= 2: meg <= meg' <= meg+2",
            SuiteId::CutVertexBounds => "removal of an edge at a cut vertex: meg' <= meg+2",
            SuiteId::SimplicialBounds => "removal of an edge at a simplicial vertex: meg-deg <= meg' <= meg+1",
            SuiteId::UnicyclicFormula => "unicyclic graphs: meg from k, l, |V+| and p",
            SuiteId::UnicyclicDeletion => "unicyclic edge deletion: l, l+1, l+2 on the cycle; meg(G1)+meg(G2) off it",
            SuiteId::TreeKBounds => "deleting k tree edges: 0 <= meg' <= meg+2k, strict when k > ceil(|E|/2)-1",
            SuiteId::ClassFormulas => "meg of paths, cycles, trees, unicyclic graphs, grids and split graphs",
            SuiteId::OracleEquivalence => "monitoring definition: distance increase equals full shortest-path count",
            SuiteId::ForcedVertices => "forced, simplicial and pendant vertices in, cut structure out of every minimum set",
            SuiteId::ExtremalConstruction => "block-chain trees: deleting the k designated edges gives meg+2k",
            SuiteId::SplitExtremal => "split graphs: meg = n - #(vertices with a pendant neighbour); extremality is fragile",
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            SuiteId::TreeDeletion => 300,
            SuiteId::OracleEquivalence => 200,
            SuiteId::ForcedVertices => 300,
            SuiteId::ClassFormulas => 240,
            SuiteId::ExtremalConstruction => 16,
            SuiteId::SplitExtremal => 9,
            _ => 100,
        }
    }

    /// Suites whose job list does not depend on `trials`.
    pub fn fixed_jobs(self) -> Option<usize> {
        match self {
            SuiteId::GridDeletion => Some(grid_jobs().len()),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Option<SuiteId> {
        SuiteId::ALL.into_iter().find(|id| id.name() == s)
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteSpec {
    pub id: SuiteId,
    pub trials: usize,
    pub seed: u64,
    pub budget: usize,
}

impl SuiteSpec {
    pub fn new(id: SuiteId, seed: u64) -> Self {
        SuiteSpec {
            id,
            trials: id.default_trials(),
            seed,
            budget: meg_core::solver::DEFAULT_BUDGET,
        }
    }
}

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub id: String,
    pub case: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<DeletionReport>,
    /// Tallies merged into [`TheoremReport::notes`].
    #[serde(skip)]
    pub notes: Vec<(String, usize)>,
}

impl InstanceRecord {
    fn note(&mut self, key: impl Into<String>) {
        self.notes.push((key.into(), 1));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub suite: SuiteId,
    pub theorem: &'static str,
    pub seed: u64,
    pub trials: usize,
    pub budget: usize,
    /// matches + within_bounds + not_covered + violations
    pub instances: usize,
    pub matches: usize,
    pub within_bounds: usize,
    pub not_covered: usize,
    pub violations: usize,
    /// Instances whose exact value exceeded the solver budget or the time cap.
    pub skipped: usize,
    pub truncated: bool,
    pub cases: BTreeMap<String, usize>,
    pub notes: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub records: Vec<InstanceRecord>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn note(&self, key: &str) -> usize {
        self.notes.get(key).copied().unwrap_or(0)
    }
}

pub fn run_suite(spec: SuiteSpec, verbose: bool) -> TheoremReport {
    run_suite_capped(spec, verbose, SOFT_CAP)
}

pub fn run_suite_capped(spec: SuiteSpec, verbose: bool, cap: Duration) -> TheoremReport {
    let start = Instant::now();
    let jobs = spec.id.fixed_jobs().unwrap_or(spec.trials);
    let mut master = ChaCha8Rng::seed_from_u64(spec.seed);
    let seeds: Vec<u64> = (0..jobs).map(|_| master.random()).collect();
    let cfg = SolverConfig::with_budget(spec.budget);
    let results: Vec<Option<Vec<InstanceRecord>>> = seeds
        .par_iter()
        .enumerate()
        .map(|(job, &seed)| {
            if start.elapsed() > cap {
                return None;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = run_job(spec.id, job, &mut rng, cfg);
            for (i, r) in out.iter_mut().enumerate() {
                r.id = if r.id.is_empty() {
                    format!("{}/{job:04}.{i}", spec.id)
                } else {
                    format!("{}/{job:04}.{i}/{}", spec.id, r.id)
                };
                if let Some(rep) = r.report.as_mut() {
                    rep.graph = r.id.clone();
                }
            }
            Some(out)
        })
        .collect();

    let mut report = TheoremReport {
        suite: spec.id,
        theorem: spec.id.theorem(),
        seed: spec.seed,
        trials: jobs,
        budget: spec.budget,
        instances: 0,
        matches: 0,
        within_bounds: 0,
        not_covered: 0,
        violations: 0,
        skipped: 0,
        truncated: false,
        cases: BTreeMap::new(),
        notes: BTreeMap::new(),
        records: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for result in results {
        let Some(records) = result else {
            report.truncated = true;
            report.skipped += 1;
            continue;
        };
        for r in records {
            match r.verdict {
                Verdict::Match => report.matches += 1,
                Verdict::WithinBounds => report.within_bounds += 1,
                Verdict::NotCovered => report.not_covered += 1,
                Verdict::Violation => report.violations += 1,
                Verdict::Skipped => report.skipped += 1,
            }
            *report.cases.entry(r.case.clone()).or_default() += 1;
            for (key, count) in &r.notes {
                *report.notes.entry(key.clone()).or_default() += count;
            }
            if verbose || r.verdict == Verdict::Violation {
                report.records.push(r);
            }
        }
    }
    report.instances = report.matches + report.within_bounds + report.not_covered + report.violations;
    report.wall_time = start.elapsed();
    report
}

fn exact(g: &Graph, cfg: SolverConfig) -> Option<usize> {
    // the only solver error is a budget overrun
    meg_number_with(g, cfg).ok()
}

fn skipped(case: &str) -> InstanceRecord {
    InstanceRecord {
        id: String::new(),
        case: case.to_string(),
        verdict: Verdict::Skipped,
        report: None,
        notes: vec![],
    }
}

/// Exact values before and after deleting `edges`, judged against the
/// prediction built from `meg_before`.
fn deletion_record(
    g: &Graph,
    edges: &[EdgeId],
    cfg: SolverConfig,
    predict: impl FnOnce(usize) -> Prediction,
) -> InstanceRecord {
    let Some(before) = exact(g, cfg) else {
        return skipped("over budget");
    };
    let Some(after) = exact(&g.delete_edges(edges).expect("edges present"), cfg) else {
        return skipped("over budget");
    };
    let prediction = predict(before);
    let rep = dynamic::report("", edges, before, after, prediction);
    let mut rec = InstanceRecord {
        id: String::new(),
        case: rep.prediction.case.clone(),
        verdict: rep.verdict,
        report: None,
        notes: vec![],
    };
    if rep.prediction.kind == dynamic::PredictionKind::Interval {
        if rep.prediction.lower == Some(after) {
            rec.note("lower bound attained");
        }
        if rep.prediction.upper == Some(after) {
            rec.note("upper bound attained");
        }
    }
    rec.report = Some(rep);
    rec
}

/// Formula value checked against the exact solver.
fn formula_record(g: &Graph, cfg: SolverConfig, prediction: Prediction) -> InstanceRecord {
    let Some(value) = exact(g, cfg) else {
        return skipped("over budget");
    };
    let rep = dynamic::report("", &[], value, value, prediction);
    InstanceRecord {
        id: String::new(),
        case: rep.prediction.case.clone(),
        verdict: rep.verdict,
        report: Some(rep),
        notes: vec![],
    }
}

fn check_record(case: &str, ok: bool, notes: Vec<(String, usize)>) -> InstanceRecord {
    InstanceRecord {
        id: String::new(),
        case: case.to_string(),
        verdict: if ok { Verdict::Match } else { Verdict::Violation },
        report: None,
        notes,
    }
}

fn run_job(id: SuiteId, job: usize, rng: &mut ChaCha8Rng, cfg: SolverConfig) -> Vec<InstanceRecord> {
    match id {
        SuiteId::TreeDeletion => vec![tree_deletion(job, rng, cfg)],
        SuiteId::GridDeletion => vec![grid_deletion(job, cfg)],
        SuiteId::PendantBounds => vec![pendant_bounds(job, rng, cfg)],
        SuiteId::CutEdgeBounds => vec![cut_edge_bounds(job, rng, cfg)],
        SuiteId::CutVertexBounds => vec![cut_vertex_bounds(job, rng, cfg)],
        SuiteId::SimplicialBounds => vec![simplicial_bounds(job, rng, cfg)],
        SuiteId::UnicyclicFormula => vec![unicyclic_formula(job, rng, cfg)],
        SuiteId::UnicyclicDeletion => vec![unicyclic_deletion(rng, cfg)],
        SuiteId::TreeKBounds => vec![tree_k_bounds(rng, cfg)],
        SuiteId::ClassFormulas => vec![class_formulas(job, rng, cfg)],
        SuiteId::OracleEquivalence => vec![oracle_equivalence(rng)],
        SuiteId::ForcedVertices => vec![forced_lemmas(rng, cfg)],
        SuiteId::ExtremalConstruction => vec![extremal_construction(job, rng, cfg)],
        SuiteId::SplitExtremal => split_extremal(job, cfg),
    }
}

/// Degree class of a tree edge, 0..6 in the order (1,1), (1,2), (1,>=3),
/// (2,2), (2,>=3), (>=3,>=3).
fn tree_edge_class(g: &Graph, e: EdgeId) -> usize {
    let (a, b) = (g.degree(e.a()), g.degree(e.b()));
    match (a.min(b), a.max(b)) {
        (1, 1) => 0,
        (1, 2) => 1,
        (1, _) => 2,
        (2, 2) => 3,
        (2, _) => 4,
        _ => 5,
    }
}

fn tree_deletion(job: usize, rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let target = job % 6;
    let (g, e) = loop {
        let n = if target == 0 { 2 } else { rng.random_range(3..=20) };
        let g = gen_random_tree(n, rng.random()).expect("n >= 2").graph;
        let hits: Vec<EdgeId> = g.edges().iter().copied().filter(|&e| tree_edge_class(&g, e) == target).collect();
        if let Some(&e) = hits.choose(rng) {
            break (g, e);
        }
    };
    deletion_record(&g, &[e], cfg, |_| predict_tree_deletion(&g, e).expect("tree edge"))
}

const GRIDS: [(usize, usize); 5] = [(2, 2), (2, 5), (3, 3), (3, 4), (4, 4)];

/// Every edge of the fixed grids, then two 5×5 edges that need a budget of 25.
fn grid_jobs() -> Vec<(usize, usize, EdgeId)> {
    let mut jobs = Vec::new();
    for (m, n) in GRIDS {
        let g = gen_grid(m, n).expect("grid").graph;
        jobs.extend(g.edges().iter().map(|&e| (m, n, e)));
    }
    for (u, v) in [((3, 2), (3, 3)), ((3, 1), (3, 2))] {
        jobs.push((5, 5, dynamic::grid_edge_id(5, u, v).expect("grid edge")));
    }
    jobs
}

fn grid_deletion(job: usize, cfg: SolverConfig) -> InstanceRecord {
    let (m, n, e) = grid_jobs()[job];
    let gg = gen_grid(m, n).expect("grid");
    let ctx = grid_edge_context_by_id(m, n, e).expect("grid edge");
    let prediction = predict_grid_deletion(&ctx);
    let stated = predict_grid_deletion_as_stated(&ctx);
    let label = format!("{m}x{n} ({},{})-({},{})", ctx.u.0, ctx.u.1, ctx.v.0, ctx.v.1);
    let mut rec = deletion_record(&gg.graph, &[e], cfg, |_| prediction.clone());
    if rec.verdict == Verdict::Skipped {
        rec.case = format!("skipped-exact ({})", prediction.case);
    }
    rec.id = label;
    if let Some(after) = rec.report.as_ref().and_then(|r| r.meg_after) {
        if stated.kind == dynamic::PredictionKind::ExactValue && stated.value != Some(after) {
            rec.note("as-stated mismatch");
        }
        if prediction.kind == dynamic::PredictionKind::NotCovered {
            rec.note(format!("uncovered {m}x{n} ({},{}) -> {after}", ctx.d1.min(ctx.d2), ctx.d1.max(ctx.d2)));
        }
    }
    rec
}

fn random_connected(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.random_range(lo..=hi);
    let max_m = n * (n - 1) / 2;
    let m = rng.random_range(n - 1..=max_m.min(2 * n));
    gen_random_connected(n, m, rng.random()).expect("feasible").graph
}

/// Disjoint union of `a` and `b`, with `b` shifted past `a`.
fn union(a: &Graph, b: &Graph, extra: &[(usize, usize)]) -> Graph {
    let shift = a.n();
    let edges = a
        .edges()
        .iter()
        .map(|e| e.endpoints())
        .chain(b.edges().iter().map(|e| (e.a() + shift, e.b() + shift)))
        .chain(extra.iter().copied());
    Graph::from_edges(a.n() + b.n(), edges).expect("simple union")
}

/// `g` with `count` new leaves hung on random vertices.
fn add_pendants(g: &Graph, count: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().iter().map(|e| e.endpoints()).collect();
    for i in 0..count {
        edges.push((rng.random_range(0..n), n + i));
    }
    Graph::from_edges(n + count, edges).expect("simple")
}

fn pendant_bounds(job: usize, rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let g = if job % 3 == 0 {
        gen_random_tree(rng.random_range(3..=14), rng.random()).expect("tree").graph
    } else {
        let base = random_connected(rng, 3, 9);
        let extra = rng.random_range(1..=4);
        add_pendants(&base, extra, rng)
    };
    let mut pendant: Vec<EdgeId> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| (g.degree(e.a()) == 1) != (g.degree(e.b()) == 1))
        .collect();
    pendant.shuffle(rng);
    let l = rng.random_range(1..=pendant.len());
    pendant.truncate(l);
    pendant.sort();
    deletion_record(&g, &pendant, cfg, |meg| check_pendant_removal(&g, &pendant, meg).expect("pendant edges"))
}

fn cut_edge_bounds(job: usize, rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let inner = |g: &Graph| -> Vec<EdgeId> {
        let cuts = cut_structure(g).1;
        cuts.into_iter().filter(|e| g.degree(e.a()) >= 2 && g.degree(e.b()) >= 2).collect()
    };
    let (g, candidates) = loop {
        let g = if job % 2 == 0 {
            gen_random_tree(rng.random_range(4..=16), rng.random()).expect("tree").graph
        } else {
            let a = random_connected(rng, 2, 7);
            let b = random_connected(rng, 2, 7);
            let bridge = (rng.random_range(0..a.n()), a.n() + rng.random_range(0..b.n()));
            union(&a, &b, &[bridge])
        };
        let c = inner(&g);
        if !c.is_empty() {
            break (g, c);
        }
    };
    let e = *candidates.choose(rng).expect("nonempty");
    deletion_record(&g, &[e], cfg, |meg| check_cut_edge_removal(&g, e, meg).expect("inner cut edge"))
}

fn cut_vertex_bounds(job: usize, rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let g = loop {
        let g = if job % 2 == 0 {
            gen_random_tree(rng.random_range(3..=16), rng.random()).expect("tree").graph
        } else {
            // glue the last vertex of `a` to a vertex of `b`
            let a = random_connected(rng, 2, 7);
            let b = random_connected(rng, 2, 7);
            let shared = a.n() - 1;
            let pick = rng.random_range(0..b.n());
            let edges: Vec<(usize, usize)> = a
                .edges()
                .iter()
                .map(|e| e.endpoints())
                .chain(b.edges().iter().map(|e| {
                    let f = |x: usize| if x == pick { shared } else { a.n() + x - usize::from(x > pick) };
                    (f(e.a()), f(e.b()))
                }))
                .collect();
            Graph::from_edges(a.n() + b.n() - 1, edges).expect("glued")
        };
        if !cut_structure(&g).0.is_empty() {
            break g;
        }
    };
    let cuts: Vec<usize> = cut_structure(&g).0.into_iter().collect();
    let v = *cuts.choose(rng).expect("nonempty");
    let w = *g.neighbors(v).choose(rng).expect("cut vertex has neighbors");
    let e = EdgeId::new(v, w).expect("distinct");
    deletion_record(&g, &[e], cfg, |meg| {
        check_cut_vertex_incident_removal(&g, e, v, meg).expect("cut vertex edge")
    })
}

fn simplicial_bounds(job: usize, rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let g = if job % 5 == 0 {
        let n = rng.random_range(3..=7);
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).expect("clique")
    } else {
        // hang a new vertex on a random clique of size 2..=4
        let base = random_connected(rng, 3, 10);
        let mut clique = vec![rng.random_range(0..base.n())];
        let want = rng.random_range(2..=4);
        while clique.len() < want {
            let options: Vec<usize> = base
                .vertices()
                .filter(|&x| !clique.contains(&x) && clique.iter().all(|&c| base.has_edge(c, x)))
                .collect();
            match options.choose(rng) {
                Some(&x) => clique.push(x),
                None => break,
            }
        }
        let s = base.n();
        let edges = base.edges().iter().map(|e| e.endpoints()).chain(clique.iter().map(|&c| (c, s)));
        Graph::from_edges(s + 1, edges).expect("simple")
    };
    let summary = structure(&g);
    let simp: Vec<usize> = summary
        .simplicial_vertices
        .iter()
        .copied()
        .filter(|&v| g.degree(v) >= 2)
        .collect();
    let v = *simp.choose(rng).expect("constructed with a simplicial vertex");
    let w = *g.neighbors(v).choose(rng).expect("degree >= 2");
    let e = EdgeId::new(v, w).expect("distinct");
    deletion_record(&g, &[e], cfg, |meg| {
        check_simplicial_incident_removal(&g, e, v, meg).expect("simplicial edge")
    })
}

fn unicyclic_instance(job: usize, rng: &mut ChaCha8Rng) -> Graph {
    let seed = rng.random();
    match job % 5 {
        0 => {
            let k = rng.random_range(3..=4);
            gen_random_unicyclic(rng.random_range(k..=16), k, seed).expect("feasible").graph
        }
        1 => gen_unicyclic_attachments(rng.random_range(5..=10), &[], &[], seed).expect("cycle").graph,
        2 => {
            let k = rng.random_range(5..=10);
            let pos = rng.random_range(0..k);
            let size = rng.random_range(1..=(16 - k).min(5));
            gen_unicyclic_attachments(k, &[pos], &[size], seed).expect("feasible").graph
        }
        3 => {
            let k = *[6, 8, 10].choose(rng).expect("nonempty");
            let second = if rng.random_bool(0.5) { 1 } else { k / 2 };
            let sizes = [rng.random_range(1..=3), rng.random_range(1..=3)];
            gen_unicyclic_attachments(k, &[0, second], &sizes, seed).expect("feasible").graph
        }
        _ => {
            let k = rng.random_range(5..=10);
            gen_random_unicyclic(rng.random_range(k + 2..=16), k, seed).expect("feasible").graph
        }
    }
}

fn unicyclic_formula(job: usize, rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let g = unicyclic_instance(job, rng);
    let prof = unicyclic_profile(&g).expect("unicyclic");
    let prediction = Prediction::exact(meg_unicyclic(&prof), prof.case().label());
    let mut rec = formula_record(&g, cfg, prediction);
    if let Some(value) = rec.report.as_ref().and_then(|r| r.meg_after) {
        if meg_unicyclic_with(&prof, prof.p_as_stated) != value {
            rec.note("as-stated mismatch");
        }
    }
    if prof.adjacent_on_odd_cycle() {
        rec.note("adjacent V+ on odd cycle");
    }
    rec
}

fn unicyclic_deletion(rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let n = rng.random_range(4..=16);
    let k = rng.random_range(3..=n.min(10));
    let g = gen_random_unicyclic(n, k, rng.random()).expect("feasible").graph;
    let e = *g.edges().choose(rng).expect("edges");
    deletion_record(&g, &[e], cfg, |_| predict_unicyclic_deletion(&g, e).expect("unicyclic"))
}

fn tree_k_bounds(rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let g = gen_random_tree(rng.random_range(2..=20), rng.random()).expect("tree").graph;
    let k = rng.random_range(0..=g.m());
    let mut edges: Vec<EdgeId> = g.edges().choose_multiple(rng, k).copied().collect();
    edges.sort();
    let mut rec = deletion_record(&g, &edges, cfg, |_| tree_k_deletion_bounds(&g, k).expect("k in range"));
    if k > g.m().div_ceil(2).saturating_sub(1) {
        rec.note("strict regime");
    }
    rec
}

/// Grids with at most 24 vertices.
pub fn small_grids() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 2..=12 {
        for n in 2..=12 {
            if m * n <= 24 {
                out.push((m, n));
            }
        }
    }
    out
}

fn class_formulas(job: usize, rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let round = job / 6;
    let seed = rng.random();
    let (g, prediction) = match job % 6 {
        0 => {
            let n = 2 + round % 19;
            let g = gen_path(n).expect("path").graph;
            (g, Prediction::exact(formulas::meg_path(n).expect("n >= 2"), "path"))
        }
        1 => {
            let n = 3 + round % 18;
            let g = gen_cycle(n).expect("cycle").graph;
            (g, Prediction::exact(formulas::meg_cycle(n).expect("n >= 3"), "cycle"))
        }
        2 => {
            let g = gen_random_tree(rng.random_range(2..=20), seed).expect("tree").graph;
            let v = formulas::meg_tree(&g).expect("tree");
            (g, Prediction::exact(v, "tree"))
        }
        3 => {
            let n = rng.random_range(3..=16);
            let k = rng.random_range(3..=n.min(10));
            let g = gen_random_unicyclic(n, k, seed).expect("unicyclic").graph;
            let v = meg_unicyclic(&unicyclic_profile(&g).expect("unicyclic"));
            (g, Prediction::exact(v, "unicyclic"))
        }
        4 => {
            let grids = small_grids();
            let (m, n) = grids[round % grids.len()];
            let g = gen_grid(m, n).expect("grid").graph;
            (g, Prediction::exact(formulas::meg_grid(m, n).expect("m, n >= 2"), "grid"))
        }
        _ => {
            let g = gen_random_split(rng.random_range(3..=14), seed).expect("split").graph;
            let v = formulas::meg_split(&g).expect("split");
            (g, Prediction::exact(v, "split"))
        }
    };
    formula_record(&g, cfg, prediction)
}

fn oracle_equivalence(rng: &mut ChaCha8Rng) -> InstanceRecord {
    let n = rng.random_range(2..=12);
    let density: f64 = rng.random_range(0.15..0.8);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.random_bool(density))
        .collect();
    let g = Graph::from_edges(n, edges).expect("simple");
    let dt = all_pairs(&g, true);
    let mut agree = true;
    let mut compared = 0;
    for u in 0..n {
        for v in u + 1..n {
            if dt.hops(u, v).is_none() {
                continue;
            }
            for &e in g.edges() {
                compared += 1;
                let a = monitors(&g, &dt, u, v, e).expect("valid input");
                let b = monitors_by_counts(&g, &dt, u, v, e).expect("valid input");
                agree &= a == b;
            }
        }
    }
    check_record("predicate forms agree", agree, vec![("comparisons".into(), compared)])
}

fn forced_lemmas(rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let g = random_connected(rng, 3, 10);
    let e = match enumerate_min_meg_sets(&g, 100_000, cfg.budget) {
        Ok(e) => e,
        Err(_) => return skipped("over budget"),
    };
    let s = structure(&g);
    let forced = forced_vertices(&g);
    let excluded = excluded_vertices(&g);
    let mut notes = Vec::new();
    let mut ok = !e.truncated;
    for set in &e.sets {
        let fine = forced.is_subset(set)
            && s.simplicial_vertices.is_subset(set)
            && s.pendant_vertices.is_subset(set)
            && s.cut_vertices.is_disjoint(set)
            && excluded.is_disjoint(set);
        ok &= fine;
    }
    notes.push(("sets checked".into(), e.sets.len()));
    notes.push(("forced vertices".into(), forced.len()));
    notes.push(("excluded vertices".into(), excluded.len()));
    if e.truncated {
        notes.push(("enumeration truncated".into(), 1));
    }
    check_record("minimum sets respect forced/excluded", ok, notes)
}

fn extremal_construction(job: usize, rng: &mut ChaCha8Rng, cfg: SolverConfig) -> InstanceRecord {
    let k = job % 4 + 1;
    let pads: Vec<usize> = if job < 4 {
        vec![]
    } else {
        (0..=k).map(|_| rng.random_range(0..=3)).collect()
    };
    let gg = gen_extremal_tree(k, &pads).expect("valid pads");
    let GraphTag::ExtremalTree { designated, .. } = &gg.tag else {
        unreachable!("extremal tag")
    };
    let shape_ok = designated.iter().enumerate().all(|(i, e)| {
        gg.graph.degree(e.a()) == 2
            && gg.graph.degree(e.b()) == 2
            && designated[i + 1..].iter().all(|f| !e.shares_endpoint(*f))
    });
    let mut rec = deletion_record(&gg.graph, designated, cfg, |meg| {
        Prediction::exact(meg + 2 * k, format!("extremal tree k={k}: meg+2k"))
    });
    if !shape_ok {
        rec.verdict = Verdict::Violation;
        rec.note("designated edge shape");
    }
    rec
}

fn split_extremal(job: usize, cfg: SolverConfig) -> Vec<InstanceRecord> {
    let n = 6 + job % 9;
    let gg = gen_split_counterexample(n).expect("n >= 6");
    let GraphTag::SplitCounterexample { u1, v1, .. } = gg.tag else {
        unreachable!("split tag")
    };
    let before = formulas::meg_split(&gg.graph).expect("split");
    let mut first = formula_record(&gg.graph, cfg, Prediction::exact(before, "split: meg = n"));
    if before != n {
        first.verdict = Verdict::Violation;
    }
    let h = gg.graph.delete_edge(EdgeId::new(u1, v1).expect("distinct")).expect("fragile edge");
    let after = formulas::meg_split(&h).expect("still split");
    let mut second = formula_record(&h, cfg, Prediction::exact(after, "split minus u1v1: meg = n-1"));
    if after + 1 != n {
        second.verdict = Verdict::Violation;
    }
    vec![first, second]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(SuiteId::parse(id.name()), Some(id));
            assert!(!id.theorem().is_empty());
        }
        assert_eq!(SuiteId::parse("nope"), None);
    }

    #[test]
    fn counts_add_up_and_are_reproducible() {
        let spec = SuiteSpec {
            trials: 12,
            ..SuiteSpec::new(SuiteId::TreeDeletion, 5)
        };
        let a = run_suite(spec, true);
        let b = run_suite(spec, true);
        assert_eq!(a.instances + a.skipped, 12);
        assert_eq!(a.instances, a.matches + a.within_bounds + a.not_covered + a.violations);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn time_cap_truncates() {
        let spec = SuiteSpec {
            trials: 4,
            ..SuiteSpec::new(SuiteId::TreeKBounds, 1)
        };
        let r = run_suite_capped(spec, false, Duration::ZERO);
        assert!(r.truncated);
        assert_eq!(r.skipped, 4);
    }
}
