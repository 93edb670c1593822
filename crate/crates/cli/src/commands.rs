//! Subcommand bodies. Each returns an [`Output`] holding both renderings;
//! `main` prints one of them and maps the result to an exit status.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use meg_core::dynamic::{self, analyze_deletion, applicable_bounds, DeletionReport, Verdict};
use meg_core::formulas::class_formula;
use meg_core::generators::*;
use meg_core::monitor::{excluded_vertices, forced_vertices, monitor_table};
use meg_core::solver::{meg_number_with, min_meg_with, SolverConfig, SolverError};
use meg_core::{parse_graph, serialize_graph, EdgeId, Graph, GraphTag};

use crate::suites::{run_suite, SuiteId, SuiteSpec, TheoremReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: meg_core::ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Dynamic(#[from] dynamic::DynamicError),
    #[error(transparent)]
    Graph(#[from] meg_core::GraphError),
    #[error(transparent)]
    Generator(#[from] GenError),
}

/// Rendered result of a command.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
    /// A prediction or bound was contradicted.
    pub violation: bool,
}

impl Output {
    fn new(text: String, json: impl Serialize) -> Self {
        Output {
            text,
            json: serde_json::to_value(json).expect("plain data serializes"),
            violation: false,
        }
    }
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_graph(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// `FILE.tag.json` next to a graph file.
pub fn tag_path(graph: &Path) -> PathBuf {
    let mut s = graph.as_os_str().to_owned();
    s.push(".tag.json");
    PathBuf::from(s)
}

pub fn load_tag(path: &Path) -> Result<GraphTag, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    // tag files hold a GeneratedGraph; a bare tag is accepted too
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let v = v.get("tag").cloned().unwrap_or(v);
    serde_json::from_value(v).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Parses `"a b"`, `"a-b"` or `"a,b"`.
pub fn parse_edge(s: &str) -> Result<EdgeId, CliError> {
    let parts: Vec<&str> = s
        .split(|c: char| c.is_whitespace() || c == '-' || c == ',')
        .filter(|p| !p.is_empty())
        .collect();
    let bad = || CliError::Usage(format!("edge {s:?}: expected two vertex numbers"));
    let [a, b] = parts.as_slice() else {
        return Err(bad());
    };
    let a = a.parse().map_err(|_| bad())?;
    let b = b.parse().map_err(|_| bad())?;
    Ok(EdgeId::new(a, b)?)
}

fn fmt_set(set: &BTreeSet<usize>) -> String {
    let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn compute(g: &Graph, cfg: SolverConfig) -> Result<Output, CliError> {
    let cert = min_meg_with(g, cfg)?;
    let class = class_formula(g);
    let mut text = format!("meg={} set={}\n", cert.size, fmt_set(&cert.vertex_set));
    writeln!(text, "forced={}", fmt_set(&cert.forced)).unwrap();
    if let Some((tag, value)) = class {
        writeln!(text, "class={} formula={value}", tag.name()).unwrap();
    }
    for w in &cert.witnesses {
        writeln!(text, "  {} monitored by ({},{})", w.edge, w.pair.0, w.pair.1).unwrap();
    }
    let json = json!({
        "meg": cert.size,
        "set": cert.vertex_set,
        "forced": cert.forced,
        "optimal": cert.optimal,
        "class": class.map(|(t, _)| t.name()),
        "formula": class.map(|(_, v)| v),
        "witnesses": cert.witnesses,
    });
    Ok(Output::new(text, json))
}

pub fn monitors(g: &Graph, pair: Option<(usize, usize)>) -> Result<Output, CliError> {
    let table = monitor_table(g);
    let pairs: Vec<(usize, usize)> = match pair {
        Some((u, v)) => {
            for x in [u, v] {
                if x >= g.n() {
                    return Err(CliError::Usage(format!("vertex {x} out of range (n = {})", g.n())));
                }
            }
            if u == v {
                return Err(CliError::Usage("a pair needs two distinct vertices".into()));
            }
            vec![(u.min(v), u.max(v))]
        }
        None => (0..g.n()).flat_map(|u| (u + 1..g.n()).map(move |v| (u, v))).collect(),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for (u, v) in pairs {
        let edges = table.monitored(u, v);
        let names: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
        writeln!(text, "({u},{v}): {}", names.join(" ")).unwrap();
        rows.push(json!({"pair": [u, v], "monitored": edges}));
    }
    Ok(Output::new(text, json!({ "rows": rows })))
}

pub fn forced(g: &Graph) -> Result<Output, CliError> {
    let f = forced_vertices(g);
    let x = excluded_vertices(g);
    let text = format!("forced={}\nexcluded={}\n", fmt_set(&f), fmt_set(&x));
    Ok(Output::new(text, json!({"forced": f, "excluded": x})))
}

fn deletion_text(r: &DeletionReport) -> String {
    let edges: Vec<String> = r.edge.iter().map(|e| e.to_string()).collect();
    let show = |v: Option<usize>| v.map_or("?".to_string(), |v| v.to_string());
    let p = &r.prediction;
    let predicted = match p.kind {
        dynamic::PredictionKind::ExactValue => format!("exactly {}", show(p.value)),
        dynamic::PredictionKind::Interval => format!("in [{}, {}]", show(p.lower), show(p.upper)),
        dynamic::PredictionKind::NotCovered => "not covered".to_string(),
    };
    format!(
        "{}: delete {}\nmeg before {}, after {}\npredicted {predicted} ({})\nverdict {}\n",
        r.graph,
        edges.join(" "),
        show(r.meg_before),
        show(r.meg_after),
        p.case,
        r.verdict.as_str()
    )
}

pub fn delete(
    name: &str,
    g: &Graph,
    edges: &[EdgeId],
    tag: Option<&GraphTag>,
    cfg: SolverConfig,
) -> Result<Output, CliError> {
    if edges.is_empty() {
        return Err(CliError::Usage("no --edge given".into()));
    }
    let r = analyze_deletion(name, g, edges, tag, cfg)?;
    let mut out = Output::new(deletion_text(&r), &r);
    out.violation = r.verdict == Verdict::Violation;
    Ok(out)
}

/// Checks every single-edge bound whose hypotheses hold for `e`.
pub fn bounds(name: &str, g: &Graph, e: EdgeId, cfg: SolverConfig) -> Result<Output, CliError> {
    let before = meg_number_with(g, cfg)?;
    let after = meg_number_with(&g.delete_edge(e)?, cfg)?;
    let mut text = format!("{name}: delete {e}\nmeg before {before}, after {after}\n");
    let mut rows = Vec::new();
    let mut violation = false;
    for p in applicable_bounds(g, e, before)? {
        let v = p.judge(after);
        violation |= v == Verdict::Violation;
        let lo = p.lower.map_or("-".into(), |x| x.to_string());
        let hi = p.upper.map_or("-".into(), |x| x.to_string());
        writeln!(text, "  {}: [{lo}, {hi}] {}", p.case, v.as_str()).unwrap();
        rows.push(json!({"prediction": p, "verdict": v}));
    }
    if rows.is_empty() {
        text.push_str("  no bound applies to this edge\n");
    }
    let json = json!({"graph": name, "edge": e, "meg_before": before, "meg_after": after, "bounds": rows});
    let mut out = Output::new(text, json);
    out.violation = violation;
    Ok(out)
}

pub fn report_text(r: &TheoremReport) -> String {
    let mut s = format!("{} ({})\n", r.suite, r.theorem);
    writeln!(
        s,
        "  seed {} jobs {} budget {}: {} instances, {} match, {} within-bounds, {} not-covered, {} VIOLATION, {} skipped{}",
        r.seed,
        r.trials,
        r.budget,
        r.instances,
        r.matches,
        r.within_bounds,
        r.not_covered,
        r.violations,
        r.skipped,
        if r.truncated { " (time cap hit)" } else { "" }
    )
    .unwrap();
    for (case, count) in &r.cases {
        writeln!(s, "    case {case}: {count}").unwrap();
    }
    for (note, count) in &r.notes {
        writeln!(s, "    note {note}: {count}").unwrap();
    }
    for rec in &r.records {
        let what = rec.report.as_ref().map(deletion_text).unwrap_or_default();
        writeln!(s, "    {} {} {}", rec.verdict.as_str(), rec.id, rec.case).unwrap();
        for line in what.lines() {
            writeln!(s, "      {line}").unwrap();
        }
    }
    writeln!(s, "  {:.2}s", r.wall_time.as_secs_f64()).unwrap();
    s
}

pub struct VerifyArgs {
    pub seed: u64,
    pub trials: Option<usize>,
    pub budget: usize,
    pub verbose: bool,
}

pub fn verify(which: &str, args: &VerifyArgs) -> Result<Output, CliError> {
    let ids: Vec<SuiteId> = if which == "all" {
        SuiteId::ALL.to_vec()
    } else {
        vec![SuiteId::parse(which).ok_or_else(|| {
            CliError::Usage(format!("unknown suite {which:?}; see `meg list-suites`"))
        })?]
    };
    let mut text = String::new();
    let mut reports = Vec::new();
    for id in ids {
        let mut spec = SuiteSpec::new(id, args.seed);
        spec.budget = args.budget;
        if let Some(t) = args.trials {
            spec.trials = t;
        }
        let r = run_suite(spec, args.verbose);
        text.push_str(&report_text(&r));
        reports.push(r);
    }
    let violations: usize = reports.iter().map(|r| r.violations).sum();
    writeln!(text, "total violations: {violations}").unwrap();
    let mut out = Output::new(text, json!({ "reports": reports, "violations": violations }));
    out.violation = violations > 0;
    Ok(out)
}

pub fn list_suites() -> Output {
    let mut text = String::new();
    let mut rows = Vec::new();
    for id in SuiteId::ALL {
        let trials = id.fixed_jobs().unwrap_or(id.default_trials());
        writeln!(text, "{:<22} {:>4}  {}", id.name(), trials, id.theorem()).unwrap();
        rows.push(json!({"id": id, "theorem": id.theorem(), "default_trials": trials}));
    }
    Output::new(text, json!({ "suites": rows }))
}

pub const FAMILIES: &str = "path N | cycle N | star N | grid M N | binary-tree H | random-tree N | \
random-unicyclic N K | random-connected N M | random-split N | unicyclic-attachments K POS:SIZE... | \
extremal-tree K [--pads P0,..,PK] | split-counterexample N";

fn nums(family: &str, params: &[String], want: usize) -> Result<Vec<usize>, CliError> {
    if params.len() != want {
        return Err(CliError::Usage(format!("{family} takes {want} parameter(s); families: {FAMILIES}")));
    }
    params
        .iter()
        .map(|p| p.parse().map_err(|_| CliError::Usage(format!("{family}: bad number {p:?}"))))
        .collect()
}

/// Builds a graph from a family name and its parameters.
pub fn build_family(family: &str, params: &[String], pads: &[usize], seed: u64) -> Result<GeneratedGraph, CliError> {
    let g = match family {
        "path" => gen_path(nums(family, params, 1)?[0])?,
        "cycle" => gen_cycle(nums(family, params, 1)?[0])?,
        "star" => gen_star(nums(family, params, 1)?[0])?,
        "grid" => {
            let p = nums(family, params, 2)?;
            gen_grid(p[0], p[1])?
        }
        "binary-tree" => gen_perfect_binary_tree(nums(family, params, 1)?[0])?,
        "random-tree" => gen_random_tree(nums(family, params, 1)?[0], seed)?,
        "random-unicyclic" => {
            let p = nums(family, params, 2)?;
            gen_random_unicyclic(p[0], p[1], seed)?
        }
        "random-connected" => {
            let p = nums(family, params, 2)?;
            gen_random_connected(p[0], p[1], seed)?
        }
        "random-split" => gen_random_split(nums(family, params, 1)?[0], seed)?,
        "unicyclic-attachments" => {
            let Some((k, rest)) = params.split_first() else {
                return Err(CliError::Usage("unicyclic-attachments K POS:SIZE...".into()));
            };
            let k = nums(family, std::slice::from_ref(k), 1)?[0];
            let mut positions = Vec::new();
            let mut sizes = Vec::new();
            for item in rest {
                let bad = || CliError::Usage(format!("attachment {item:?}: expected POS:SIZE"));
                let (p, s) = item.split_once(':').ok_or_else(bad)?;
                positions.push(p.parse().map_err(|_| bad())?);
                sizes.push(s.parse().map_err(|_| bad())?);
            }
            gen_unicyclic_attachments(k, &positions, &sizes, seed)?
        }
        "extremal-tree" => gen_extremal_tree(nums(family, params, 1)?[0], pads)?,
        "split-counterexample" => gen_split_counterexample(nums(family, params, 1)?[0])?,
        _ => return Err(CliError::Usage(format!("unknown family {family:?}; families: {FAMILIES}"))),
    };
    Ok(g)
}

/// Writes the graph to `out` (and its tag beside it), or renders it inline.
pub fn generate(gg: &GeneratedGraph, out: Option<&Path>) -> Result<Output, CliError> {
    let graph_text = serialize_graph(&gg.graph);
    let tag_json = serde_json::to_string_pretty(gg).expect("plain data serializes");
    match out {
        Some(path) => {
            let write = |p: &Path, body: &str| {
                std::fs::write(p, body).map_err(|source| CliError::Io {
                    path: p.to_path_buf(),
                    source,
                })
            };
            write(path, &graph_text)?;
            let tp = tag_path(path);
            write(&tp, &(tag_json + "\n"))?;
            let text = format!(
                "wrote {} (n={}, m={}) and {}\n",
                path.display(),
                gg.graph.n(),
                gg.graph.m(),
                tp.display()
            );
            let json = json!({"graph": path, "tag_file": tp, "tag": gg.tag, "n": gg.graph.n(), "m": gg.graph.m()});
            Ok(Output::new(text, json))
        }
        None => Ok(Output::new(
            graph_text.clone(),
            json!({"tag": gg.tag, "seed": gg.seed, "graph": graph_text}),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_parse_in_three_spellings() {
        for s in ["1 2", "2-1", "1,2", " 1   2 "] {
            assert_eq!(parse_edge(s).unwrap(), EdgeId::new(1, 2).unwrap());
        }
        assert!(parse_edge("1").is_err());
        assert!(parse_edge("1 1").is_err());
        assert!(parse_edge("a b").is_err());
    }

    #[test]
    fn compute_text_format() {
        let g = gen_path(5).unwrap().graph;
        let out = compute(&g, SolverConfig::default()).unwrap();
        assert!(out.text.starts_with("meg=2 set={0,4}\n"));
        assert_eq!(out.json["meg"], 2);
        assert_eq!(out.json["class"], "path");
    }

    #[test]
    fn families_build() {
        let p = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(build_family("grid", &p(&["2", "3"]), &[], 0).unwrap().graph.m(), 7);
        let u = build_family("unicyclic-attachments", &p(&["6", "0:1", "3:1"]), &[], 0).unwrap();
        assert_eq!(u.graph.n(), 8);
        assert!(build_family("grid", &p(&["2"]), &[], 0).is_err());
        assert!(build_family("moebius", &[], &[], 0).is_err());
    }

    #[test]
    fn tag_files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.txt");
        let gg = gen_grid(2, 3).unwrap();
        generate(&gg, Some(&path)).unwrap();
        assert_eq!(load_graph(&path).unwrap(), gg.graph);
        assert_eq!(load_tag(&tag_path(&path)).unwrap(), gg.tag);
    }
}
