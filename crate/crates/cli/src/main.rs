//! `spectral-ds`: spectra, bounds and determination-by-spectrum checks for
//! small graphs.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spectral_ds::audit::published_value_audit;
use spectral_ds::bounds::{check_q_degree_bounds, check_spectral_identities, radius_bound_report};
use spectral_ds::closed_forms::multicone_petersen_spectrum;
use spectral_ds::ds::{
    census, ds_verify, enumerate_graphs, feasible_degree_sequences, moment_constraints,
    CensusMethod, DsError, EnumerationOptions, Scope, VerifyOptions, VertexOrder,
    CENSUS_MAX_ORDER,
};
use spectral_ds::graph::{is_isomorphic, DegreeSequence, Graph};
use spectral_ds::io::cache::{charpoly_via, CharpolyCache};
use spectral_ds::io::{graph6, parse_graph_spec};
use spectral_ds::spectra::{charpoly, moments, spectrum_with_polynomial, MatrixKind};

const TOOL: &str = "spectral-ds";

/// Exit statuses.
const EXIT_USAGE: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_SCOPE: u8 = 3;

#[derive(Parser)]
#[command(name = TOOL, version, about = "Exact spectra and spectral determination of small graphs")]
struct Cli {
    /// Print JSON.
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Print a plain-text table (the default).
    #[arg(long, global = true)]
    table: bool,
    /// Cache characteristic polynomials here; SPECTRAL_DS_CACHE overrides.
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    A,
    L,
    Q,
}

impl From<Kind> for MatrixKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::A => MatrixKind::A,
            Kind::L => MatrixKind::L,
            Kind::Q => MatrixKind::Q,
        }
    }
}

#[derive(Args)]
struct GraphKind {
    #[arg(long, value_enum, ignore_case = true)]
    kind: Kind,
    /// Graph expression: a name (petersen, K5, C7, K1,4), graph6, A~B, A+B, !A, mc(w,A).
    #[arg(long)]
    graph: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    DegreeSequences,
    Sequence,
    AllGraphs,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Sequences,
    Augmentation,
}

#[derive(Subcommand)]
enum Command {
    /// Exact spectrum with multiplicities.
    Spectrum(GraphKind),
    /// Characteristic polynomial coefficients.
    Charpoly(GraphKind),
    /// Spectral moments checked against degree and triangle counts.
    Moments {
        #[command(flatten)]
        target: GraphKind,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
    /// Whether two graphs share a spectrum.
    Cospectral {
        #[arg(long, value_enum, ignore_case = true)]
        kind: Kind,
        #[arg(long, num_args = 1, required = true)]
        graph: Vec<String>,
    },
    /// Closed-form spectrum of K_w joined with the Petersen graph, checked
    /// against the constructed graph.
    ClosedForm {
        #[arg(long, value_enum, ignore_case = true)]
        kind: Kind,
        #[arg(long)]
        w: usize,
    },
    /// Signless Laplacian degree bounds, the spectral radius bound and
    /// structural identities.
    Bounds {
        #[arg(long)]
        graph: String,
    },
    /// Degree sequences compatible with a graph's spectral moments.
    DegreeSequences {
        #[command(flatten)]
        target: GraphKind,
        /// Apply the bounds that hold only for connected graphs.
        #[arg(long)]
        assume_connected: bool,
    },
    /// Non-isomorphic graphs with a given degree sequence.
    Enumerate {
        /// Run-length degree list, e.g. "10,4^10".
        #[arg(long)]
        degrees: String,
        #[arg(long)]
        connected_only: bool,
        /// Place low degrees first instead of high degrees.
        #[arg(long)]
        low_degree_first: bool,
        #[arg(long)]
        max_results: Option<usize>,
    },
    /// Search a scope for non-isomorphic graphs with the same spectrum.
    DsVerify {
        #[command(flatten)]
        target: GraphKind,
        #[arg(long, value_enum, default_value = "degree-sequences")]
        scope: ScopeArg,
        /// Degree list for `--scope sequence`.
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long)]
        connected_only: bool,
        /// Generate every sequence in both vertex orders and compare.
        #[arg(long)]
        cross_check: bool,
        #[arg(long)]
        max_results: Option<usize>,
    },
    /// All graphs on n vertices, optionally grouped by spectrum.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "sequences")]
        method: MethodArg,
        #[arg(long)]
        connected_only: bool,
        /// Group by characteristic polynomial and report cospectral classes.
        #[arg(long, value_enum, ignore_case = true)]
        group_by: Option<Kind>,
        /// List graph6 strings.
        #[arg(long)]
        list: bool,
    },
    /// Published multicone values compared with computed ones.
    Audit,
}

/// A command's outcome before rendering.
struct Outcome {
    command: &'static str,
    input: Value,
    result: Value,
    table: String,
    status: u8,
    elapsed_ms: Option<u128>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    Scope(String),
}

impl From<DsError> for Failure {
    fn from(e: DsError) -> Self {
        if e.is_scope_refusal() {
            Failure::Scope(e.to_string())
        } else if e.is_verification_failure() {
            Failure::Verification(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_graph(s: &str) -> Result<Graph, Failure> {
    parse_graph_spec(s).map_err(|e| Failure::Usage(format!("--graph {s:?}: {e}")))
}

fn parse_degrees(s: &str) -> Result<DegreeSequence, Failure> {
    s.parse()
        .map_err(|e| Failure::Usage(format!("--degrees {s:?}: {e}")))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn graph_input(spec: &str, g: &Graph, kind: Option<MatrixKind>) -> Value {
    let mut v = json!({ "graph": spec, "graph6": graph6::emit(g), "order": g.order() });
    if let Some(k) = kind {
        v["kind"] = json!(k.to_string());
    }
    v
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let cache = CharpolyCache::resolve(cli.cache_dir.clone()).map_err(usage)?;
    let cache = cache.as_ref();
    let start = Instant::now();
    let mut out = match &cli.command {
        Command::Spectrum(t) => {
            let g = parse_graph(&t.graph)?;
            let kind = t.kind.into();
            let p = charpoly_via(cache, &g, kind);
            let s = spectrum_with_polynomial(&g, kind, &p);
            Outcome {
                command: "spectrum",
                input: graph_input(&t.graph, &g, Some(kind)),
                result: json!({ "spectrum": to_value(&s) }),
                table: format!("{kind}-spectrum: {s}\n"),
                status: 0,
                elapsed_ms: None,
            }
        }
        Command::Charpoly(t) => {
            let g = parse_graph(&t.graph)?;
            let kind = t.kind.into();
            let p = charpoly_via(cache, &g, kind);
            let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
            Outcome {
                command: "charpoly",
                input: graph_input(&t.graph, &g, Some(kind)),
                result: json!({ "polynomial": p.to_string(), "coefficients": coeffs }),
                table: format!("{p}\n"),
                status: 0,
                elapsed_ms: None,
            }
        }
        Command::Moments { target, max_order } => {
            let g = parse_graph(&target.graph)?;
            let kind = target.kind.into();
            // a mismatch between the two sides is a broken identity
            let r = moments(&g, kind, *max_order).map_err(|e| match e {
                spectral_ds::spectra::SpectraError::MomentMismatch { .. } => {
                    Failure::Verification(e.to_string())
                }
                _ => usage(e),
            })?;
            let mut table = String::new();
            for (k, t) in r.power_sums.iter().enumerate() {
                table.push_str(&format!("T_{k} = {t}\n"));
            }
            Outcome {
                command: "moments",
                input: graph_input(&target.graph, &g, Some(kind)),
                result: to_value(&r),
                table,
                status: 0,
                elapsed_ms: None,
            }
        }
        Command::Cospectral { kind, graph } => {
            if graph.len() != 2 {
                return Err(Failure::Usage("cospectral needs exactly two --graph values".into()));
            }
            let kind: MatrixKind = (*kind).into();
            let g = parse_graph(&graph[0])?;
            let h = parse_graph(&graph[1])?;
            let same = g.order() == h.order()
                && charpoly_via(cache, &g, kind) == charpoly_via(cache, &h, kind);
            let iso = is_isomorphic(&g, &h);
            Outcome {
                command: "cospectral",
                input: json!({
                    "kind": kind.to_string(),
                    "graphs": [graph_input(&graph[0], &g, None), graph_input(&graph[1], &h, None)],
                }),
                result: json!({ "cospectral": same, "isomorphic": iso }),
                table: format!("cospectral: {same}\nisomorphic: {iso}\n"),
                status: 0,
                elapsed_ms: None,
            }
        }
        Command::ClosedForm { kind, w } => {
            let kind: MatrixKind = (*kind).into();
            let s = multicone_petersen_spectrum(*w, kind).map_err(usage)?;
            let petersen = parse_graph("petersen")?;
            let g = Graph::multicone(*w, &petersen).map_err(usage)?;
            let direct = charpoly_via(cache, &g, kind);
            let matches = direct == s.polynomial;
            let mut result = to_value(&s);
            result["matches_direct"] = json!(matches);
            Outcome {
                command: "closed-form",
                input: json!({ "kind": kind.to_string(), "w": w }),
                result,
                table: format!(
                    "{kind}-spectrum of K{w}∇P: {}\nmatches direct polynomial: {matches}\n",
                    s.spectrum
                ),
                status: if matches { 0 } else { EXIT_VERIFICATION },
                elapsed_ms: None,
            }
        }
        Command::Bounds { graph } => {
            let g = parse_graph(graph)?;
            let mut reports = check_q_degree_bounds(&g);
            reports.push(radius_bound_report(&g));
            let identities = check_spectral_identities(&g);
            let ok = reports.iter().all(|r| r.holds) && identities.iter().all(|r| r.holds);
            let mut table = String::new();
            for r in &reports {
                let state = match (r.applicable, r.holds) {
                    (false, _) => "n/a".to_string(),
                    (true, true) if r.equality => "holds with equality".to_string(),
                    (true, true) => "holds".to_string(),
                    (true, false) => "VIOLATED".to_string(),
                };
                table.push_str(&format!("{:<48} {state}\n", r.name));
            }
            for r in &identities {
                let state = match (r.applicable, r.holds) {
                    (false, _) => "n/a",
                    (true, true) => "holds",
                    (true, false) => "VIOLATED",
                };
                table.push_str(&format!("{:<48} {state}\n", r.name));
            }
            Outcome {
                command: "bounds",
                input: graph_input(graph, &g, None),
                result: json!({ "bounds": to_value(&reports), "identities": to_value(&identities) }),
                table,
                status: if ok { 0 } else { EXIT_VERIFICATION },
                elapsed_ms: None,
            }
        }
        Command::DegreeSequences {
            target,
            assume_connected,
        } => {
            let g = parse_graph(&target.graph)?;
            let kind = target.kind.into();
            let p = charpoly_via(cache, &g, kind);
            let c = moment_constraints(&p, kind, *assume_connected)?;
            let cands = feasible_degree_sequences(&c);
            let own = g.degree_sequence();
            // the target's own sequence must survive unless it was excluded
            // by an assumption the target does not meet
            let excluded_by_assumption = *assume_connected && !g.is_connected();
            let contains_own =
                excluded_by_assumption || cands.iter().any(|x| x.sequence == own);
            let mut table = format!(
                "n = {}, m = {}, Σd = {}, δ >= {} ({}), Δ <= {} ({})\n",
                c.n, c.m, c.sum_d, c.dmin.value, c.dmin.source, c.dmax.value, c.dmax.source
            );
            for x in &cands {
                table.push_str(&format!("{}  t = {}\n", x.sequence, x.triangles));
            }
            Outcome {
                command: "degree-sequences",
                input: graph_input(&target.graph, &g, Some(kind)),
                result: json!({ "constraints": to_value(&c), "candidates": to_value(&cands) }),
                table,
                status: if contains_own { 0 } else { EXIT_VERIFICATION },
                elapsed_ms: None,
            }
        }
        Command::Enumerate {
            degrees,
            connected_only,
            low_degree_first,
            max_results,
        } => {
            let seq = parse_degrees(degrees)?;
            if seq.len() > spectral_ds::ds::DEGREE_SCOPE_MAX_ORDER {
                return Err(Failure::Scope(format!(
                    "degree-constrained enumeration is limited to {} vertices",
                    spectral_ds::ds::DEGREE_SCOPE_MAX_ORDER
                )));
            }
            let e = enumerate_graphs(
                &seq,
                &EnumerationOptions {
                    connected_only: *connected_only,
                    order: if *low_degree_first {
                        VertexOrder::LowDegreeFirst
                    } else {
                        VertexOrder::HighDegreeFirst
                    },
                    ..Default::default()
                },
            );
            let shown: Vec<String> = e
                .graphs
                .iter()
                .take(max_results.unwrap_or(usize::MAX))
                .map(graph6::emit)
                .collect();
            let mut table = format!("{} graphs with degrees {seq}\n", e.graphs.len());
            for s in &shown {
                table.push_str(s);
                table.push('\n');
            }
            Outcome {
                command: "enumerate",
                input: json!({
                    "degrees": seq,
                    "connected_only": connected_only,
                    "order": if *low_degree_first { "low_degree_first" } else { "high_degree_first" },
                }),
                result: json!({
                    "feasible": e.feasible,
                    "count": e.graphs.len(),
                    "graphs": shown,
                    "truncated": shown.len() < e.graphs.len(),
                }),
                table,
                status: 0,
                elapsed_ms: None,
            }
        }
        Command::DsVerify {
            target,
            scope,
            degrees,
            connected_only,
            cross_check,
            max_results,
        } => {
            let g = parse_graph(&target.graph)?;
            let kind = target.kind.into();
            let scope = match scope {
                ScopeArg::DegreeSequences => Scope::DegreeSequences,
                ScopeArg::AllGraphs => Scope::AllGraphs,
                ScopeArg::Sequence => Scope::Sequence {
                    sequence: match degrees {
                        Some(d) => parse_degrees(d)?,
                        None => g.degree_sequence(),
                    },
                },
            };
            let v = ds_verify(
                &g,
                kind,
                &scope,
                &VerifyOptions {
                    connected_only: *connected_only,
                    cross_check_orders: *cross_check,
                    cache,
                },
            )?;
            let mut result = to_value(&v);
            if let Some(k) = max_results {
                if let Some(m) = result["mates"].as_array_mut() {
                    m.truncate(*k);
                }
            }
            let mut table = format!(
                "{kind}, scope {}: {} candidates, {} mates, determined = {}\n",
                json!(v.scope)["mode"].as_str().unwrap_or(""),
                v.stats.candidates,
                v.mates.len(),
                v.determined
            );
            for s in &v.stats.sequences {
                table.push_str(&format!(
                    "  {} realizations {} cospectral {}\n",
                    s.sequence, s.realizations, s.cospectral
                ));
            }
            for m in v.mates.iter().take(max_results.unwrap_or(usize::MAX)) {
                table.push_str(&format!("  mate {}\n", graph6::emit(m)));
            }
            Outcome {
                command: "ds-verify",
                input: json!({
                    "graph": target.graph,
                    "graph6": graph6::emit(&g),
                    "kind": kind.to_string(),
                    "scope": to_value(&scope),
                    "connected_only": connected_only,
                }),
                result,
                table,
                status: 0,
                elapsed_ms: Some(v.stats.elapsed.as_millis()),
            }
        }
        Command::Census {
            order,
            method,
            connected_only,
            group_by,
            list,
        } => {
            if *order == 0 || *order > CENSUS_MAX_ORDER {
                return Err(Failure::Scope(format!(
                    "census is limited to 1..={CENSUS_MAX_ORDER} vertices"
                )));
            }
            let method = match method {
                MethodArg::Sequences => CensusMethod::DegreeSequences,
                MethodArg::Augmentation => CensusMethod::VertexAugmentation,
            };
            let graphs: Vec<Graph> = census(*order, method)
                .into_iter()
                .filter(|g| !connected_only || g.is_connected())
                .collect();
            let mut result = json!({ "count": graphs.len() });
            let mut table = format!("{} graphs on {order} vertices\n", graphs.len());
            if *list {
                let g6: Vec<String> = graphs.iter().map(graph6::emit).collect();
                for s in &g6 {
                    table.push_str(s);
                    table.push('\n');
                }
                result["graphs"] = json!(g6);
            }
            if let Some(k) = group_by {
                let kind: MatrixKind = (*k).into();
                let mut groups: std::collections::BTreeMap<Vec<String>, Vec<String>> =
                    Default::default();
                for g in &graphs {
                    let p = charpoly(g, kind);
                    let key = p.coeffs().iter().map(ToString::to_string).collect();
                    groups.entry(key).or_default().push(graph6::emit(g));
                }
                let classes: Vec<&Vec<String>> = groups.values().filter(|v| v.len() > 1).collect();
                table.push_str(&format!(
                    "{} {kind}-spectra, {} shared by more than one graph\n",
                    groups.len(),
                    classes.len()
                ));
                for c in &classes {
                    table.push_str(&format!("  {}\n", c.join(" ")));
                }
                result["kind"] = json!(kind.to_string());
                result["distinct_spectra"] = json!(groups.len());
                result["cospectral_classes"] = json!(classes);
            }
            Outcome {
                command: "census",
                input: json!({ "order": order, "connected_only": connected_only }),
                result,
                table,
                status: 0,
                elapsed_ms: None,
            }
        }
        Command::Audit => {
            let r = published_value_audit();
            let mut table = String::new();
            for i in &r.items {
                let mark = if i.agrees { "agrees " } else { "DIFFERS" };
                table.push_str(&format!(
                    "{mark} {}\n        published {}\n        computed  {}\n",
                    i.subject, i.published, i.computed
                ));
            }
            table.push_str(&format!("{} discrepancies\n", r.discrepancies));
            Outcome {
                command: "audit",
                input: json!({}),
                result: to_value(&r),
                table,
                status: 0,
                elapsed_ms: None,
            }
        }
    };
    if out.elapsed_ms.is_some() {
        out.elapsed_ms = Some(start.elapsed().as_millis());
    }
    if let Some(c) = cache {
        log::info!("cache {}: {} hits, {} misses", c.dir().display(), c.hits(), c.misses());
    }
    Ok(out)
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(o) => {
            if cli.json {
                let mut doc = json!({
                    "tool": TOOL,
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": o.command,
                    "input": o.input,
                    "result": o.result,
                });
                if let Some(ms) = o.elapsed_ms {
                    doc["elapsed_ms"] = json!(ms);
                }
                emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("JSON renders")));
            } else {
                emit(&o.table);
            }
            ExitCode::from(o.status)
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Verification(m) => (EXIT_VERIFICATION, m),
                Failure::Scope(m) => (EXIT_SCOPE, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
