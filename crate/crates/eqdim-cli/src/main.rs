//! eqdim: compute equidistant dimensions, generate the polytope families,
//! and re-check the published claims about them.
//!
//! Exit codes are a stable contract: 0 success, 1 verification answered
//! "no", 2 usage or input error, 3 solver budget exhausted without a proven
//! optimum, 4 a published value failed to reproduce.

use clap::{Args, Parser, Subcommand, ValueEnum};
use eqdim::dist::{all_pairs_distances, all_pairs_distances_parallel, DistanceMatrix};
use eqdim::engine::solve::{eqdim_exact, SolveOptions};
use eqdim::engine::verify::is_distance_equalizer;
use eqdim::engine::wset::{w_set, WitnessFamily};
use eqdim::format::{
    bounds_to_json, certificate_to_json, graph_from_dimacs, graph_from_json, graph_to_dimacs,
    graph_to_json,
};
use eqdim::graph::Graph;
use eqdim::polytope::{below_proven_range, PolytopeClass, PROVEN_MIN_N};
use eqdim::repro::{run_full_repro, FullReport};
use eqdim::stats::{graph_stats, DEFAULT_STATS_CAP};
use eqdim::{literature_bounds, Solution};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_REPRO_FAILURE: u8 = 4;

const TIME_LIMIT_ENV: &str = "EQDIM_TIME_LIMIT_SECS";
const DEFAULT_TIME_LIMIT_SECS: u64 = 60;

#[derive(Parser)]
#[command(
    name = "eqdim",
    version,
    about = "Exact equidistant-dimension toolkit",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dimacs,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, JSON or DIMACS (sniffed by content)
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one of the four polytope families
    Gen {
        /// Family tag: r2, s, s2, or t
        #[arg(long)]
        class: String,
        /// Cycle length n (vertex count is 6n or 4n)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file; stdout when omitted
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print the all-pairs distance matrix
    Dist {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Compute BFS rows in parallel (output is identical either way)
        #[arg(long)]
        parallel: bool,
    },
    /// Print the set of vertices equidistant from a pair
    Wset {
        #[command(flatten)]
        input: InputArgs,
        /// The pair, comma-separated: "b0,c0"
        #[arg(long, value_name = "U,V")]
        pair: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check whether a vertex set is a distance-equalizer set
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated vertex names; "a*" expands to the whole block
        #[arg(long, value_name = "NAMES")]
        set: String,
        /// Write the certificate JSON here on success
        #[arg(long, value_name = "PATH")]
        cert_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compute the equidistant dimension exactly
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// Seconds before giving up with an interval; 0 disables the limit
        /// (default from EQDIM_TIME_LIMIT_SECS, else 60)
        #[arg(long, value_name = "SECS")]
        time_limit: Option<u64>,
        /// Abort after this many branch-and-bound nodes
        #[arg(long, value_name = "N")]
        node_limit: Option<u64>,
        /// Write the optimality certificate JSON here
        #[arg(long, value_name = "PATH")]
        cert_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Compute BFS rows in parallel (solver itself stays sequential)
        #[arg(long)]
        parallel: bool,
    },
    /// Report every applicable published bound
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Max vertex count for exact clique/independence search
        #[arg(long, default_value_t = DEFAULT_STATS_CAP)]
        stats_cap: usize,
    },
    /// Re-verify the published family claims over n = 5..=n-max
    Repro {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        /// Restrict to one family tag
        #[arg(long)]
        class: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file; stdout when omitted
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

fn usage_err(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Gen {
            class,
            n,
            format,
            out,
        } => cmd_gen(&class, n, format, out.as_deref()),
        Command::Dist {
            input,
            format,
            parallel,
        } => cmd_dist(&input.input, format, parallel),
        Command::Wset {
            input,
            pair,
            format,
        } => cmd_wset(&input.input, &pair, format),
        Command::Verify {
            input,
            set,
            cert_out,
            format,
        } => cmd_verify(&input.input, &set, cert_out.as_deref(), format),
        Command::Solve {
            input,
            time_limit,
            node_limit,
            cert_out,
            format,
            parallel,
        } => cmd_solve(
            &input.input,
            time_limit,
            node_limit,
            cert_out.as_deref(),
            format,
            parallel,
        ),
        Command::Bounds {
            input,
            format,
            stats_cap,
        } => cmd_bounds(&input.input, format, stats_cap),
        Command::Repro {
            n_max,
            class,
            format,
            out,
        } => cmd_repro(n_max, class.as_deref(), format, out.as_deref()),
    }
}

fn parse_class(tag: &str) -> Result<PolytopeClass, Failure> {
    PolytopeClass::parse(tag)
        .ok_or_else(|| usage_err(format!("unknown class {tag:?}; expected r2, s, s2, or t")))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_err(format!("cannot read {}: {e}", path.display())))?;
    let parsed = if text.trim_start().starts_with('{') {
        graph_from_json(&text)
    } else {
        graph_from_dimacs(&text)
    };
    parsed.map_err(|e| usage_err(format!("{}: {e}", path.display())))
}

fn distances(g: &Graph, parallel: bool) -> DistanceMatrix {
    if parallel {
        all_pairs_distances_parallel(g)
    } else {
        all_pairs_distances(g)
    }
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| usage_err(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Expands "a*" block sugar and validates every name against the graph.
fn parse_vertex_set(g: &Graph, spec: &str) -> Result<Vec<usize>, Failure> {
    let mut ids = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if let Some(prefix) = token.strip_suffix('*') {
            let before = ids.len();
            for (id, name) in g.vertex_names().iter().enumerate() {
                if let Some(rest) = name.strip_prefix(prefix) {
                    if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                        ids.push(id);
                    }
                }
            }
            if ids.len() == before {
                return Err(usage_err(format!("block {token:?} matches no vertex")));
            }
        } else {
            ids.push(
                g.vertex_id(token)
                    .ok_or_else(|| usage_err(format!("unknown vertex {token:?}")))?,
            );
        }
    }
    if ids.is_empty() {
        return Err(usage_err("the vertex set is empty"));
    }
    Ok(ids)
}

fn names_of(g: &Graph, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&v| g.vertex_name(v).to_string()).collect()
}

fn cmd_gen(class: &str, n: usize, format: Format, out: Option<&Path>) -> Result<u8, Failure> {
    let class = parse_class(class)?;
    let g = class.generate(n).map_err(|e| usage_err(e.to_string()))?;
    if below_proven_range(n) {
        eprintln!("warning: published claims assume n >= {PROVEN_MIN_N}; n = {n} is outside them");
    }
    let content = match format {
        Format::Json => graph_to_json(&g) + "\n",
        Format::Dimacs => graph_to_dimacs(&g),
        Format::Text => {
            let mut s = format!(
                "{}: {} vertices, {} edges\n",
                g.name(),
                g.vertex_count(),
                g.edge_count()
            );
            for v in 0..g.vertex_count() {
                s.push_str(&format!(
                    "{}: {}\n",
                    g.vertex_name(v),
                    names_of(&g, g.neighbors(v)).join(" ")
                ));
            }
            s
        }
    };
    emit(out, &content)?;
    let counts = format!(
        "{}: {} vertices, {} edges",
        g.name(),
        g.vertex_count(),
        g.edge_count()
    );
    if out.is_some() {
        println!("{counts}");
    } else {
        eprintln!("{counts}");
    }
    Ok(0)
}

#[derive(Serialize)]
struct DistDoc {
    name: String,
    vertices: Vec<String>,
    diameter: usize,
    distances: Vec<Vec<usize>>,
}

fn cmd_dist(path: &Path, format: Format, parallel: bool) -> Result<u8, Failure> {
    let g = load_graph(path)?;
    let d = distances(&g, parallel);
    let n = g.vertex_count();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).map(|v| d.get(u, v)).collect())
        .collect();
    match format {
        Format::Json => {
            let doc = DistDoc {
                name: g.name().to_string(),
                vertices: g.vertex_names().to_vec(),
                diameter: d.diameter(),
                distances: rows,
            };
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text | Format::Dimacs => {
            println!("{}: diameter {}", g.name(), d.diameter());
            let width = d.diameter().to_string().len().max(1);
            for (u, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
                println!("{:>4} {}", g.vertex_name(u), cells.join(" "));
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct WsetDoc {
    pair: (String, String),
    members: Vec<String>,
    size: usize,
}

fn cmd_wset(path: &Path, pair: &str, format: Format) -> Result<u8, Failure> {
    let g = load_graph(path)?;
    let mut parts = pair.split(',').map(str::trim);
    let (u, v) = match (parts.next(), parts.next(), parts.next()) {
        (Some(u), Some(v), None) => (u, v),
        _ => return Err(usage_err(format!("--pair wants \"u,v\", got {pair:?}"))),
    };
    let uid = g
        .vertex_id(u)
        .ok_or_else(|| usage_err(format!("unknown vertex {u:?}")))?;
    let vid = g
        .vertex_id(v)
        .ok_or_else(|| usage_err(format!("unknown vertex {v:?}")))?;
    let d = all_pairs_distances(&g);
    let w = w_set(&d, uid, vid).map_err(|e| usage_err(e.to_string()))?;
    let members = names_of(&g, &w.members);
    match format {
        Format::Json => {
            let doc = WsetDoc {
                pair: (u.to_string(), v.to_string()),
                size: members.len(),
                members,
            };
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text | Format::Dimacs => {
            if members.is_empty() {
                println!("W({u},{v}) is empty: the pair forces a member into every equalizer");
            } else {
                println!(
                    "W({u},{v}) = {{{}}} ({} members)",
                    members.join(", "),
                    members.len()
                );
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct NotEqualizerDoc {
    valid: bool,
    failing_pair: (String, String),
}

fn cmd_verify(
    path: &Path,
    set: &str,
    cert_out: Option<&Path>,
    format: Format,
) -> Result<u8, Failure> {
    let g = load_graph(path)?;
    let ids = parse_vertex_set(&g, set)?;
    let d = all_pairs_distances(&g);
    match is_distance_equalizer(&d, &ids) {
        Ok(cert) => {
            let json = certificate_to_json(&g, &cert);
            if let Some(p) = cert_out {
                emit(Some(p), &(json.clone() + "\n"))?;
            }
            match format {
                Format::Json => println!("{json}"),
                Format::Text | Format::Dimacs => println!(
                    "valid distance-equalizer set of size {} ({} witnesses)",
                    cert.value(),
                    cert.witnesses.len()
                ),
            }
            Ok(0)
        }
        Err(p) => {
            let (u, v) = (g.vertex_name(p.u), g.vertex_name(p.v));
            match format {
                Format::Json => {
                    let doc = NotEqualizerDoc {
                        valid: false,
                        failing_pair: (u.to_string(), v.to_string()),
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Text | Format::Dimacs => {
                    println!("not an equalizer: no member is equidistant from {u} and {v}");
                }
            }
            Ok(EXIT_FALSE)
        }
    }
}

#[derive(Serialize)]
struct SolveDoc {
    value: usize,
    set: Vec<String>,
    nodes: u64,
    witnesses: usize,
}

#[derive(Serialize)]
struct InconclusiveDoc {
    lower: usize,
    upper: usize,
    incumbent: Vec<String>,
    nodes: u64,
}

fn solve_budget(time_limit: Option<u64>) -> Result<SolveOptions, Failure> {
    let secs = match time_limit {
        Some(s) => s,
        None => match std::env::var(TIME_LIMIT_ENV) {
            Ok(raw) => raw
                .parse()
                .map_err(|_| usage_err(format!("{TIME_LIMIT_ENV}={raw:?} is not a number")))?,
            Err(_) => DEFAULT_TIME_LIMIT_SECS,
        },
    };
    Ok(SolveOptions {
        time_limit: (secs > 0).then(|| Duration::from_secs(secs)),
        node_limit: None,
    })
}

fn cmd_solve(
    path: &Path,
    time_limit: Option<u64>,
    node_limit: Option<u64>,
    cert_out: Option<&Path>,
    format: Format,
    parallel: bool,
) -> Result<u8, Failure> {
    let g = load_graph(path)?;
    let d = distances(&g, parallel);
    let fam = WitnessFamily::build(&d);
    let mut opts = solve_budget(time_limit)?;
    opts.node_limit = node_limit;
    match eqdim_exact(&d, &fam, &opts) {
        Ok(Solution {
            value,
            set,
            certificate,
            nodes,
        }) => {
            if let Some(p) = cert_out {
                emit(Some(p), &(certificate_to_json(&g, &certificate) + "\n"))?;
            }
            match format {
                Format::Json => {
                    let doc = SolveDoc {
                        value,
                        set: names_of(&g, &set),
                        nodes,
                        witnesses: certificate.witnesses.len(),
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Text | Format::Dimacs => {
                    println!("eqdim = {value}");
                    println!("set = {{{}}}", names_of(&g, &set).join(", "));
                    println!("nodes = {nodes}");
                    if let Some(p) = cert_out {
                        println!("certificate = {}", p.display());
                    }
                }
            }
            Ok(0)
        }
        Err(partial) => {
            match format {
                Format::Json => {
                    let doc = InconclusiveDoc {
                        lower: partial.lower,
                        upper: partial.upper,
                        incumbent: names_of(&g, &partial.incumbent),
                        nodes: partial.nodes,
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Text | Format::Dimacs => println!("{partial}"),
            }
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn cmd_bounds(path: &Path, format: Format, stats_cap: usize) -> Result<u8, Failure> {
    let g = load_graph(path)?;
    let d = all_pairs_distances(&g);
    let stats = graph_stats(&g, &d, stats_cap);
    let fam = WitnessFamily::build(&d);
    let report = literature_bounds(&g, &stats, &fam);
    match format {
        Format::Json => println!("{}", bounds_to_json(&report)),
        Format::Text | Format::Dimacs => {
            for e in &report.entries {
                println!("{}: {} ({})", e.kind.as_str(), e.value, e.source);
            }
        }
    }
    Ok(0)
}

fn cmd_repro(
    n_max: usize,
    class: Option<&str>,
    format: Format,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let filter = class.map(parse_class).transpose()?;
    let report = run_full_repro(n_max, filter).map_err(|e| usage_err(e.to_string()))?;
    let content = match format {
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
        Format::Text | Format::Dimacs => render_repro_text(&report),
    };
    emit(out, &content)?;
    if report.has_failure() {
        eprintln!("a published value failed to reproduce");
        Ok(EXIT_REPRO_FAILURE)
    } else {
        Ok(0)
    }
}

fn render_repro_text(report: &FullReport) -> String {
    let mut s = String::new();
    for c in &report.claims {
        s.push_str(&format!(
            "{:<18} n={:<3} {:<9} {}\n",
            c.id,
            c.n,
            format!("{:?}", c.verdict).to_lowercase(),
            c.detail
        ));
    }
    s.push_str(&format!(
        "claims: {} verified, {} repaired, {} failed (n_max = {})\n",
        report.verified, report.repaired, report.failed, report.n_max
    ));
    s
}
