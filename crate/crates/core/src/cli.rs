//! `johan` command-line front end.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::coloring::{chromatic_number, Colouring};
use crate::error::{Error, Result};
use crate::extremal::{
    minimal_repair_with, r_minus_with, r_plus_with, BondingResult, ExtremalLimits, Extremum,
    Semantics,
};
use crate::graph::{generate, parse_graph, serialize_graph, Edge, Family, Graph, GraphData, GraphFormat};
use crate::ops::{combine, derive, CombineKind, DerivativeKind};
use crate::rainbow::{j_profile_with, rainbow_neighbourhood_number, JProfile, Limits, Mode};
use crate::verify::{csv_field, run_verification, CorpusConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_HARD_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCALE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "johan", version, about = "Exact J / J* colouring solvers for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// χ, r_χ, J, J* and witnesses for one graph.
    Compute(ComputeArgs),
    /// Emit a derivative graph.
    Derive(DeriveArgs),
    /// Emit the combination of two graphs.
    Combine(CombineArgs),
    /// Rainbow bonding variables r⁻ₖ and r⁺ₖ.
    Extremal(ExtremalArgs),
    /// Replay the claim catalogue and report.
    Verify(VerifyArgs),
    /// CSV of J and J* across a family range.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    All,
    Internal,
    Both,
}

impl ModeArg {
    fn modes(self) -> &'static [Mode] {
        match self {
            ModeArg::All => &[Mode::AllVertices],
            ModeArg::Internal => &[Mode::InternalOnly],
            ModeArg::Both => &[Mode::AllVertices, Mode::InternalOnly],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    EdgeList,
    Graph6,
}

impl From<InputFormat> for GraphFormat {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::EdgeList => GraphFormat::EdgeList,
            InputFormat::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct GraphSource {
    /// Family name: path, cycle, complete, star, complete_bipartite, null,
    /// random_tree.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Order (leaves for star, first part for complete_bipartite).
    #[arg(long)]
    n: Option<usize>,
    /// Second part of complete_bipartite.
    #[arg(long)]
    m: Option<usize>,
    /// Seed for random_tree.
    #[arg(long)]
    seed: Option<u64>,
    /// Graph file.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edge-list")]
    input_format: InputFormat,
}

impl GraphSource {
    fn load(&self) -> Result<(String, Graph)> {
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            return Ok((path.display().to_string(), parse_graph(&text, self.input_format.into())?));
        }
        let Some(name) = &self.family else {
            return Err(Error::Config("give --family or --input".into()));
        };
        let f = family_of(name, self.n, self.m, self.seed)?;
        Ok((f.to_string(), generate(&f)?))
    }
}

fn family_of(name: &str, n: Option<usize>, m: Option<usize>, seed: Option<u64>) -> Result<Family> {
    let n = n.ok_or_else(|| Error::Config(format!("--family {name} needs --n")))?;
    let spec = match name {
        "complete_bipartite" => {
            let m = m.ok_or_else(|| Error::Config("complete_bipartite needs --m".into()))?;
            format!("{name}:{n},{m}")
        }
        "random_tree" => format!("{name}:{n},{}", seed.unwrap_or(0)),
        _ => format!("{name}:{n}"),
    };
    spec.parse()
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Refuse profiles above this order.
    #[arg(long, default_value_t = 12)]
    max_order: usize,
}

#[derive(Args, Debug)]
struct DeriveArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    kind: DerivativeKind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Text output in graph6 instead of an edge list.
    #[arg(long)]
    graph6: bool,
}

#[derive(Args, Debug)]
struct CombineArgs {
    /// Left operand: `name:params` family or `@path` edge-list file.
    #[arg(long)]
    left: String,
    /// Right operand, same syntax as --left.
    #[arg(long)]
    right: String,
    #[arg(long)]
    kind: CombineKind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    graph6: bool,
}

#[derive(Args, Debug)]
struct ExtremalArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Single target k; every k from J(G) down to 1 when omitted.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value = "connected_for_k_ge_2")]
    semantics: Semantics,
    /// Report a minimum edge set whose removal makes the graph admissible.
    #[arg(long)]
    repair: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, default_value_t = 21)]
    max_size: usize,
    #[arg(long, default_value_t = 12)]
    max_order: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// JSON corpus configuration; the built-in default when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Attach per-record runtimes.
    #[arg(long)]
    timings: bool,
    /// Print the default configuration and exit.
    #[arg(long)]
    print_default_config: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    /// Second parameter for complete_bipartite.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, default_value_t = 12)]
    max_order: usize,
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit status.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(&a),
        Command::Derive(a) => derive_cmd(&a),
        Command::Combine(a) => combine_cmd(&a),
        Command::Extremal(a) => extremal(&a),
        Command::Verify(a) => verify(&a),
        Command::Table(a) => table(&a),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::ScaleExceeded(_) => EXIT_SCALE,
                _ => EXIT_USAGE,
            }
        }
    }
}

type Output = Result<(String, i32)>;

fn ok(text: String) -> Output {
    Ok((text, EXIT_OK))
}

fn colours_text(c: &Colouring) -> String {
    c.colours().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn show(j: Option<usize>) -> String {
    j.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn profile_json(p: &JProfile) -> serde_json::Value {
    let witness = p.j.and_then(|j| p.witnesses.get(&j)).map(|c| c.colours().to_vec());
    json!({
        "mode": p.mode,
        "feasible_k": p.feasible_k,
        "j": p.j,
        "witness": witness,
    })
}

fn compute(a: &ComputeArgs) -> Output {
    let (name, g) = a.source.load()?;
    let limits = Limits::with_max_order(a.max_order);
    let profiles: Vec<JProfile> = a
        .mode
        .modes()
        .iter()
        .map(|&m| j_profile_with(&g, m, &limits))
        .collect::<Result<_>>()?;
    let (chi, chi_colouring) = chromatic_number(&g);
    let rainbow = (g.order() > 0).then(|| rainbow_neighbourhood_number(&g)).transpose()?;
    let label = |m: Mode| if m == Mode::AllVertices { "J" } else { "J*" };
    let text = match a.format {
        Format::Json => {
            let mut v = json!({
                "graph": name,
                "order": g.order(),
                "size": g.size(),
                "chromatic_number": chi,
                "chromatic_colouring": chi_colouring.colours(),
            });
            if let Some(r) = &rainbow {
                v["r_chi"] = json!({
                    "canonical": r.canonical,
                    "canonical_vertices": r.canonical_vertices,
                    "min": r.sweep.as_ref().map(|s| s.min),
                    "max": r.sweep.as_ref().map(|s| s.max),
                });
            }
            for p in &profiles {
                let key = if p.mode == Mode::AllVertices { "j" } else { "j_star" };
                v[key] = profile_json(p);
            }
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut header = vec!["graph", "n", "p", "chi", "r_chi"];
            let mut row = vec![
                csv_field(&name),
                g.order().to_string(),
                g.size().to_string(),
                chi.to_string(),
                rainbow.as_ref().map_or(String::new(), |r| r.canonical.to_string()),
            ];
            for p in &profiles {
                header.push(if p.mode == Mode::AllVertices { "j" } else { "j_star" });
                row.push(show(p.j));
            }
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "graph: {name} (n={}, p={})", g.order(), g.size());
            let _ = writeln!(s, "χ = {chi}: {}", colours_text(&chi_colouring));
            if let Some(r) = &rainbow {
                let _ = write!(s, "r_χ = {} (canonical χ⁻)", r.canonical);
                if let Some(sw) = &r.sweep {
                    let _ = write!(s, ", range {}..={} over all χ-colourings", sw.min, sw.max);
                }
                s.push('\n');
            }
            for p in &profiles {
                let _ = writeln!(s, "{} = {} (feasible k: {:?})", label(p.mode), show(p.j), p.feasible_k);
                if let Some(c) = p.j.and_then(|j| p.witnesses.get(&j)) {
                    let _ = writeln!(s, "  witness: {}", colours_text(c));
                }
            }
            s
        }
    };
    ok(text)
}

fn graph_text(g: &Graph, format: Format, graph6: bool) -> String {
    match format {
        Format::Json => serde_json::to_string(&GraphData::from(g)).expect("serializes") + "\n",
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for (u, v) in g.edges() {
                let _ = writeln!(s, "{u},{v}");
            }
            s
        }
        Format::Text if graph6 => {
            let mut s = serialize_graph(g, GraphFormat::Graph6);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
        Format::Text => serialize_graph(g, GraphFormat::EdgeList),
    }
}

fn derive_cmd(a: &DeriveArgs) -> Output {
    let (_, g) = a.source.load()?;
    ok(graph_text(&derive(&g, a.kind)?, a.format, a.graph6))
}

fn operand(s: &str) -> Result<Graph> {
    match s.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{path}: {e}")))?;
            parse_graph(&text, GraphFormat::EdgeList)
        }
        None => generate(&s.parse()?),
    }
}

fn combine_cmd(a: &CombineArgs) -> Output {
    let g = combine(&operand(&a.left)?, &operand(&a.right)?, a.kind)?;
    ok(graph_text(&g, a.format, a.graph6))
}

fn edges_text(edges: &[Edge]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn extremal(a: &ExtremalArgs) -> Output {
    let (name, g) = a.source.load()?;
    let limits = ExtremalLimits {
        max_size: a.max_size,
        profile: Limits::with_max_order(a.max_order),
    };
    if a.repair {
        let r = minimal_repair_with(&g, &limits)?;
        let text = match a.format {
            Format::Json => serde_json::to_string_pretty(&r).expect("serializes") + "\n",
            Format::Csv => format!("removed,j\n{},{}\n", csv_field(&edges_text(&r.removed)), r.j),
            Format::Text => format!("{name}: remove {} edge(s) [{}], J = {}\n", r.removed.len(), edges_text(&r.removed), r.j),
        };
        return ok(text);
    }
    let ks: Vec<usize> = match a.k {
        Some(k) => vec![k],
        None => match j_profile_with(&g, Mode::AllVertices, &limits.profile)?.j {
            Some(j) => (1..=j).rev().collect(),
            None => Vec::new(),
        },
    };
    let rows: Vec<BondingResult> = ks
        .into_iter()
        .map(|k| {
            Ok(BondingResult {
                k,
                semantics: a.semantics,
                r_minus: r_minus_with(&g, k, a.semantics, &limits)?,
                r_plus: r_plus_with(&g, k, a.semantics, &limits)?,
            })
        })
        .collect::<Result<_>>()?;
    let count = |e: &Option<Extremum>| e.as_ref().map(|e| e.count);
    let text = match a.format {
        Format::Json => serde_json::to_string_pretty(&json!({ "graph": name, "rows": rows })).expect("serializes") + "\n",
        Format::Csv => {
            let mut s = String::from("k,r_minus,r_plus,semantics,witness_edges\n");
            for r in &rows {
                let w = r.r_minus.as_ref().map(|e| edges_text(&e.witness)).unwrap_or_default();
                let _ = writeln!(s, "{},{},{},{},{}", r.k, show(count(&r.r_minus)), show(count(&r.r_plus)), r.semantics, csv_field(&w));
            }
            s
        }
        Format::Text => {
            let mut s = format!("{name} ({} semantics)\n", a.semantics);
            if rows.is_empty() {
                s.push_str("no J-colouring: bonding variables undefined\n");
            }
            for r in &rows {
                let _ = writeln!(s, "k={}: r⁻ = {}, r⁺ = {}", r.k, show(count(&r.r_minus)), show(count(&r.r_plus)));
                if let Some(e) = &r.r_minus {
                    let _ = writeln!(s, "  r⁻ witness: {}", edges_text(&e.witness));
                }
                if let Some(e) = &r.r_plus {
                    let _ = writeln!(s, "  r⁺ witness: {}", edges_text(&e.witness));
                }
            }
            s
        }
    };
    ok(text)
}

fn verify(a: &VerifyArgs) -> Output {
    if a.print_default_config {
        return ok(CorpusConfig::default().to_json() + "\n");
    }
    let mut cfg = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            CorpusConfig::from_json(&text)?
        }
        None => CorpusConfig::default(),
    };
    cfg.timings |= a.timings;
    let report = run_verification(&cfg)?;
    let text = match a.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
        Format::Text => {
            let s = &report.summary;
            let mut t = format!(
                "confirmed {}, refuted {}, not applicable {}, report-only {}, hard failures {}\n",
                s.confirmed, s.refuted, s.not_applicable, s.report_only, s.hard_failures
            );
            if !s.missing_claims.is_empty() {
                let _ = writeln!(t, "missing claims: {}", s.missing_claims.join(", "));
            }
            for r in report.claims.iter().filter(|r| r.verdict == crate::verify::Verdict::Refuted) {
                let tag = if r.report_only { "report-only" } else { "HARD" };
                let _ = writeln!(t, "[{tag}] {} {}: predicted {}, computed {}", r.claim, r.instance, r.predicted, r.computed);
            }
            t
        }
    };
    let code = if report.passed() { EXIT_OK } else { EXIT_HARD_FAILURE };
    Ok((text, code))
}

fn table(a: &TableArgs) -> Output {
    if a.from > a.to {
        return Err(Error::Config("--from exceeds --to".into()));
    }
    let limits = Limits::with_max_order(a.max_order);
    let mut rows = Vec::new();
    for n in a.from..=a.to {
        let f = family_of(&a.family, Some(n), a.m, a.seed)?;
        let g = generate(&f)?;
        let j = j_profile_with(&g, Mode::AllVertices, &limits)?.j;
        let js = j_profile_with(&g, Mode::InternalOnly, &limits)?.j;
        rows.push((f.to_string(), g.order(), g.size(), chromatic_number(&g).0, j, js));
    }
    let text = match a.format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(name, n, p, chi, j, js)| json!({"graph": name, "n": n, "p": p, "chi": chi, "j": j, "j_star": js}))
                .collect();
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Csv | Format::Text => {
            let mut s = String::from("graph,n,p,chi,j,j_star\n");
            for (name, n, p, chi, j, js) in &rows {
                let _ = writeln!(s, "{},{n},{p},{chi},{},{}", csv_field(name), show(*j), show(*js));
            }
            s
        }
    };
    ok(text)
}
