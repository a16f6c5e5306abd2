//! The `fsc` command-line tool.
//!
//! [`run`] holds all the logic so tests can drive it with in-memory
//! streams; the binary only forwards `std::env::args_os` and the standard
//! streams.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use fsc_core::bundled::{self, BundledModel, Quantity};
use fsc_core::{
    check_theorems, conn_subgraphs, conn_vertex, conn_vertex_to_subgraph, disjoint_pair,
    fuzzy_bridges, generate_report, oracle_bridges, t_equivalence_classes_within, BridgeReport,
    ConnSemantics, ConnValue, Endpoint, Error, FuzzySubgraph, GraphDocument, Membership,
    OracleBudget, ReportOptions, TheoremCheck,
};

#[derive(Parser, Debug)]
#[command(
    name = "fsc",
    version,
    about = "Connectivity analysis for fuzzy graphs and fuzzy subgraphs"
)]
pub struct Cli {
    /// Absolute tolerance for comparisons against a target value `t`.
    #[arg(long, global = true, default_value_t = 0.0, value_name = "EPS")]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a document and check every graph invariant.
    Validate { file: PathBuf },

    /// Connectivity between two endpoints (a vertex, or `@Name` for a subgraph).
    Conn {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, value_enum, default_value_t = Semantics::Path)]
        semantics: Semantics,
        /// Also print the witness path.
        #[arg(long)]
        witness: bool,
        /// Report whether the value equals `t` (within `--tolerance`).
        #[arg(long, value_name = "T")]
        equals: Option<String>,
    },

    /// List fuzzy bridges and the pairs each one weakens.
    Bridges {
        file: PathBuf,
        /// Cross-check against exhaustive path enumeration.
        #[arg(long)]
        verify: bool,
    },

    /// Full connectivity report.
    Report {
        file: PathBuf,
        /// Subgraphs to pair up, as `@Name`; defaults to all declared.
        #[arg(long, num_args = 2..)]
        pairs: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Semantics::Path)]
        semantics: Semantics,
    },

    /// Report on the bundled coronary heart disease model.
    Chd {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },

    /// Evaluate the connectivity theorems on one subgraph pair.
    Check {
        file: PathBuf,
        #[arg(long, num_args = 2, required = true)]
        pairs: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },

    /// Group subgraphs whose pairwise connectivity equals `t`.
    Classes {
        file: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        family: Vec<String>,
        #[arg(short, long, value_name = "T")]
        t: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Semantics {
    Path,
    Xmax,
    Xmin,
}

impl From<Semantics> for ConnSemantics {
    fn from(s: Semantics) -> Self {
        match s {
            Semantics::Path => ConnSemantics::PathMaxMin,
            Semantics::Xmax => ConnSemantics::CrossEdgeMax,
            Semantics::Xmin => ConnSemantics::CrossEdgeMin,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// How a command failed: bad invocation (exit 2) or bad data (exit 1).
enum Failure {
    Usage(String),
    Data(String),
}

type Outcome = Result<(), Failure>;

fn data(e: Error) -> Failure {
    Failure::Data(e.to_string())
}

fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::Data(format!("{}: {e}", path.display()))
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Data(format!("write failed: {e}"))
}

/// Runs the tool and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    if !(cli.tolerance >= 0.0 && cli.tolerance.is_finite()) {
        return Err(Failure::Usage(format!(
            "--tolerance must be a non-negative number, got {}",
            cli.tolerance
        )));
    }
    match cli.command {
        Command::Validate { file } => validate(&file, out),
        Command::Conn {
            file,
            from,
            to,
            semantics,
            witness,
            equals,
        } => conn(
            &file,
            &from,
            &to,
            semantics.into(),
            witness,
            equals,
            cli.tolerance,
            out,
        ),
        Command::Bridges { file, verify } => bridges(&file, verify, out, err),
        Command::Report {
            file,
            pairs,
            format,
            semantics,
        } => {
            let doc = load(&file)?;
            let subgraphs = pairs
                .map(|p| p.iter().map(|s| subgraph_name(s)).collect())
                .transpose()?;
            let options = ReportOptions {
                subgraphs,
                semantics: semantics.into(),
            };
            let report = generate_report(&doc, &options).map_err(in_file(&file))?;
            emit_report(&report, format, out)
        }
        Command::Chd { format } => {
            let report = generate_report(&bundled::chd_document(), &ReportOptions::default())
                .map_err(data)?;
            emit_report(&report, format, out)
        }
        Command::Check {
            file,
            pairs,
            format,
        } => check(&file, &pairs, format, out),
        Command::Classes { file, family, t } => classes(&file, &family, &t, cli.tolerance, out),
    }
}

fn load(path: &Path) -> Result<GraphDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Data(format!("cannot read {}: {e}", path.display())))?;
    GraphDocument::parse(&text).map_err(in_file(path))
}

fn subgraph_name(arg: &str) -> Result<String, Failure> {
    match Endpoint::parse(arg) {
        Ok(Endpoint::Subgraph(name)) => Ok(name),
        _ => Err(Failure::Usage(format!(
            "expected a subgraph reference like @H, got {arg:?}"
        ))),
    }
}

fn membership_arg(flag: &str, text: &str) -> Result<Membership, Failure> {
    text.parse()
        .map_err(|e| Failure::Usage(format!("{flag}: {e}")))
}

fn validate(file: &Path, out: &mut dyn Write) -> Outcome {
    let doc = load(file)?;
    writeln!(
        out,
        "ok: {} vertices, {} edges, {} subgraphs, {} roles",
        doc.graph.vertex_count(),
        doc.graph.edge_count(),
        doc.subgraphs.len(),
        doc.roles.len()
    )
    .map_err(io_failure)
}

/// A resolved endpoint: a single vertex or a declared subgraph.
enum Side<'d> {
    Vertex(String),
    Subgraph(String, FuzzySubgraph<'d>),
}

impl Side<'_> {
    fn label(&self) -> &str {
        match self {
            Side::Vertex(v) | Side::Subgraph(v, _) => v,
        }
    }

    fn names(&self) -> BTreeSet<String> {
        match self {
            Side::Vertex(v) => BTreeSet::from([v.clone()]),
            Side::Subgraph(_, h) => h.vertices().map(|v| v.to_string()).collect(),
        }
    }
}

fn resolve<'d>(doc: &'d GraphDocument, arg: &str) -> Result<Side<'d>, Failure> {
    let endpoint = Endpoint::parse(arg).map_err(|e| Failure::Usage(format!("{arg:?}: {e}")))?;
    match endpoint {
        Endpoint::Vertex(v) => {
            if !doc.graph.contains(&v) {
                return Err(data(Error::UnknownVertex(v.to_string())));
            }
            Ok(Side::Vertex(v.to_string()))
        }
        Endpoint::Subgraph(name) => {
            let h = doc.subgraph(&name).map_err(data)?;
            Ok(Side::Subgraph(name, h))
        }
    }
}

fn compute(
    doc: &GraphDocument,
    from: &Side<'_>,
    to: &Side<'_>,
    semantics: ConnSemantics,
) -> fsc_core::Result<ConnValue> {
    let g = &doc.graph;
    match (from, to, semantics) {
        (Side::Vertex(u), Side::Vertex(v), ConnSemantics::PathMaxMin) => conn_vertex(g, u, v),
        (Side::Vertex(x), Side::Subgraph(_, h), ConnSemantics::PathMaxMin) => {
            conn_vertex_to_subgraph(g, x, h)
        }
        (Side::Subgraph(_, h), Side::Vertex(x), ConnSemantics::PathMaxMin) => {
            let c = conn_vertex_to_subgraph(g, x, h)?;
            Ok(ConnValue {
                value: c.value,
                witness: c.witness.map(|w| w.reversed()),
            })
        }
        // Cross-edge semantics treat a lone vertex as a one-vertex subgraph.
        _ => {
            let (a, b) = (from.names(), to.names());
            let (h1, h2) = disjoint_pair(g, &a, &b)?;
            conn_subgraphs(g, &h1, &h2, semantics)
        }
    }
}

/// The published claim for this exact query on a bundled model, if one
/// exists.
fn published_claim(
    doc: &GraphDocument,
    from: &Side<'_>,
    to: &Side<'_>,
    semantics: ConnSemantics,
) -> Option<bundled::ClaimOutcome> {
    if semantics != ConnSemantics::PathMaxMin {
        return None;
    }
    let model = BundledModel::identify(&doc.graph)?;
    let set = |s: &[&str]| s.iter().map(|v| v.to_string()).collect::<BTreeSet<_>>();
    let (a, b) = (from.names(), to.names());
    model
        .claims()
        .iter()
        .find(|claim| match claim.quantity {
            Quantity::VertexToSubgraph(x, h) => {
                let x = set(&[x]);
                let h = set(h);
                matches!(
                    (from, to),
                    (Side::Vertex(_), Side::Subgraph(..)) | (Side::Subgraph(..), Side::Vertex(_))
                ) && ((a == x && b == h) || (a == h && b == x))
            }
            Quantity::Subgraphs(h1, h2) => {
                let (h1, h2) = (set(h1), set(h2));
                matches!((from, to), (Side::Subgraph(..), Side::Subgraph(..)))
                    && ((a == h1 && b == h2) || (a == h2 && b == h1))
            }
            _ => false,
        })
        .map(|claim| bundled::evaluate_claim(&doc.graph, claim))
}

#[allow(clippy::too_many_arguments)]
fn conn(
    file: &Path,
    from: &str,
    to: &str,
    semantics: ConnSemantics,
    show_witness: bool,
    equals: Option<String>,
    tolerance: f64,
    out: &mut dyn Write,
) -> Outcome {
    let target = equals
        .as_deref()
        .map(|t| membership_arg("--equals", t))
        .transpose()?;
    let doc = load(file)?;
    let (a, b) = (resolve(&doc, from)?, resolve(&doc, to)?);
    let value = compute(&doc, &a, &b, semantics).map_err(data)?;
    let w = |r: std::io::Result<()>| r.map_err(io_failure);
    w(writeln!(out, "{}", value.value))?;
    if show_witness {
        match &value.witness {
            Some(p) => w(writeln!(out, "witness: {p}"))?,
            None => w(writeln!(out, "witness: none"))?,
        }
    }
    if let Some(t) = target {
        let yes = value.value.approx_eq(t, tolerance);
        w(writeln!(
            out,
            "equals {t}: {}",
            if yes { "yes" } else { "no" }
        ))?;
    }
    if let Some(outcome) = published_claim(&doc, &a, &b, semantics) {
        if !outcome.agrees {
            w(writeln!(
                out,
                "note: the published value for CONN({},{}) is {}; computed {} ({})",
                a.label(),
                b.label(),
                outcome.published,
                outcome.computed,
                outcome.note
            ))?;
        }
    }
    Ok(())
}

fn bridge_keys(list: &[BridgeReport]) -> Vec<(String, String)> {
    list.iter()
        .map(|b| (b.edge.0.to_string(), b.edge.1.to_string()))
        .collect()
}

fn bridges(file: &Path, verify: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let doc = load(file)?;
    let found = fuzzy_bridges(&doc.graph).map_err(data)?;
    let w = |r: std::io::Result<()>| r.map_err(io_failure);
    if found.is_empty() {
        w(writeln!(out, "no fuzzy bridges"))?;
    }
    for b in &found {
        let pairs: Vec<String> = b
            .weakened_pairs
            .iter()
            .map(|p| format!("{}-{} {} -> {}", p.u, p.v, p.before, p.after))
            .collect();
        w(writeln!(
            out,
            "{}-{} ({}): {}",
            b.edge.0,
            b.edge.1,
            b.membership,
            pairs.join(", ")
        ))?;
    }
    if verify {
        match oracle_bridges(&doc.graph, OracleBudget::default()) {
            Ok(expected) if expected == found => {
                w(writeln!(out, "verified: exhaustive enumeration agrees"))?
            }
            Ok(expected) => {
                return Err(Failure::Data(format!(
                    "exhaustive enumeration disagrees: expected bridges {:?}, found {:?}",
                    bridge_keys(&expected),
                    bridge_keys(&found)
                )))
            }
            Err(Error::BudgetExceeded(why)) => w(writeln!(
                err,
                "note: verification skipped, graph exceeds the enumeration budget ({why})"
            ))?,
            Err(e) => return Err(data(e)),
        }
    }
    Ok(())
}

fn emit_report(
    report: &fsc_core::ConnectivityReport,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    out.write_all(text.as_bytes()).map_err(io_failure)
}

fn check(file: &Path, pairs: &[String], format: Format, out: &mut dyn Write) -> Outcome {
    let doc = load(file)?;
    let (n1, n2) = (subgraph_name(&pairs[0])?, subgraph_name(&pairs[1])?);
    let h1 = doc.subgraph(&n1).map_err(data)?;
    let h2 = doc.subgraph(&n2).map_err(data)?;
    let checks: Vec<TheoremCheck> = check_theorems(&doc.graph, &h1, &h2).map_err(data)?;
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&checks).expect("checks serialize");
            s.push('\n');
            s
        }
        Format::Text => checks
            .iter()
            .map(|c| {
                let details: Vec<String> = c
                    .details
                    .iter()
                    .map(|(k, v)| format!("{k} = {v}"))
                    .collect();
                format!(
                    "[{}] {} ({n1},{n2}): {}\n",
                    if c.holds { "holds" } else { "FAILS" },
                    c.name,
                    details.join(", ")
                )
            })
            .collect(),
    };
    out.write_all(text.as_bytes()).map_err(io_failure)
}

fn classes(
    file: &Path,
    family: &[String],
    t: &str,
    tolerance: f64,
    out: &mut dyn Write,
) -> Outcome {
    let t = membership_arg("-t", t)?;
    let doc = load(file)?;
    let names = family
        .iter()
        .map(|s| subgraph_name(s))
        .collect::<Result<Vec<_>, _>>()?;
    let subgraphs = names
        .iter()
        .map(|n| doc.subgraph(n))
        .collect::<fsc_core::Result<Vec<_>>>()
        .map_err(data)?;
    let partition =
        t_equivalence_classes_within(&doc.graph, &subgraphs, t, tolerance).map_err(data)?;
    let w = |r: std::io::Result<()>| r.map_err(io_failure);
    for &(i, j, value) in &partition.values {
        w(writeln!(out, "CONN({},{}) = {value}", names[i], names[j]))?;
    }
    for class in &partition.classes {
        let members: Vec<&str> = class.iter().map(|&i| names[i].as_str()).collect();
        w(writeln!(out, "class: {}", members.join(" ")))?;
    }
    if partition.is_transitive() {
        w(writeln!(out, "relation is transitive"))?;
    }
    for v in &partition.violations {
        w(writeln!(
            out,
            "not transitive: {} ~ {} and {} ~ {}, but not {} ~ {}",
            names[v.first],
            names[v.middle],
            names[v.middle],
            names[v.last],
            names[v.first],
            names[v.last]
        ))?;
    }
    Ok(())
}
