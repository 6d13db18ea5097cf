//! Command-line frontend: construction, verification, bound tables, field
//! inspection and export.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invalid q.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use mixcage::bounds::{compute_table, render_table, TableFormat};
use mixcage::construction::{build_h, ConstructionError, VerificationReport};
use mixcage::corpus::{cross_check, oracle_corpus, DEFAULT_SEED};
use mixcage::field::{FieldContext, FieldError, PrimePower};
use mixcage::graph::{GraphFormat, RegularityWitness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_Q: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mixcage",
    version,
    about = "Mixed graphs of girth 6 from elliptic semiplanes of type L"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the mixed graph for q and write it out.
    Construct(ConstructArgs),
    /// Build the mixed graph for q and check every claimed property.
    Verify(VerifyArgs),
    /// Emit the upper-bound table for a list of orders.
    Table(TableArgs),
    /// Write the mixed graph for q to a file (construct with a required --out).
    Export(ExportArgs),
    /// Print the field GF(q): modulus, primitive element, tables.
    Field(FieldArgs),
    /// Cross-check the BFS girth against exhaustive cycle enumeration.
    OracleCheck(OracleArgs),
}

#[derive(Debug, Args)]
pub struct QArg {
    /// Field order (a prime power)
    #[arg(long)]
    pub q: u64,
    /// Allow 4 <= q < 7, where the girth claim is not proved
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub q: QArg,
    /// Output file; standard output if omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "json", value_parser = parse_graph_format)]
    pub format: GraphFormat,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub q: QArg,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value = "json", value_parser = parse_graph_format)]
    pub format: GraphFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub q: QArg,
    /// Print the report as JSON
    #[arg(long)]
    pub json: bool,
    /// Worker threads for the girth search (1 = sequential)
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Comma-separated orders, e.g. 7,8,9
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub q_list: Vec<String>,
    /// Back every row with a full verification run
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value = "csv", value_parser = parse_table_format)]
    pub format: TableFormat,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub show_tables: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Largest q for the geometry-derived graphs in the corpus
    #[arg(long, default_value_t = 5)]
    pub max_q: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

fn parse_graph_format(s: &str) -> Result<GraphFormat, String> {
    s.parse()
}

fn parse_table_format(s: &str) -> Result<TableFormat, String> {
    s.parse()
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> i32 {
    let invalid_q = e.chain().any(|cause| {
        matches!(
            cause.downcast_ref::<ConstructionError>(),
            Some(ConstructionError::OrderTooSmall { .. } | ConstructionError::Field(_))
        ) || cause.downcast_ref::<FieldError>().is_some()
    });
    if invalid_q {
        EXIT_INVALID_Q
    } else {
        EXIT_USAGE
    }
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    if threads <= 1 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("starting worker threads")?;
    Ok(pool.install(f))
}

fn execute(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Construct(args) => construct(&args.q, args.out, args.format, out),
        Command::Export(args) => construct(&args.q, Some(args.out), args.format, out),
        Command::Verify(args) => verify(args, out),
        Command::Table(args) => table(args, out),
        Command::Field(args) => field(args, out),
        Command::OracleCheck(args) => oracle_check(args, out),
    }
}

fn construct(
    q: &QArg,
    path: Option<PathBuf>,
    format: GraphFormat,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let order = PrimePower::new(q.q)?;
    let c = build_h(order, q.force)?;
    let text = c.document().render(format);
    match path {
        Some(path) => {
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let order = PrimePower::new(args.q.q)?;
    let c = build_h(order, args.q.force)?;
    let parallel = args.threads > 1;
    let report = with_threads(args.threads, || c.verify(parallel))?;
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &report)?;
        writeln!(out)?;
    } else {
        out.write_all(render_report(&report).as_bytes())?;
    }
    Ok(if report.claims_pass {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn render_report(r: &VerificationReport) -> String {
    let g = &r.graph;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "q={} p={} case={:?} jumps={:?}",
        r.q, r.p, r.parity_case, r.jumps
    );
    let _ = writeln!(
        s,
        "order={} (expected {}) {}",
        g.order,
        g.claims.order,
        pass(g.order == g.claims.order)
    );
    match &g.regularity {
        RegularityWitness::Regular { z, r: edges } => {
            let _ = writeln!(s, "z={z} r={edges} totally regular pass");
        }
        RegularityWitness::Irregular { vertex, degree } => {
            let _ = writeln!(
                s,
                "z={} r={} not regular at {vertex}: in={} out={} edges={} FAIL",
                g.claims.z, g.claims.r, degree.in_arcs, degree.out_arcs, degree.edge_degree
            );
        }
    }
    let _ = writeln!(
        s,
        "girth={} (expected {}) {}",
        g.mixed_girth,
        g.claims.girth,
        pass(g.mixed_girth.value() == Some(g.claims.girth))
    );
    if let Some(w) = &g.girth_witness {
        let _ = writeln!(s, "witness: {}", w.join(" "));
    }
    let _ = writeln!(s, "directed girth={}", g.directed_girth);
    let _ = writeln!(s, "bipartite {}", pass(g.bipartite));
    let parts_ok = r.parts.iter().filter(|p| p.pass).count();
    let _ = writeln!(
        s,
        "parts: {}/{} circulant with directed girth {} {} {}",
        parts_ok,
        r.parts.len(),
        if r.part_directed_girth_exact {
            "="
        } else {
            ">="
        },
        r.part_directed_girth_min,
        pass(parts_ok == r.parts.len())
    );
    for p in r.parts.iter().filter(|p| !p.pass) {
        let _ = writeln!(
            s,
            "  part {}: order={} edges={} offsets={:?} directed girth={} FAIL",
            p.part, p.order, p.edges, p.offsets, p.directed_girth
        );
    }
    let st = &r.structure;
    let _ = writeln!(
        s,
        "structure: matchings={} linf-pinf edges={} arcs local={} simple={} {}",
        st.part_matchings,
        st.linf_pinf_edges,
        st.arcs_local,
        st.simple,
        pass(st.pass())
    );
    let _ = writeln!(s, "claims {}", pass(r.claims_pass));
    s
}

fn table(args: TableArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let mut q_list = Vec::new();
    for item in args
        .q_list
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
    {
        match item.parse::<u64>() {
            Ok(q) => q_list.push(q),
            Err(_) => {
                anyhow::bail!(UsageError(format!("`{item}` is not an integer")));
            }
        }
    }
    let parallel = args.threads > 1;
    let entries = with_threads(args.threads, || {
        compute_table(&q_list, args.verify, parallel)
    })?;
    out.write_all(render_table(&entries, args.format).as_bytes())?;
    let failed = entries.iter().any(|e| e.verified == Some(false));
    Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Stable text description of GF(q).
pub fn render_field(ctx: &FieldContext, show_tables: bool) -> String {
    let order = ctx.order();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "q = {} (p = {}, k = {})",
        order.q(),
        order.p(),
        order.k()
    );
    let _ = writeln!(s, "modulus: {}", ctx.modulus());
    let _ = writeln!(s, "primitive element: {}", ctx.as_polynomial(ctx.xi()));
    if show_tables {
        let _ = writeln!(s, "exp table:");
        for (e, &a) in ctx.nonzero_by_exponent().iter().enumerate() {
            let _ = writeln!(s, "  xi^{e} = {}", ctx.as_polynomial(a));
        }
        let _ = writeln!(s, "log table:");
        for a in ctx.elements().skip(1) {
            let e = ctx.log(a).expect("nonzero").0;
            let _ = writeln!(s, "  log({}) = {e}", ctx.as_polynomial(a));
        }
    }
    s
}

fn field(args: FieldArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let ctx = FieldContext::for_order(args.q)?;
    out.write_all(render_field(&ctx, args.show_tables).as_bytes())?;
    Ok(EXIT_OK)
}

fn oracle_check(args: OracleArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let corpus = oracle_corpus(args.max_q, args.seed);
    let checks = with_threads(args.threads, || {
        use rayon::prelude::*;
        corpus
            .par_iter()
            .map(cross_check)
            .collect::<Result<Vec<_>, _>>()
    })??;
    let mut disagreements = 0;
    for c in &checks {
        if !c.agrees() {
            disagreements += 1;
            writeln!(
                out,
                "MISMATCH {}: bfs={} oracle={}",
                c.name, c.bfs, c.oracle
            )?;
        }
    }
    writeln!(
        out,
        "{} graphs checked, {} agree, {} disagree",
        checks.len(),
        checks.len() - disagreements,
        disagreements
    )?;
    Ok(if disagreements == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}
