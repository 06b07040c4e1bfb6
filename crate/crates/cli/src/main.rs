//! Command-line front end: single-graph reports, catalog runs over files or
//! the built-in generator, and focused probes (quadraticity, Kempe classes,
//! contraction sequences, class membership).

mod report;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use stabring::coloring::kempe_classes;
use stabring::iso::connected_graphs_up_to;
use stabring::structure::{
    even_contractile_sequence, everett_reed_class, validate_class_report,
    validate_contraction_sequence, ContractileOutcome, PrismWitness,
};
use stabring::toric::{is_quadratic_fiber, is_quadratic_kempe, stable_sets};
use stabring::{parse_graph, to_graph6, Graph};

use report::{
    analyze, csv_record, default_degree_bound, method_report, RunConfig, CSV_HEADER, SCHEMA,
};

#[derive(Parser)]
#[command(
    name = "stabring",
    version,
    about = "Decides, up to configurable bounds, whether the stable set ring of a graph \
             is quadratic, and reports the structural graph classes around that question."
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Search budget: contraction nodes and colorings enumerated per check.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Kempe,
    Fiber,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural and quadraticity report for one graph.
    Analyze {
        /// graph6 string, edge list, or path to a file holding either.
        graph: String,
        /// Highest binomial degree scanned; default n+1 when perfect, else 6.
        #[arg(long)]
        degree_bound: Option<usize>,
    },
    /// One report per graph from a file of graph6 lines or `gen:n<=K`.
    Catalog {
        source: String,
        #[arg(long)]
        degree_bound: Option<usize>,
    },
    /// Quadraticity verdict by the chosen method(s).
    Quadratic {
        graph: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long)]
        degree_bound: Option<usize>,
    },
    /// Kempe class partition of the k-colorings.
    Kempe {
        graph: String,
        #[arg(short, value_name = "K")]
        k: usize,
    },
    /// Even-pair contraction sequence search.
    Contractile { graph: String },
    /// Graph class membership with witnesses.
    Classes { graph: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg_budget = cli.budget;
    match cli.command {
        Command::Analyze { graph, degree_bound } => {
            let g = load_graph(&graph)?;
            let cfg = RunConfig { degree_bound, budget: cfg_budget };
            let row = analyze(&g, &cfg).map_err(|e| anyhow!(e))?;
            emit_rows(cli.format, std::slice::from_ref(&row))?;
            Ok(exit_for(row.consistency.ok))
        }
        Command::Catalog { source, degree_bound } => {
            let graphs = load_catalog(&source)?;
            let cfg = RunConfig { degree_bound, budget: cfg_budget };
            run_catalog(cli.format, &graphs, &cfg)
        }
        Command::Quadratic { graph, method, degree_bound } => {
            let g = load_graph(&graph)?;
            quadratic_command(cli.format, &g, method, degree_bound)
        }
        Command::Kempe { graph, k } => {
            let g = load_graph(&graph)?;
            kempe_command(cli.format, &g, k)
        }
        Command::Contractile { graph } => {
            let g = load_graph(&graph)?;
            contractile_command(cli.format, &g, cfg_budget)
        }
        Command::Classes { graph } => {
            let g = load_graph(&graph)?;
            classes_command(cli.format, &g)
        }
    }
}

fn exit_for(consistent: bool) -> ExitCode {
    if consistent {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load_graph(arg: &str) -> Result<Graph> {
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    parse_graph(text.trim()).map_err(|e| anyhow!("bad graph {arg:?}: {e}"))
}

fn load_catalog(source: &str) -> Result<Vec<Result<Graph, String>>> {
    for prefix in ["gen:n≤", "gen:n<="] {
        if let Some(rest) = source.strip_prefix(prefix) {
            let k: usize = rest
                .parse()
                .map_err(|_| anyhow!("bad generator bound {rest:?}"))?;
            if k == 0 || k > 6 {
                bail!("generator supports 1..=6 vertices, got {k}");
            }
            return Ok(connected_graphs_up_to(k).into_iter().map(Ok).collect());
        }
    }
    let text = fs::read_to_string(source).with_context(|| format!("reading {source}"))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_graph(l).map_err(|e| format!("{l:?}: {e}")))
        .collect())
}

#[derive(Serialize)]
struct ErrorRow {
    schema: u32,
    error: String,
}

#[derive(Serialize)]
struct Summary {
    schema: u32,
    rows: usize,
    violations: usize,
    parse_errors: usize,
    nonquadratic: usize,
}

fn run_catalog(
    format: Format,
    graphs: &[Result<Graph, String>],
    cfg: &RunConfig,
) -> Result<ExitCode> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut csv = (format == Format::Csv).then(|| {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).unwrap();
        w
    });
    let mut summary = Summary {
        schema: SCHEMA,
        rows: 0,
        violations: 0,
        parse_errors: 0,
        nonquadratic: 0,
    };
    for entry in graphs {
        let parsed = match entry {
            Ok(g) => analyze(g, cfg),
            Err(e) => {
                summary.parse_errors += 1;
                match format {
                    Format::Json => {
                        let row = ErrorRow { schema: SCHEMA, error: e.clone() };
                        writeln!(out, "{}", serde_json::to_string(&row)?)?;
                    }
                    Format::Csv => eprintln!("skipping unparsable entry: {e}"),
                }
                continue;
            }
        };
        match parsed {
            Ok(row) => {
                summary.rows += 1;
                if !row.consistency.ok {
                    summary.violations += 1;
                }
                if row.quadratic.fiber.status == "non_quadratic" {
                    summary.nonquadratic += 1;
                }
                match (&mut csv, format) {
                    (Some(w), _) => w.write_record(csv_record(&row))?,
                    (None, _) => writeln!(out, "{}", serde_json::to_string(&row)?)?,
                }
            }
            Err(e) => {
                summary.parse_errors += 1;
                match format {
                    Format::Json => {
                        let row = ErrorRow { schema: SCHEMA, error: e };
                        writeln!(out, "{}", serde_json::to_string(&row)?)?;
                    }
                    Format::Csv => eprintln!("skipping failed graph: {e}"),
                }
            }
        }
    }
    match csv {
        Some(w) => {
            out.write_all(&w.into_inner()?)?;
            eprintln!(
                "rows={} violations={} parse_errors={} nonquadratic={}",
                summary.rows, summary.violations, summary.parse_errors, summary.nonquadratic
            );
        }
        None => writeln!(out, "{}", serde_json::to_string(&summary)?)?,
    }
    Ok(exit_for(summary.violations == 0))
}

fn emit_rows(format: Format, rows: &[report::Row]) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            for row in rows {
                writeln!(out, "{}", serde_json::to_string(row)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for row in rows {
                w.write_record(csv_record(row))?;
            }
            out.write_all(&w.into_inner()?)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct QuadraticOutput {
    schema: u32,
    command: &'static str,
    graph: String,
    n: usize,
    degree_bound: usize,
    verdicts: Vec<report::MethodReport>,
    agree: Option<bool>,
}

fn quadratic_command(
    format: Format,
    g: &Graph,
    method: MethodArg,
    degree_bound: Option<usize>,
) -> Result<ExitCode> {
    let fam = stable_sets(g);
    let bound = degree_bound
        .unwrap_or_else(|| default_degree_bound(g.n(), stabring::structure::is_perfect(g)));
    let mut verdicts = Vec::new();
    let mut raw = Vec::new();
    if matches!(method, MethodArg::Fiber | MethodArg::Both) {
        raw.push(is_quadratic_fiber(g, bound).map_err(|e| anyhow!("{e}"))?);
    }
    if matches!(method, MethodArg::Kempe | MethodArg::Both) {
        raw.push(is_quadratic_kempe(g, bound).map_err(|e| anyhow!("{e}"))?);
    }
    for v in &raw {
        verdicts.push(method_report(&fam, v));
    }
    let agree = (raw.len() == 2).then(|| {
        raw[0].status == raw[1].status
            && raw[0].witness.as_ref().map(|b| b.render(&fam))
                == raw[1].witness.as_ref().map(|b| b.render(&fam))
    });
    let output = QuadraticOutput {
        schema: SCHEMA,
        command: "quadratic",
        graph: to_graph6(g),
        n: g.n(),
        degree_bound: bound,
        verdicts,
        agree,
    };
    print_record(format, &output, quadratic_csv(&output))?;
    Ok(exit_for(agree != Some(false)))
}

fn quadratic_csv(o: &QuadraticOutput) -> (Vec<&'static str>, Vec<String>) {
    let mut header = vec!["graph", "n", "degree_bound", "agree"];
    let mut record = vec![
        o.graph.clone(),
        o.n.to_string(),
        o.degree_bound.to_string(),
        o.agree.map(|a| a.to_string()).unwrap_or_default(),
    ];
    for v in &o.verdicts {
        header.push(if v.method == "fiber" { "fiber_status" } else { "kempe_status" });
        record.push(v.status.to_string());
        header.push(if v.method == "fiber" { "fiber_witness" } else { "kempe_witness" });
        record.push(v.witness.as_ref().map(|w| w.text.clone()).unwrap_or_default());
    }
    (header, record)
}

#[derive(Serialize)]
struct KempeOutput {
    schema: u32,
    command: &'static str,
    graph: String,
    n: usize,
    k: usize,
    colorings: usize,
    class_count: usize,
    class_sizes: Vec<usize>,
    all_equivalent: bool,
}

fn kempe_command(format: Format, g: &Graph, k: usize) -> Result<ExitCode> {
    if k > 250 {
        bail!("color count {k} out of supported range");
    }
    let part = kempe_classes(g, k);
    let output = KempeOutput {
        schema: SCHEMA,
        command: "kempe",
        graph: to_graph6(g),
        n: g.n(),
        k,
        colorings: part.colorings.len(),
        class_count: part.class_count,
        class_sizes: part.class_sizes(),
        all_equivalent: part.class_count <= 1,
    };
    let record = (
        vec!["graph", "n", "k", "colorings", "class_count", "all_equivalent"],
        vec![
            output.graph.clone(),
            output.n.to_string(),
            output.k.to_string(),
            output.colorings.to_string(),
            output.class_count.to_string(),
            output.all_equivalent.to_string(),
        ],
    );
    print_record(format, &output, record)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ContractileStep {
    pair: (usize, usize),
    graph: String,
}

#[derive(Serialize)]
struct ContractileOutput {
    schema: u32,
    command: &'static str,
    graph: String,
    n: usize,
    outcome: &'static str,
    steps: Vec<ContractileStep>,
    final_graph: Option<String>,
    final_n: Option<usize>,
    final_complete: Option<bool>,
    replay_valid: Option<bool>,
}

fn contractile_command(format: Format, g: &Graph, budget: usize) -> Result<ExitCode> {
    let outcome = even_contractile_sequence(g, budget);
    let output = match &outcome {
        ContractileOutcome::Found(seq) => ContractileOutput {
            schema: SCHEMA,
            command: "contractile",
            graph: to_graph6(g),
            n: g.n(),
            outcome: "found",
            steps: seq
                .steps
                .iter()
                .map(|(before, pair)| ContractileStep { pair: *pair, graph: to_graph6(before) })
                .collect(),
            final_graph: Some(to_graph6(&seq.final_graph)),
            final_n: Some(seq.final_graph.n()),
            final_complete: Some(seq.final_graph.is_complete()),
            replay_valid: Some(validate_contraction_sequence(g, seq).is_ok()),
        },
        ContractileOutcome::Absent => empty_contractile(g, "absent"),
        ContractileOutcome::OutOfBudget => empty_contractile(g, "out_of_budget"),
    };
    let record = (
        vec!["graph", "n", "outcome", "steps", "final_n", "replay_valid"],
        vec![
            output.graph.clone(),
            output.n.to_string(),
            output.outcome.to_string(),
            if output.outcome == "found" { output.steps.len().to_string() } else { String::new() },
            output.final_n.map(|v| v.to_string()).unwrap_or_default(),
            output.replay_valid.map(|v| v.to_string()).unwrap_or_default(),
        ],
    );
    print_record(format, &output, record)?;
    Ok(ExitCode::SUCCESS)
}

fn empty_contractile(g: &Graph, outcome: &'static str) -> ContractileOutput {
    ContractileOutput {
        schema: SCHEMA,
        command: "contractile",
        graph: to_graph6(g),
        n: g.n(),
        outcome,
        steps: Vec::new(),
        final_graph: None,
        final_n: None,
        final_complete: None,
        replay_valid: None,
    }
}

#[derive(Serialize)]
struct PrismOutput {
    triangles: ([usize; 3], [usize; 3]),
    paths: Vec<Vec<usize>>,
}

fn prism_output(w: &PrismWitness) -> PrismOutput {
    PrismOutput {
        triangles: (w.triangle_a, w.triangle_b),
        paths: w.paths.to_vec(),
    }
}

#[derive(Serialize)]
struct ClassesOutput {
    schema: u32,
    command: &'static str,
    graph: String,
    n: usize,
    perfect: bool,
    weakly_chordal: bool,
    meyniel: bool,
    dart_free: bool,
    even_prism_free: bool,
    odd_prism_free: bool,
    perfectly_orderable: bool,
    everett_reed: bool,
    perfect_order: Option<Vec<usize>>,
    odd_hole: Option<Vec<usize>>,
    hole: Option<Vec<usize>>,
    antihole: Option<Vec<usize>>,
    odd_antihole: Option<Vec<usize>>,
    dart: Option<Vec<usize>>,
    odd_prism: Option<PrismOutput>,
    even_prism: Option<PrismOutput>,
    chordless_cycle: Option<Vec<usize>>,
    witnesses_valid: bool,
}

fn classes_command(format: Format, g: &Graph) -> Result<ExitCode> {
    let r = everett_reed_class(g);
    let output = ClassesOutput {
        schema: SCHEMA,
        command: "classes",
        graph: to_graph6(g),
        n: g.n(),
        perfect: r.perfect,
        weakly_chordal: r.weakly_chordal,
        meyniel: r.meyniel,
        dart_free: r.dart_free,
        even_prism_free: r.even_prism_free,
        odd_prism_free: r.odd_prism_free,
        perfectly_orderable: r.perfectly_orderable.is_some(),
        everett_reed: r.everett_reed,
        perfect_order: r.perfectly_orderable.clone(),
        odd_hole: r.odd_hole.clone(),
        hole: r.hole.clone(),
        antihole: r.antihole.clone(),
        odd_antihole: r.odd_antihole.clone(),
        dart: r.dart.clone(),
        odd_prism: r.odd_prism.as_ref().map(prism_output),
        even_prism: r.even_prism.as_ref().map(prism_output),
        chordless_cycle: r.meyniel_witness.clone(),
        witnesses_valid: validate_class_report(g, &r).is_ok(),
    };
    let record = (
        vec![
            "graph",
            "n",
            "perfect",
            "weakly_chordal",
            "meyniel",
            "dart_free",
            "even_prism_free",
            "odd_prism_free",
            "perfectly_orderable",
            "everett_reed",
        ],
        vec![
            output.graph.clone(),
            output.n.to_string(),
            output.perfect.to_string(),
            output.weakly_chordal.to_string(),
            output.meyniel.to_string(),
            output.dart_free.to_string(),
            output.even_prism_free.to_string(),
            output.odd_prism_free.to_string(),
            output.perfectly_orderable.to_string(),
            output.everett_reed.to_string(),
        ],
    );
    print_record(format, &output, record)?;
    Ok(ExitCode::SUCCESS)
}

fn print_record<T: Serialize>(
    format: Format,
    value: &T,
    csv_parts: (Vec<&'static str>, Vec<String>),
) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(value)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(csv_parts.0)?;
            w.write_record(csv_parts.1)?;
            out.write_all(&w.into_inner()?)?;
        }
    }
    Ok(())
}
