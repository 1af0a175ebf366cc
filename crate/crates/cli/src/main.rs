//! `occulab`: independence polynomials, occupancy comparisons and
//! homomorphism counts from the command line.

mod format;
mod input;
mod verify;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use occulab::exactalg::ProfileEntry;
use occulab::graph::{generate_regular, regular_degree, write_graph6, Graph};
use occulab::homcount::{galvin_check, hom_count, HomTargetSpec};
use occulab::indpoly::enumerate_independent_sets;
use occulab::occupancy::{
    compare_normalized_partition, compare_occupancy, critical_filter, Extremum, WeightedSet,
};
use occulab::Rational;
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{collect_records, parse_graph, parse_item, Record};

#[derive(Parser)]
#[command(name = "occulab", version, about = "Exact hard-core model and homomorphism computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the independent-set counts by size of each input graph.
    Ivector {
        /// Graph names, graph6 strings, or `-` for one item per stdin line.
        inputs: Vec<String>,
    },
    /// Print the occupancy fraction (or expected size) as a rational function,
    /// or its exact values at given fugacities.
    Occupancy {
        /// Graphs or i-vectors (`iv:1,10,30,30,5@10`), or `-`.
        inputs: Vec<String>,
        /// Fugacity to evaluate at; repeatable.
        #[arg(long = "at", value_name = "LAMBDA")]
        at: Vec<String>,
        /// Report the expected set size instead of the per-vertex fraction.
        #[arg(long)]
        expected: bool,
    },
    /// Sign profile of the difference of two occupancy fractions on (0, inf).
    Compare {
        a: String,
        b: String,
        /// Compare normalized partition functions P^(1/n) instead.
        #[arg(long)]
        normalized: bool,
        /// Decimal places for the printed roots.
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// Keep the inputs that are not ratio-dominated by another input.
    Filter {
        /// Graphs or i-vectors of one common order, or `-`.
        inputs: Vec<String>,
        #[arg(long, value_enum, default_value_t = Mode::Min)]
        mode: Mode,
    },
    /// Enumerate connected d-regular graphs on n vertices up to isomorphism.
    Generate {
        n: usize,
        d: usize,
        /// Smallest allowed cycle length.
        #[arg(long, default_value_t = 3)]
        girth: usize,
    },
    /// Count homomorphisms from G to H.
    Hom { g: String, h: String },
    /// Exact check of the Galvin bound for G against a product target.
    Galvin {
        g: String,
        /// Target factor `GRAPH` or `GRAPH^EXPONENT`; repeatable.
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
        /// Degree of G; detected when omitted.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Recompute the counterexample theorems and report every claim.
    Verify {
        /// Theorem identifier, or `all`.
        #[arg(default_value = "all")]
        theorem: String,
        /// graph6 file holding the 32-vertex graph for max-occupancy-32.
        #[arg(long)]
        graph6_file: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Min,
    Max,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match cli.command {
        Command::Ivector { inputs } => cmd_ivector(&inputs),
        Command::Occupancy { inputs, at, expected } => cmd_occupancy(&inputs, &at, expected),
        Command::Compare { a, b, normalized, digits } => cmd_compare(&a, &b, normalized, digits),
        Command::Filter { inputs, mode } => cmd_filter(&inputs, mode),
        Command::Generate { n, d, girth } => cmd_generate(n, d, girth),
        Command::Hom { g, h } => cmd_hom(&g, &h),
        Command::Galvin { g, factors, degree } => cmd_galvin(&g, &factors, degree),
        Command::Verify { theorem, graph6_file } => cmd_verify(&theorem, graph6_file.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("occulab: {message}");
            ExitCode::FAILURE
        }
    }
}

fn configure_threads() {
    let Ok(value) = std::env::var("OCCULAB_THREADS") else {
        return;
    };
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("occulab: cannot size thread pool: {e}");
            }
        }
        _ => eprintln!("occulab: ignoring OCCULAB_THREADS={value:?}"),
    }
}

type CmdResult = Result<ExitCode, String>;

/// Maps every record in parallel, prints results in input order and reports
/// per-record failures on stderr.
fn per_record(
    inputs: &[String],
    f: impl Fn(&str) -> Result<String, String> + Sync,
) -> CmdResult {
    let records = collect_records(inputs).map_err(|e| format!("reading input: {e}"))?;
    let results: Vec<Result<String, String>> = records.par_iter().map(|r| f(&r.text)).collect();
    let mut out = BufWriter::new(io::stdout().lock());
    let mut failures = 0;
    for (record, result) in records.iter().zip(results) {
        match result {
            Ok(line) => writeln!(out, "{line}").map_err(|e| e.to_string())?,
            Err(e) => {
                failures += 1;
                eprintln!("{}: {e}", record.origin);
            }
        }
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_ivector(inputs: &[String]) -> CmdResult {
    per_record(inputs, |text| {
        let g = parse_graph(text)?;
        enumerate_independent_sets(&g)
            .map(|v| v.to_string())
            .map_err(|e| e.to_string())
    })
}

fn cmd_occupancy(inputs: &[String], at: &[String], expected: bool) -> CmdResult {
    let points = at
        .iter()
        .map(|s| format::parse_rational(s))
        .collect::<Result<Vec<Rational>, _>>()?;
    if let Some(bad) = points.iter().find(|x| **x <= Rational::from_integer(0.into())) {
        return Err(format!("fugacity must be positive, got {bad}"));
    }
    per_record(inputs, |text| {
        let set = parse_item(text)?.weighted()?;
        let f = if expected {
            set.expected_value()
        } else {
            set.occupancy_fraction().map_err(|e| e.to_string())?
        };
        if points.is_empty() {
            return Ok(f.to_string());
        }
        let values: Vec<String> = points
            .iter()
            .map(|x| f.evaluate(x).expect("denominator positive on (0, inf)").to_string())
            .collect();
        Ok(values.join("\t"))
    })
}

#[derive(Serialize)]
struct CompareReport<'a> {
    a: &'a str,
    b: &'a str,
    kind: &'static str,
    /// Reduced numerator, constant term first.
    polynomial: Vec<String>,
    profile: Vec<ProfileEntry>,
    roots: Vec<String>,
}

fn cmd_compare(a: &str, b: &str, normalized: bool, digits: usize) -> CmdResult {
    let read = |text: &str| -> Result<WeightedSet, String> {
        let text = if text == "-" {
            let records = collect_records(&["-".to_string()]).map_err(|e| e.to_string())?;
            records.first().ok_or("empty stdin")?.text.clone()
        } else {
            text.to_string()
        };
        parse_item(&text)?.weighted()
    };
    let (sa, sb) = (read(a)?, read(b)?);
    let profile = if normalized {
        compare_normalized_partition(&sa, &sb)
    } else {
        compare_occupancy(&sa, &sb)
    }
    .map_err(|e| e.to_string())?;
    let report = CompareReport {
        a,
        b,
        kind: if normalized { "normalized_partition" } else { "occupancy" },
        polynomial: profile.polynomial().coeffs().iter().map(|c| c.to_string()).collect(),
        profile: profile.entries(),
        roots: profile
            .roots()
            .iter()
            .map(|r| format::root_decimal(r, digits))
            .collect(),
    };
    println!("{}", serde_json::to_string(&report).map_err(|e| e.to_string())?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_filter(inputs: &[String], mode: Mode) -> CmdResult {
    let records = collect_records(inputs).map_err(|e| format!("reading input: {e}"))?;
    let parsed: Vec<Result<WeightedSet, String>> = records
        .par_iter()
        .map(|r| parse_item(&r.text)?.weighted())
        .collect();
    let mut sets = Vec::with_capacity(parsed.len());
    for (record, set) in records.iter().zip(parsed) {
        sets.push(set.map_err(|e| format!("{}: {e}", record.origin))?);
    }
    let mode = match mode {
        Mode::Min => Extremum::Min,
        Mode::Max => Extremum::Max,
    };
    let keep = critical_filter(&sets, mode).map_err(|e| e.to_string())?;
    let mut out = BufWriter::new(io::stdout().lock());
    for i in &keep {
        let Record { text, .. } = &records[*i];
        writeln!(out, "{text}\t{}", sets[*i].vector()).map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    eprintln!("{} of {} inputs survive", keep.len(), sets.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(n: usize, d: usize, girth: usize) -> CmdResult {
    let graphs = generate_regular(n, d, girth).map_err(|e| e.to_string())?;
    let mut out = BufWriter::new(io::stdout().lock());
    for g in &graphs {
        writeln!(out, "{}", write_graph6(g).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    eprintln!("{} graphs", graphs.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_hom(g: &str, h: &str) -> CmdResult {
    let (g, h) = (parse_graph(g)?, parse_graph(h)?);
    println!("{}", hom_count(&g, &h));
    Ok(ExitCode::SUCCESS)
}

fn parse_factor(text: &str) -> Result<(Graph, u32), String> {
    let (name, exp) = match text.rsplit_once('^') {
        Some((name, exp)) => (
            name,
            exp.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad exponent in {text:?}"))?,
        ),
        None => (text, 1),
    };
    Ok((parse_graph(name)?, exp))
}

#[derive(Serialize)]
struct GalvinOutput {
    order: usize,
    degree: usize,
    exponents: [u64; 3],
    hom_source: String,
    hom_bipartite: String,
    hom_clique: String,
    exceeds_bipartite: bool,
    exceeds_clique: bool,
    violated: bool,
}

fn cmd_galvin(g: &str, factors: &[String], degree: Option<usize>) -> CmdResult {
    let g = parse_graph(g)?;
    let spec = factors
        .iter()
        .map(|f| parse_factor(f))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = HomTargetSpec::new(spec).map_err(|e| e.to_string())?;
    let d = degree
        .or_else(|| regular_degree(&g))
        .ok_or("source graph is not regular")?;
    let r = galvin_check(&g, &spec, d).map_err(|e| e.to_string())?;
    let out = GalvinOutput {
        order: r.order,
        degree: r.degree,
        exponents: r.exponents,
        hom_source: r.hom_source.to_string(),
        hom_bipartite: r.hom_bipartite.to_string(),
        hom_clique: r.hom_clique.to_string(),
        exceeds_bipartite: r.exceeds_bipartite,
        exceeds_clique: r.exceeds_clique,
        violated: r.violated(),
    };
    println!("{}", serde_json::to_string(&out).map_err(|e| e.to_string())?);
    eprintln!(
        "bound {}",
        if out.violated { "violated" } else { "respected" }
    );
    Ok(ExitCode::SUCCESS)
}

fn read_graph6_file(path: &str) -> Result<Graph, String> {
    let text = if path == "-" {
        io::read_to_string(io::stdin()).map_err(|e| e.to_string())?
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    let records = input::read_lines(text.as_bytes(), path).map_err(|e| e.to_string())?;
    let first = records.first().ok_or_else(|| format!("{path}: no graph"))?;
    occulab::graph::parse_graph6(&first.text).map_err(|e| format!("{}: {e}", first.origin))
}

fn cmd_verify(theorem: &str, graph6_file: Option<&str>) -> CmdResult {
    let g32 = graph6_file.map(read_graph6_file).transpose()?;
    let ids: Vec<&str> = if theorem == "all" {
        verify::THEOREMS
            .iter()
            .copied()
            .filter(|t| *t != "max-occupancy-32" || g32.is_some())
            .collect()
    } else {
        vec![theorem]
    };
    if theorem == "all" && g32.is_none() {
        eprintln!("skipping max-occupancy-32: no --graph6-file given");
    }
    let reports = ids
        .par_iter()
        .map(|t| verify::run(t, g32.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = BufWriter::new(io::stdout().lock());
    let mut failed = 0;
    for report in &reports {
        writeln!(out, "{}", serde_json::to_string(report).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let passed = report.claims.iter().filter(|c| c.pass).count();
        eprintln!(
            "{} {} ({passed}/{} claims, {:.1} ms)",
            if report.pass { "PASS" } else { "FAIL" },
            report.theorem,
            report.claims.len(),
            report.duration_ms
        );
        for claim in report.claims.iter().filter(|c| !c.pass) {
            eprintln!(
                "    {}: claimed {}, computed {}",
                claim.name, claim.claimed, claim.computed
            );
        }
        failed += usize::from(!report.pass);
    }
    out.flush().map_err(|e| e.to_string())?;
    eprintln!("{} of {} theorems verified", reports.len() - failed, reports.len());
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
