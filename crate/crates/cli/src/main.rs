//! `superstring` command-line tool: solve instances, compare algorithms,
//! verify candidate superstrings, export bound curves and generate instances.

mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use input::{parse_input, InputError, InputFormat};
use superstring::bounds::{bound_report, curves_to_csv, emit_curves, BoundsError, GENERAL_BOUND};
use superstring::gen::{random_instance, reference_instance};
use superstring::graph::build_debruijn;
use superstring::hierarchy::{solve_gamma, solve_hierarchical, solve_tau};
use superstring::oracle::{greedy_scs, heldkarp_opt_with_cap, opt_superstring, DEFAULT_OPT_CAP};
use superstring::{is_superstring, naive_concat, Instance, SuperstringSolution};

const DEFAULT_SEED: u64 = 42;
const TEXT_ELIDE_LIMIT: usize = 10_000;

const EXIT_DOMAIN: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

enum CliError {
    Usage(String),
    Domain(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Io(m) => m,
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Io(m) => CliError::Io(m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "superstring",
    version,
    about = "Superstring construction for sets of equal-length strings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm on an instance and report the superstring.
    Solve(SolveArgs),
    /// Run all algorithms on one instance and tabulate the results.
    Compare(CompareArgs),
    /// Check whether a candidate text is a superstring of an instance.
    Verify(VerifyArgs),
    /// Export ratio-bound curves as CSV plus a per-r summary.
    Bounds(BoundsArgs),
    /// Generate a random instance file.
    Gen(GenArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Instance file.
    #[arg(long)]
    input: PathBuf,
    /// Input format.
    #[arg(long, value_parser = parse_format, default_value = "lines")]
    format: InputFormat,
}

impl InputArgs {
    fn load(&self) -> Result<Instance, CliError> {
        Ok(parse_input(&self.input, self.format)?)
    }
}

fn parse_format(s: &str) -> Result<InputFormat, String> {
    match s {
        "lines" => Ok(InputFormat::Lines),
        "fasta" => Ok(InputFormat::Fasta),
        other => Err(format!("unknown format '{other}', expected lines|fasta")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AlgoChoice {
    Naive,
    Greedy,
    Tau,
    Gamma,
    Hier(usize),
    Opt,
}

fn parse_algo(s: &str) -> Result<AlgoChoice, String> {
    match s {
        "naive" => Ok(AlgoChoice::Naive),
        "greedy" => Ok(AlgoChoice::Greedy),
        "tau" => Ok(AlgoChoice::Tau),
        "gamma" => Ok(AlgoChoice::Gamma),
        "opt" => Ok(AlgoChoice::Opt),
        other => match other.strip_prefix("hier:") {
            Some(l) => match l.parse::<usize>() {
                Ok(l) if l >= 1 => Ok(AlgoChoice::Hier(l)),
                _ => Err(format!("bad level count in '{other}'")),
            },
            None => Err(format!(
                "unknown algorithm '{other}', expected naive|greedy|tau|gamma|hier:L|opt"
            )),
        },
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Algorithm: naive|greedy|tau|gamma|hier:L|opt.
    #[arg(long, value_parser = parse_algo)]
    algo: AlgoChoice,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Cap for the exact solver (overrides SUPERSTRING_OPT_CAP).
    #[arg(long)]
    opt_cap: Option<usize>,
    /// Write the de Bruijn graph of the instance to this file (one edge per
    /// line: src dst label origin).
    #[arg(long)]
    dump_graph: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Emit a JSON report instead of a TSV table.
    #[arg(long)]
    json: bool,
    /// Extra hierarchical rows, e.g. --levels 3,4.
    #[arg(long, value_delimiter = ',')]
    levels: Vec<usize>,
    /// Cap for the exact solver (overrides SUPERSTRING_OPT_CAP).
    #[arg(long)]
    opt_cap: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// File holding the candidate superstring (one trailing newline allowed).
    #[arg(long)]
    candidate: PathBuf,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    r_min: usize,
    #[arg(long)]
    r_max: usize,
    /// Hierarchy levels to sample, e.g. --levels 2,3,4.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    levels: Vec<usize>,
    /// Sampling step for x.
    #[arg(long, default_value_t = 0.01)]
    step: f64,
    /// CSV output path; stdout when omitted (summary then goes to stderr).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Number of strings.
    #[arg(long)]
    n: usize,
    /// String length.
    #[arg(long)]
    r: usize,
    /// Alphabet size (uppercase letters).
    #[arg(long, default_value_t = 4)]
    sigma: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Sample the strings from one random reference of this length instead of
    /// drawing them uniformly; guarantees overlap structure.
    #[arg(long)]
    reference_len: Option<usize>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Gen(args) => cmd_gen(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

/// Resolves the exact-solver cap: flag wins over SUPERSTRING_OPT_CAP, which
/// wins over the default.
fn opt_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("SUPERSTRING_OPT_CAP") {
        Ok(v) => v.parse().map_err(|_| {
            CliError::Usage(format!("SUPERSTRING_OPT_CAP is not a valid size: '{v}'"))
        }),
        Err(_) => Ok(DEFAULT_OPT_CAP),
    }
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

fn write_out(path: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

#[derive(Serialize)]
struct SolveReport {
    algorithm: String,
    n: usize,
    r: usize,
    superstring: String,
    length: usize,
    compression: usize,
    opt_length: Option<usize>,
    ratio_vs_opt: Option<f64>,
}

fn run_algo(
    inst: &Instance,
    algo: AlgoChoice,
    cap: usize,
) -> Result<(SuperstringSolution, Option<usize>), CliError> {
    match algo {
        AlgoChoice::Naive => Ok((naive_concat(inst), None)),
        AlgoChoice::Greedy => Ok((greedy_scs(inst), None)),
        AlgoChoice::Tau => Ok((solve_tau(inst).map_err(domain)?, None)),
        AlgoChoice::Gamma => Ok((solve_gamma(inst).map_err(domain)?, None)),
        AlgoChoice::Hier(levels) => Ok((solve_hierarchical(inst, levels).map_err(domain)?.0, None)),
        AlgoChoice::Opt => {
            let h = heldkarp_opt_with_cap(inst, cap).map_err(domain)?;
            let sol = opt_superstring(inst, &h);
            Ok((sol, Some(h.opt_length)))
        }
    }
}

fn cmd_solve(args: SolveArgs) -> Result<(), CliError> {
    let inst = args.input.load()?;
    let cap = opt_cap(args.opt_cap)?;
    if let Some(path) = &args.dump_graph {
        let g = build_debruijn(&inst).map_err(domain)?;
        std::fs::write(path, g.export_edges())
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    let (sol, opt_length) = run_algo(&inst, args.algo, cap)?;
    let report = SolveReport {
        algorithm: sol.algorithm.to_string(),
        n: inst.n(),
        r: inst.r(),
        superstring: String::from_utf8_lossy(&sol.text).into_owned(),
        length: sol.length,
        compression: sol.compression,
        opt_length,
        ratio_vs_opt: opt_length.map(|o| sol.length as f64 / o as f64),
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        println!("algorithm:   {}", report.algorithm);
        println!("n, r:        {}, {}", report.n, report.r);
        println!("length:      {}", report.length);
        println!("compression: {}", report.compression);
        if let (Some(o), Some(ratio)) = (report.opt_length, report.ratio_vs_opt) {
            println!("opt length:  {o}");
            println!("ratio:       {ratio:.6}");
        }
        if report.superstring.len() > TEXT_ELIDE_LIMIT {
            println!(
                "superstring: [{} characters, elided; use --json for the full string]",
                report.superstring.len()
            );
        } else {
            println!("superstring: {}", report.superstring);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CompareRow {
    algorithm: String,
    length: usize,
    compression: usize,
    ratio_vs_opt: Option<f64>,
}

#[derive(Serialize)]
struct CompareReport {
    n: usize,
    r: usize,
    opt_available: bool,
    rows: Vec<CompareRow>,
}

fn cmd_compare(args: CompareArgs) -> Result<(), CliError> {
    let inst = args.input.load()?;
    let cap = opt_cap(args.opt_cap)?;

    let mut algos = vec![
        AlgoChoice::Naive,
        AlgoChoice::Greedy,
        AlgoChoice::Tau,
        AlgoChoice::Gamma,
    ];
    let mut levels = args.levels.clone();
    levels.sort_unstable();
    levels.dedup();
    algos.extend(levels.into_iter().map(AlgoChoice::Hier));

    let opt = if inst.n() <= cap {
        Some(heldkarp_opt_with_cap(&inst, cap).map_err(domain)?)
    } else {
        None
    };

    let mut rows = Vec::new();
    for algo in algos {
        let (sol, _) = run_algo(&inst, algo, cap)?;
        rows.push(CompareRow {
            algorithm: sol.algorithm.to_string(),
            length: sol.length,
            compression: sol.compression,
            ratio_vs_opt: opt
                .as_ref()
                .map(|h| sol.length as f64 / h.opt_length as f64),
        });
    }
    if let Some(h) = &opt {
        let sol = opt_superstring(&inst, h);
        rows.push(CompareRow {
            algorithm: sol.algorithm.to_string(),
            length: sol.length,
            compression: sol.compression,
            ratio_vs_opt: Some(1.0),
        });
    }

    if args.json {
        let report = CompareReport {
            n: inst.n(),
            r: inst.r(),
            opt_available: opt.is_some(),
            rows,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        println!("algorithm\tlength\tcompression\tratio_vs_opt");
        for row in rows {
            let ratio = row
                .ratio_vs_opt
                .map_or_else(|| "unavailable".into(), |v| format!("{v:.6}"));
            println!(
                "{}\t{}\t{}\t{}",
                row.algorithm, row.length, row.compression, ratio
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    valid: bool,
    n: usize,
    r: usize,
    length: usize,
    compression: Option<i64>,
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let inst = args.input.load()?;
    let mut candidate = std::fs::read(&args.candidate)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.candidate.display())))?;
    while candidate.last().is_some_and(|b| b.is_ascii_whitespace()) {
        candidate.pop();
    }
    let valid = is_superstring(&candidate, &inst);
    let report = VerifyReport {
        valid,
        n: inst.n(),
        r: inst.r(),
        length: candidate.len(),
        compression: valid.then(|| (inst.r() * inst.n()) as i64 - candidate.len() as i64),
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        println!("valid:       {}", report.valid);
        println!("length:      {}", report.length);
        match report.compression {
            Some(c) => println!("compression: {c}"),
            None => println!("compression: n/a"),
        }
    }
    if valid {
        Ok(())
    } else {
        Err(CliError::Domain(
            "candidate is not a superstring of the instance".into(),
        ))
    }
}

fn cmd_bounds(args: BoundsArgs) -> Result<(), CliError> {
    if args.r_min > args.r_max {
        return Err(CliError::Usage(format!(
            "r-min {} exceeds r-max {}",
            args.r_min, args.r_max
        )));
    }
    let curves =
        emit_curves(args.r_min, args.r_max, &args.levels, args.step).map_err(|e| match e {
            BoundsError::BadRange | BoundsError::BadStep => CliError::Usage(e.to_string()),
            other => CliError::Usage(other.to_string()),
        })?;
    write_out(args.out.as_ref(), &curves_to_csv(&curves))?;

    // Summary block; kept off stdout when the CSV itself goes there.
    let mut summary = String::new();
    for r in args.r_min..=args.r_max {
        let report = bound_report(r).map_err(|e| CliError::Usage(e.to_string()))?;
        summary.push_str(&format!(
            "r={r} alpha={:.9} beta={:.9} general={:.9}\n",
            report.alpha, report.beta, GENERAL_BOUND
        ));
    }
    if args.out.is_some() {
        print!("{summary}");
    } else {
        eprint!("{summary}");
    }
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let inst = match args.reference_len {
        Some(len) => reference_instance(args.n, args.r, args.sigma, len, args.seed),
        None => random_instance(args.n, args.r, args.sigma, args.seed),
    }
    .map_err(domain)?;
    let mut content = String::new();
    for s in inst.strings() {
        content.push_str(&String::from_utf8_lossy(s));
        content.push('\n');
    }
    write_out(args.out.as_ref(), &content)
}
