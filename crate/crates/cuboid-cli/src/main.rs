//! Command-line front end: exact evaluation, rank classification, identity
//! verification, box equivalence scans, and brick search.
//!
//! Reports go to stdout (or `--out`); diagnostics and timings go to stderr.
//! Everything is deterministic: there is no seed to pass, and `--jobs N`
//! changes only the wall time, never a byte of output.
//!
//! Exit codes, uniform across subcommands:
//! 0 success / all checks passed; 1 a verification failed; 2 usage or
//! domain error; 3 scan truncated by the resource cap.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cuboid_core::equivalence::{
    verify_equivalence_box, EquivalenceReport, SystemKind,
};
use cuboid_core::poly::{
    builtin_certificate, eval_poly, is_multisymmetric, template, CofactorCertificate, PolyName,
};
use cuboid_core::rank::classify;
use cuboid_core::search::{bricks_csv, search_bricks};
use cuboid_core::{arith, CuboidTuple};

const EXIT_OK: u8 = 0;
const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cuboid",
    version,
    about = "Exact tools for integer bricks and their symmetric factor equations"
)]
struct Cli {
    /// Worker thread count. Output is byte-identical for every value.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=1024))]
    jobs: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    /// Six coordinates: edges and face diagonals.
    Euler,
    /// Seven coordinates: edges, face diagonals, space diagonal.
    Perfect,
}

impl From<KindArg> for SystemKind {
    fn from(k: KindArg) -> SystemKind {
        match k {
            KindArg::Euler => SystemKind::Euler,
            KindArg::Perfect => SystemKind::Perfect,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct OutArg {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one polynomial at a tuple, exactly.
    Eval {
        /// Comma-separated rationals x1,x2,x3,d1,d2,d3[,L]; each `n` or `n/d`.
        #[arg(long)]
        tuple: String,
        /// One of p0, p1, p2, p3, tp1, ..., tp8.
        #[arg(long)]
        poly: String,
    },
    /// Rank profile and case witness of a tuple, as JSON.
    Classify {
        #[arg(long)]
        tuple: String,
    },
    /// Check the symmetry of all eight factor polynomials and their
    /// ideal-membership certificates. One line per check.
    CheckIdentities {
        /// Restrict to a single factor polynomial (tp1..tp8).
        #[arg(long)]
        only: Option<String>,
        /// Verify this certificate file instead of the built-in suite.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Enumerate a rational box and compare the factor system against the
    /// corner system on every tuple.
    VerifyEquivalence {
        /// Numerator magnitude bound for every coordinate.
        #[arg(long)]
        bound: u64,
        /// Largest denominator in the value grid.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        den_cap: u64,
        #[arg(long, value_enum, default_value_t = KindArg::Euler)]
        kind: KindArg,
        /// Restrict coordinates to strictly positive values.
        #[arg(long)]
        positive: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Enumerate bricks with integer face diagonals up to an edge bound.
    Search {
        #[arg(long)]
        max_edge: u64,
        /// Keep only bricks whose edges share no common factor.
        #[arg(long)]
        primitive_only: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[command(flatten)]
        out: OutArg,
    },
}

fn emit(out: &OutArg, body: &str) -> std::io::Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_tuple(lit: &str) -> Result<CuboidTuple, ExitCode> {
    lit.parse().map_err(|e| usage_error(e))
}

fn cmd_eval(tuple: &str, poly: &str) -> ExitCode {
    let t = match parse_tuple(tuple) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let name: PolyName = match poly.parse() {
        Ok(n) => n,
        Err(e) => return usage_error(e),
    };
    match eval_poly(template(name), &t) {
        Ok(v) => {
            println!("{}", arith::format_rat(&v));
            ExitCode::from(EXIT_OK)
        }
        // Only domain problems (a missing space diagonal) reach here.
        Err(e) => usage_error(e),
    }
}

fn cmd_classify(tuple: &str) -> ExitCode {
    let t = match parse_tuple(tuple) {
        Ok(t) => t,
        Err(code) => return code,
    };
    match classify(&t) {
        Ok(c) => {
            print!("{}", pretty(&c));
            ExitCode::from(EXIT_OK)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}

/// Names a certificate's target by matching it against the fixed templates;
/// arbitrary polynomials are possible in hand-written files.
fn target_name(cert: &CofactorCertificate) -> String {
    PolyName::ALL
        .iter()
        .find(|n| template(**n) == &cert.target)
        .map(|n| n.to_string())
        .unwrap_or_else(|| "custom target".into())
}

fn check_one(name: PolyName, failures: &mut u32) {
    let sym = is_multisymmetric(template(name));
    println!(
        "multisymmetric {name}: {}",
        if sym { "ok" } else { "FAILED" }
    );
    if !sym {
        *failures += 1;
    }
    let cert_ok = builtin_certificate(name)
        .and_then(|c| c.verify())
        .unwrap_or(false);
    println!(
        "certificate {name}: {}",
        if cert_ok { "ok" } else { "FAILED" }
    );
    if !cert_ok {
        *failures += 1;
    }
}

fn cmd_check_identities(only: Option<&str>, cert: Option<&PathBuf>) -> ExitCode {
    if let Some(path) = cert {
        let body = match std::fs::read_to_string(path) {
            Ok(b) => b,
            Err(e) => return usage_error(format_args!("{}: {e}", path.display())),
        };
        let parsed: CofactorCertificate = match serde_json::from_str(&body) {
            Ok(c) => c,
            Err(e) => return usage_error(format_args!("{}: {e}", path.display())),
        };
        // A well-formed file that fails to prove its identity is a
        // verification failure, not a usage problem.
        let ok = parsed.verify().unwrap_or(false);
        println!(
            "certificate {}: {}",
            target_name(&parsed),
            if ok { "ok" } else { "FAILED" }
        );
        return ExitCode::from(if ok { EXIT_OK } else { EXIT_VERIFY });
    }

    let names: Vec<PolyName> = match only {
        None => PolyName::FACTOR.to_vec(),
        Some(raw) => match raw.parse::<PolyName>() {
            Ok(n) if PolyName::FACTOR.contains(&n) => vec![n],
            Ok(n) => return usage_error(format_args!("{n} is not part of the identity suite")),
            Err(e) => return usage_error(e),
        },
    };
    let mut failures = 0;
    for name in names {
        check_one(name, &mut failures);
    }
    ExitCode::from(if failures == 0 { EXIT_OK } else { EXIT_VERIFY })
}

fn equivalence_exit(report: &EquivalenceReport) -> u8 {
    if !report.passes() {
        EXIT_VERIFY
    } else if !report.complete {
        EXIT_INCOMPLETE
    } else {
        EXIT_OK
    }
}

fn cmd_verify_equivalence(
    bound: u64,
    den_cap: u64,
    kind: SystemKind,
    positive: bool,
    out: &OutArg,
) -> ExitCode {
    let started = std::time::Instant::now();
    let report = match verify_equivalence_box(bound, den_cap, kind, positive) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_VERIFY);
        }
    };
    eprintln!(
        "scanned {} tuples in {:.2?}; {} factor / {} corner solutions, {} mismatches",
        report.scanned,
        started.elapsed(),
        report.factor_solutions.len(),
        report.cuboid_solutions.len(),
        report.mismatches.len(),
    );
    if !report.complete {
        eprintln!(
            "scan truncated at the tuple cap; raise {} to go further",
            cuboid_core::equivalence::TUPLE_CAP_ENV
        );
    }
    if let Err(e) = emit(out, &pretty(&report)) {
        return usage_error(e);
    }
    ExitCode::from(equivalence_exit(&report))
}

fn cmd_search(max_edge: u64, primitive_only: bool, format: FormatArg, out: &OutArg) -> ExitCode {
    let report = match search_bricks(max_edge, primitive_only) {
        Ok(r) => r,
        // The only search error is the fixed-width edge bound: usage.
        Err(e) => return usage_error(e),
    };
    eprintln!(
        "scanned {} diagonal pairs in {:.2?}; {} bricks",
        report.scanned_pairs,
        report.wall_time,
        report.bricks.len(),
    );
    let body = match format {
        FormatArg::Json => pretty(&report),
        FormatArg::Csv => bricks_csv(&report.bricks),
    };
    if let Err(e) = emit(out, &body) {
        return usage_error(e);
    }
    ExitCode::from(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Affects scheduling only; all scan output is merge-ordered.
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
        {
            return usage_error(e);
        }
    }
    match cli.command {
        Command::Eval { tuple, poly } => cmd_eval(&tuple, &poly),
        Command::Classify { tuple } => cmd_classify(&tuple),
        Command::CheckIdentities { only, cert } => {
            cmd_check_identities(only.as_deref(), cert.as_ref())
        }
        Command::VerifyEquivalence { bound, den_cap, kind, positive, out } => {
            cmd_verify_equivalence(bound, den_cap, kind.into(), positive, &out)
        }
        Command::Search { max_edge, primitive_only, format, out } => {
            cmd_search(max_edge, primitive_only, format, &out)
        }
    }
}
