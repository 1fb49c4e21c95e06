//! Command-line interface: expansion printing, theorem and named-check
//! runs, class-number tables, expansion-length bounds, and threshold scans.
//!
//! Exit codes: 0 when every requested check passes (including
//! pass-with-threshold), 1 when violations survive, 2 for usage or domain
//! errors.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::hurwitz::HurwitzTable;
use crate::series::{eta_quotient_fourier, eta_quotient_series, EtaQuotientSpec};
use crate::verify::checks::{
    default_scan_set, named_checks, run_named, scan_qp_threshold, theorem_ids, theorems,
    verify_theorem, QpFamily, DEFAULT_SCAN_BOUND,
};
use crate::verify::{sturm_bound, VerificationReport};

const DEFAULT_THEOREM_BOUND: u64 = 10_000;

#[derive(Parser)]
#[command(
    name = "etaq",
    version,
    about = "Exact eta-quotient expansions and coefficient verification"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel sections (0 keeps the default pool).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Fourier expansion of an eta quotient.
    Expand {
        /// Quotient as space-separated "scale^exponent" factors, e.g. "1^4 2^-2".
        #[arg(long)]
        eta: String,

        /// Number of coefficients to print, starting at q^0.
        #[arg(long, short = 't', default_value_t = 20)]
        terms: u64,

        /// Print the product part only, ignoring the q-power prefactor.
        #[arg(long)]
        product: bool,
    },

    /// Check the sign pattern of one named theorem (see --list).
    Verify {
        /// Theorem id, matched case-insensitively.
        #[arg(long, required_unless_present = "list")]
        theorem: Option<String>,

        /// Largest coefficient index checked.
        #[arg(long, short = 'b')]
        bound: Option<u64>,

        /// List the available theorem ids.
        #[arg(long)]
        list: bool,
    },

    /// Run one named identity or structural check (see --list).
    Identity {
        /// Check name, matched case-insensitively.
        #[arg(long, required_unless_present = "list")]
        name: Option<String>,

        /// Override the check's default bound (ignored by fixed checks).
        #[arg(long, short = 'b')]
        bound: Option<u64>,

        /// List the available named checks.
        #[arg(long)]
        list: bool,
    },

    /// Print a table of Hurwitz class numbers H(0..=bound).
    Hurwitz {
        #[arg(long, short = 'b', default_value_t = 100)]
        bound: u64,
    },

    /// Print the expansion-length bound for a weight and level.
    Sturm {
        /// Weight as an integer or fraction with denominator 2, e.g. 2 or 3/2.
        #[arg(long)]
        weight: String,

        #[arg(long)]
        level: u64,
    },

    /// Scan one prime family for coefficient-sign violations.
    ScanQp {
        /// Odd prime parameter of the family.
        #[arg(long)]
        p: u64,

        /// Family selector: Q (square exponents) or P (linear exponents).
        #[arg(long, default_value = "Q")]
        which: String,

        #[arg(long, short = 'b', default_value_t = DEFAULT_SCAN_BOUND)]
        bound: u64,
    },

    /// Run every theorem, every named check, and the default scans.
    All {
        /// Bound for the theorem checks (named checks keep their defaults).
        #[arg(long, short = 'b')]
        bound: Option<u64>,
    },
}

/// Parses arguments and runs the requested command, returning the process
/// exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    configure_jobs(cli.jobs);
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_jobs(jobs: usize) {
    if jobs > 0 {
        // Errors only when a global pool already exists; keep that pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_jobs(_jobs: usize) {}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Expand {
            eta,
            terms,
            product,
        } => cmd_expand(eta, *terms, *product, cli.json),
        Command::Verify {
            theorem,
            bound,
            list,
        } => {
            if *list {
                for thm in theorems() {
                    println!("{:<10} {:<14} {}", thm.id, thm.eta, thm.about);
                }
                return Ok(0);
            }
            let id = theorem.as_deref().expect("clap enforces presence");
            let report = verify_theorem(id, bound.unwrap_or(DEFAULT_THEOREM_BOUND))?;
            emit(&report, cli.json);
            Ok(exit_code(&report))
        }
        Command::Identity { name, bound, list } => {
            if *list {
                for check in named_checks() {
                    let bound = if check.bounded {
                        format!("bound {}", check.default_bound)
                    } else {
                        "fixed".to_string()
                    };
                    println!("{:<22} {:<12} {}", check.name, bound, check.about);
                }
                return Ok(0);
            }
            let name = name.as_deref().expect("clap enforces presence");
            let report = run_named(name, *bound)?;
            emit(&report, cli.json);
            Ok(exit_code(&report))
        }
        Command::Hurwitz { bound } => cmd_hurwitz(*bound, cli.json),
        Command::Sturm { weight, level } => cmd_sturm(weight, *level, cli.json),
        Command::ScanQp { p, which, bound } => {
            let family: QpFamily = which.parse()?;
            let report = scan_qp_threshold(*p, family, *bound)?;
            emit(&report, cli.json);
            Ok(exit_code(&report))
        }
        Command::All { bound } => cmd_all(*bound, cli.json),
    }
}

fn emit(report: &VerificationReport, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{}", report.render_text());
    }
}

fn exit_code(report: &VerificationReport) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

fn cmd_expand(eta: &str, terms: u64, product: bool, json: bool) -> Result<i32> {
    let spec = EtaQuotientSpec::parse(eta)?;
    if terms == 0 {
        return Err(Error::BadArgument("need at least one term".into()));
    }
    let t = terms - 1;
    let (kind, shift, series) = if product {
        let (e24, c) = eta_quotient_series(&spec, t);
        ("product", e24, c)
    } else {
        let f = eta_quotient_fourier(&spec, t)?;
        ("fourier", spec.exponent24() / 24, f)
    };
    if json {
        let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
        let doc = serde_json::json!({
            "eta": eta,
            "kind": kind,
            "shift": shift,
            "coefficients": coeffs,
        });
        println!("{doc}");
    } else {
        if product {
            println!("# product part of {eta} (prefactor exponent {shift}/24)");
        } else {
            println!("# fourier expansion of {eta} (leading power {shift})");
        }
        for n in 0..=t {
            println!("{n}\t{}", series.coeff(n));
        }
    }
    Ok(0)
}

fn cmd_hurwitz(bound: u64, json: bool) -> Result<i32> {
    let table = HurwitzTable::up_to(bound);
    if json {
        let values: Vec<(u64, String)> = (0..=bound)
            .filter(|&d| d == 0 || d % 4 == 0 || d % 4 == 3)
            .map(|d| (d, table.value(d).to_string()))
            .collect();
        let doc = serde_json::json!({ "bound": bound, "values": values });
        println!("{doc}");
    } else {
        for d in 0..=bound {
            if d == 0 || d % 4 == 0 || d % 4 == 3 {
                println!("{d}\t{}", table.value(d));
            }
        }
    }
    Ok(0)
}

fn parse_weight_times_two(weight: &str) -> Result<u64> {
    let bad = || Error::BadArgument(format!("weight {weight:?} is not a positive multiple of 1/2"));
    let (num, den) = match weight.split_once('/') {
        Some((a, b)) => (
            a.trim().parse::<u64>().map_err(|_| bad())?,
            b.trim().parse::<u64>().map_err(|_| bad())?,
        ),
        None => (weight.trim().parse::<u64>().map_err(|_| bad())?, 1),
    };
    if num == 0 || den == 0 || (2 * num) % den != 0 {
        return Err(bad());
    }
    Ok(2 * num / den)
}

fn cmd_sturm(weight: &str, level: u64, json: bool) -> Result<i32> {
    if level == 0 {
        return Err(Error::BadArgument("level must be positive".into()));
    }
    let k2 = parse_weight_times_two(weight)?;
    let bound = sturm_bound(k2, level);
    if json {
        let doc = serde_json::json!({ "weight": weight, "level": level, "bound": bound });
        println!("{doc}");
    } else {
        println!("{bound}");
    }
    Ok(0)
}

fn cmd_all(bound: Option<u64>, json: bool) -> Result<i32> {
    let theorem_bound = bound.unwrap_or(DEFAULT_THEOREM_BOUND);
    let mut reports = Vec::new();
    for id in theorem_ids() {
        let report = verify_theorem(id, theorem_bound)?;
        if !json {
            println!("{}", report.render_text());
        }
        reports.push(report);
    }
    for check in named_checks() {
        let report = check.run(check.default_bound)?;
        if !json {
            println!("{}", report.render_text());
        }
        reports.push(report);
    }
    for (p, family) in default_scan_set() {
        let report = scan_qp_threshold(p, family, DEFAULT_SCAN_BOUND)?;
        if !json {
            println!("{}", report.render_text());
        }
        reports.push(report);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if json {
        println!(
            "{}",
            serde_json::to_string(&reports).expect("reports serialize")
        );
    } else {
        println!(
            "{} of {} checks passed",
            reports.len() - failed,
            reports.len()
        );
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
