//! Command-line surface for pipe dream computations.
//!
//! Subcommands cover the polynomial inductions, enumeration of `P(w)` and
//! `RP(w)`, the mitosis operators with classification, the involution
//! `tau_i`, and the theorem verification suite.
//!
//! Exit codes: 0 on success, 1 when a verification run reports a failure,
//! 2 on usage or parse errors, 3 when a grid bound exceeds its ceiling.

use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pipedreams::perm::Permutation;
use pipedreams::polyring::{grothendieck, schubert};
use pipedreams::verify::{reports_to_json, run_suite, TheoremId, DEFAULT_CEILING};
use pipedreams::{dreams, introns, mitosis, Error, PipeDream};

#[derive(Parser)]
#[command(name = "pipedreams", version, about = "Pipe dreams, Schubert and Grothendieck polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert or Grothendieck polynomial of a permutation.
    Poly(PolyArgs),
    /// Enumerate the pipe dreams of a permutation.
    Dreams(DreamsArgs),
    /// Apply the mitosis operator to one dream.
    Mitosis(MitosisArgs),
    /// Apply the involution tau_i to one dream.
    Tau(TauArgs),
    /// Verify theorems over all of S_n against brute-force enumeration.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Schubert,
    Grothendieck,
}

#[derive(Args)]
struct PolyArgs {
    /// Which polynomial family to compute.
    kind: PolyKind,
    /// Permutation in one-line notation, e.g. "2,6,1,3,5,4".
    perm: String,
    /// Ambient rank; defaults to the permutation's window size.
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DreamFormat {
    Ascii,
    Json,
}

#[derive(Args)]
struct DreamsArgs {
    /// Permutation in one-line notation.
    perm: String,
    /// Grid bound; defaults to the permutation's window size.
    #[arg(long)]
    n: Option<u32>,
    /// List only reduced dreams.
    #[arg(long)]
    reduced: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: DreamFormat,
    /// Largest accepted grid bound.
    #[arg(long, default_value_t = dreams::ENUMERATION_CEILING)]
    ceiling: u32,
}

#[derive(Args)]
struct MitosisArgs {
    /// Permutation the dream must belong to.
    perm: String,
    /// Row index; must be a left descent of the permutation.
    #[arg(long)]
    i: u32,
    /// Emit the primed chain instead of the classical offspring set.
    #[arg(long)]
    prime: bool,
    /// Also print the transfer/internal/barren verdict.
    #[arg(long)]
    classify: bool,
    /// Dream as JSON, read from this file path or from stdin when "-".
    #[arg(long, default_value = "-")]
    dream: String,
}

#[derive(Args)]
struct TauArgs {
    /// Permutation the dream must belong to.
    perm: String,
    /// Row index of the involution.
    #[arg(long)]
    i: u32,
    /// Dream as JSON, read from this file path or from stdin when "-".
    #[arg(long, default_value = "-")]
    dream: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem identifiers (t11 t12 t21 t22 t23 t31 t41 tmin) or "all".
    #[arg(required = true)]
    theorems: Vec<String>,
    /// Rank of the symmetric group to sweep.
    #[arg(long)]
    n: u32,
    /// Largest accepted rank; raise explicitly for n = 7.
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: u32,
    /// Emit a JSON array instead of human-readable lines.
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Ceiling(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CeilingExceeded { .. } => Failure::Ceiling(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn parse_perm(text: &str) -> Result<Permutation, Failure> {
    Permutation::from_str(text).map_err(|e| Failure::Usage(e.to_string()))
}

fn ambient_rank(w: &Permutation, requested: Option<u32>) -> Result<u32, Failure> {
    let n = requested.unwrap_or_else(|| w.window_size().max(1));
    if !w.fits_in(n) {
        return Err(Failure::Usage(
            Error::OutsideSymmetricGroup {
                w: w.to_string(),
                n,
            }
            .to_string(),
        ));
    }
    Ok(n)
}

fn read_dream(source: &str) -> Result<PipeDream, Failure> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| Failure::Usage(format!("cannot read {source}: {e}")))?
    };
    PipeDream::from_json(text.trim()).map_err(|e| Failure::Usage(e.to_string()))
}

fn require_membership(d: &PipeDream, w: &Permutation) -> Result<(), Failure> {
    let actual = d.demazure();
    if actual != *w {
        return Err(Failure::Usage(
            Error::WrongPermutation {
                expected: w.to_string(),
                actual: actual.to_string(),
            }
            .to_string(),
        ));
    }
    Ok(())
}

fn cmd_poly(args: &PolyArgs) -> Result<(), Failure> {
    let w = parse_perm(&args.perm)?;
    let n = ambient_rank(&w, args.n)?;
    let poly = match args.kind {
        PolyKind::Schubert => schubert(&w, n),
        PolyKind::Grothendieck => grothendieck(&w, n),
    }?;
    println!("{poly}");
    Ok(())
}

fn cmd_dreams(args: &DreamsArgs) -> Result<(), Failure> {
    let w = parse_perm(&args.perm)?;
    let n = ambient_rank(&w, args.n)?;
    let found = dreams::enumerate_with_ceiling(&w, n, args.reduced, args.ceiling)?;
    for d in &found {
        match args.format {
            DreamFormat::Json => println!("{}", d.to_json()),
            DreamFormat::Ascii => {
                print!("{}", d.ascii_grid());
                println!();
            }
        }
    }
    println!("count: {}", found.len());
    Ok(())
}

fn cmd_mitosis(args: &MitosisArgs) -> Result<(), Failure> {
    let w = parse_perm(&args.perm)?;
    let d = read_dream(&args.dream)?;
    require_membership(&d, &w)?;
    let class = mitosis::classify(&d, args.i, &w).map_err(Failure::from)?;
    let offspring = if args.prime {
        mitosis::mitosis_prime(&d, args.i)
    } else {
        mitosis::mitosis(&d, args.i)
    };
    for child in &offspring {
        println!("{}", child.to_json());
    }
    println!("count: {}", offspring.len());
    if args.classify {
        println!("class: {class}");
    }
    Ok(())
}

fn cmd_tau(args: &TauArgs) -> Result<(), Failure> {
    let w = parse_perm(&args.perm)?;
    let d = read_dream(&args.dream)?;
    require_membership(&d, &w)?;
    println!("{}", introns::tau(&d, args.i).to_json());
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let mut theorems = Vec::new();
    for text in &args.theorems {
        if text.eq_ignore_ascii_case("all") {
            theorems.extend(TheoremId::ALL);
        } else {
            theorems.push(
                TheoremId::parse(text)
                    .ok_or_else(|| Failure::Usage(format!("unknown theorem id {text:?}")))?,
            );
        }
    }
    let started = Instant::now();
    let reports = run_suite(args.n, &theorems, args.ceiling)?;
    if args.json {
        println!("{}", reports_to_json(&reports));
    } else {
        for report in &reports {
            println!("{}", report.human_line(false));
        }
    }
    let failures = reports.iter().filter(|r| !r.pass).count();
    eprintln!(
        "{} reports, {failures} failures in {:.2}s",
        reports.len(),
        started.elapsed().as_secs_f64()
    );
    if failures > 0 {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Poly(args) => cmd_poly(args),
        Command::Dreams(args) => cmd_dreams(args),
        Command::Mitosis(args) => cmd_mitosis(args),
        Command::Tau(args) => cmd_tau(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Ceiling(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
