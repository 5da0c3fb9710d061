//! `fgp`: exact evaluation of factorial Grothendieck polynomials and
//! machine verification of the identities connecting them to five- and
//! six-vertex lattice models.
//!
//! Three subcommands:
//!
//! - `eval` computes one polynomial value — or its full symbolic expansion —
//!   by the determinant, lattice-wavefunction, or permutation-sum route;
//! - `verify` checks a single identity over one parameter cell at exact
//!   sampled points and reports any witness of failure;
//! - `suite` runs the whole in-budget sweep, one report per parameter cell.
//!
//! Exit codes partition the outcomes: `0` everything verified, `1` an
//! identity failed at some sampled point, `2` the request violated a
//! precondition, `3` a computation hit a singular configuration. Errors are
//! written to stderr as `Name: message`, where `Name` is the stable error
//! name (for example `CoincidentVariables`).

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fgp_core::combinatorics::{positions_from_partition, variable_map, MapDirection, Partition};
use fgp_core::grothendieck::{
    grothendieck_det, grothendieck_symbolic, BetaSpec, FactorialAlphabet,
};
use fgp_core::lattice::wavefunction;
use fgp_core::symfunc::f_sum;
use fgp_core::verify::{
    run_suite, verify_commutation, verify_correspondence, verify_duality, verify_guo_sun,
    verify_prop51, verify_q_deformed, verify_rectangular, verify_rectangular_symbolic, BetaMode,
    Correspondence, IdentityReport, Relation,
};
use fgp_core::{Error, Result, Scalar};

use render::{params_inline, render_report, render_suite, Format};

#[derive(Parser)]
#[command(
    name = "fgp",
    version,
    about = "Factorial Grothendieck polynomials: exact evaluation and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate G_λ(z|α) exactly, or expand it as a polynomial
    Eval(EvalArgs),
    /// Check one identity over one parameter cell at sampled exact points
    Verify(VerifyArgs),
    /// Run the full verification sweep, one report per parameter cell
    Suite(SuiteArgs),
}

/// How `eval` computes the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Ratio of determinants.
    Det,
    /// Five-vertex wavefunction overlap, normalized by `∏ u_j^m`.
    Lattice,
    /// Permutation sum over the symmetric group, same normalization.
    Symfunc,
}

#[derive(Args)]
struct EvalArgs {
    /// Evaluation route
    #[arg(long, value_enum)]
    route: Route,

    /// Partition λ as a comma list, weakly decreasing (e.g. `2,1,0`)
    #[arg(long, value_delimiter = ',')]
    lambda: Vec<usize>,

    /// Number of z-variables; λ is padded with zero rows (defaults to the
    /// number of listed parts)
    #[arg(long)]
    n: Option<usize>,

    /// Chain length for the lattice/symfunc routes (defaults to the minimal
    /// chain λ₁ + n); in symbolic mode, the alphabet length
    #[arg(long)]
    m: Option<usize>,

    /// Values z1..zn as a comma list of rationals `p/q`
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    z: Vec<Scalar>,

    /// Alphabet values α1..αM as a comma list (defaults to all zeros)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Vec<Scalar>,

    /// Deformation β (defaults to 0 on the determinant route; the chain
    /// routes are pinned to β = −1; symbolic mode leaves β symbolic)
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<Scalar>,

    /// Wavefunction deformation q for the chain routes (default 0, the
    /// specialization at which they equal the polynomial)
    #[arg(long, allow_hyphen_values = true)]
    q: Option<Scalar>,

    /// Expand the polynomial over z1..zn, α1..αM instead of evaluating
    /// (determinant route only)
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to check: `guo-sun`, `rectangular`, `duality`, `q-deformed`,
    /// `commutation:<id>`, `correspondence:<id>`, or `prop51`
    identity: String,

    /// Number of symmetric variables / row parameters
    #[arg(long)]
    n: Option<usize>,

    /// Column or site-parameter count; chain length for the string
    /// identities (`correspondence:2.10`, `correspondence:2.12`) and for
    /// `commutation:<id>` checks
    #[arg(long)]
    m: Option<usize>,

    /// Frozen-row split (identity-specific)
    #[arg(long)]
    k: Option<usize>,

    /// Partition λ as a comma list (identity-specific; defaults to the zero
    /// partition or a box sweep)
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<usize>>,

    /// Pinned deformation β; the numeric identities only support `-1`
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<Scalar>,

    /// Resample β at every point instead of pinning −1 (guo-sun only)
    #[arg(long)]
    sampled_beta: bool,

    /// Exact sample points per check
    #[arg(long, default_value_t = 25)]
    points: usize,

    /// Base RNG seed (the GROTH_SEED environment variable overrides the
    /// default)
    #[arg(long, env = "GROTH_SEED", default_value_t = 0)]
    seed: u64,

    /// Compare polynomial coefficients instead of sampled values
    /// (rectangular only)
    #[arg(long)]
    symbolic: bool,

    /// Output encoding
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct SuiteArgs {
    /// Base RNG seed (the GROTH_SEED environment variable overrides the
    /// default)
    #[arg(long, env = "GROTH_SEED", default_value_t = 0)]
    seed: u64,

    /// Cap every row/column budget at this value (smoke-test mode)
    #[arg(long)]
    max_n: Option<usize>,

    /// Output encoding
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(err) => {
            eprintln!("{}: {}", err.name(), err);
            ExitCode::from(if err.is_validation() { 2 } else { 3 })
        }
    }
}

/// Write a line to stdout, tolerating a closed pipe (`fgp suite | head`):
/// the verdict has already been computed, so the exit code should survive
/// the reader going away instead of turning into a panic.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Eval(args) => {
            emit(&cmd_eval(&args)?);
            Ok(Outcome::Pass)
        }
        Command::Verify(args) => {
            let report = cmd_verify(&args)?;
            emit(&render_report(&report, args.format)?);
            Ok(if report.is_verified() {
                Outcome::Pass
            } else {
                Outcome::Fail
            })
        }
        Command::Suite(args) => {
            let report = run_suite(args.seed, args.max_n)?;
            emit(&render_suite(&report, args.format)?);
            match report.cells.iter().find(|cell| !cell.is_verified()) {
                None => Ok(Outcome::Pass),
                Some(first) => {
                    eprintln!(
                        "first failing cell: {} {}",
                        first.identity,
                        params_inline(&first.params)
                    );
                    Ok(Outcome::Fail)
                }
            }
        }
    }
}

fn invalid(message: impl Into<String>) -> Error {
    Error::InvalidInput(message.into())
}

fn require(flag: &str, value: Option<usize>) -> Result<usize> {
    value.ok_or_else(|| invalid(format!("`{flag}` is required for this identity")))
}

// ---------------------------------------------------------------- eval ----

fn cmd_eval(args: &EvalArgs) -> Result<String> {
    let listed = Partition::new(args.lambda.clone())?;
    let n = args.n.unwrap_or(listed.len());
    if n == 0 {
        return Err(invalid("need at least one variable (empty `--lambda`?)"));
    }
    let lambda = listed.padded(n)?;

    if args.symbolic {
        return eval_symbolic(args, &lambda, n);
    }
    if args.z.len() != n {
        return Err(invalid(format!(
            "the {} route needs `--z` with exactly {n} values, got {}",
            route_name(args.route),
            args.z.len()
        )));
    }
    match args.route {
        Route::Det => eval_det(args, &lambda, n),
        Route::Lattice | Route::Symfunc => eval_chain(args, &lambda, n),
    }
}

fn route_name(route: Route) -> &'static str {
    match route {
        Route::Det => "det",
        Route::Lattice => "lattice",
        Route::Symfunc => "symfunc",
    }
}

fn eval_symbolic(args: &EvalArgs, lambda: &Partition, n: usize) -> Result<String> {
    if args.route != Route::Det {
        return Err(invalid(
            "`--symbolic` expands the determinant formula; use `--route det`",
        ));
    }
    if !args.z.is_empty() || !args.alpha.is_empty() || args.q.is_some() {
        return Err(invalid(
            "`--symbolic` takes no point data (`--z`, `--alpha`, `--q`)",
        ));
    }
    let minimal = lambda.first() + n - 1;
    let alphabet_len = args.m.unwrap_or(minimal);
    let spec = match &args.beta {
        Some(beta) => BetaSpec::Fixed(beta.clone()),
        None => BetaSpec::Symbolic,
    };
    let poly = grothendieck_symbolic(lambda, n, alphabet_len, &spec)?;
    Ok(poly.to_string())
}

fn eval_det(args: &EvalArgs, lambda: &Partition, n: usize) -> Result<String> {
    if args.m.is_some() {
        return Err(invalid("`--m` has no meaning on the numeric det route"));
    }
    if args.q.as_ref().is_some_and(|q| !q.is_zero()) {
        return Err(invalid("`--q` deforms the chain routes only"));
    }
    let beta = args.beta.clone().unwrap_or_else(Scalar::zero);
    let alphabet = if args.alpha.is_empty() {
        FactorialAlphabet::zeros(lambda.first() + n - 1, beta)
    } else {
        FactorialAlphabet::new(args.alpha.clone(), beta)
    };
    Ok(grothendieck_det(lambda, &args.z, &alphabet)?.to_string())
}

/// The chain routes evaluate the `β = −1` specialization through the
/// variable maps `u = 1/(1−z)`, `w = 1−α`. At `q = 0` (the default) the
/// normalized overlap `W/∏u_j^m` is exactly `G_λ(z|α)`; a nonzero `q`
/// evaluates the deformed wavefunction under the same normalization.
fn eval_chain(args: &EvalArgs, lambda: &Partition, n: usize) -> Result<String> {
    if let Some(beta) = &args.beta {
        if *beta != -Scalar::one() {
            return Err(invalid(format!(
                "the chain routes are pinned to β = -1, got β = {beta}"
            )));
        }
    }
    let chain = args.m.unwrap_or(lambda.first() + n);
    let x = positions_from_partition(lambda, chain)?;
    let alphas = if args.alpha.is_empty() {
        vec![Scalar::zero(); chain]
    } else if args.alpha.len() == chain {
        args.alpha.clone()
    } else {
        return Err(invalid(format!(
            "the chain routes need `--alpha` with exactly {chain} values (one per site), got {}",
            args.alpha.len()
        )));
    };
    let q = args.q.clone().unwrap_or_else(Scalar::zero);

    let u: Vec<Scalar> = args
        .z
        .iter()
        .map(|z| variable_map(MapDirection::ZToU, z))
        .collect::<Result<_>>()?;
    let w: Vec<Scalar> = alphas
        .iter()
        .map(|alpha| variable_map(MapDirection::AlphaToW, alpha))
        .collect::<Result<_>>()?;
    let overlap = match args.route {
        Route::Lattice => wavefunction(&u, &w, &x, &q)?,
        Route::Symfunc => f_sum(&u, &w, &x, &q)?,
        Route::Det => unreachable!("dispatched in cmd_eval"),
    };
    let scale = u
        .iter()
        .fold(Scalar::one(), |acc, uj| &acc * &uj.powu(chain as u32));
    Ok(overlap.checked_div(&scale)?.to_string())
}

// -------------------------------------------------------------- verify ----

fn cmd_verify(args: &VerifyArgs) -> Result<IdentityReport> {
    let lambda = args
        .lambda
        .as_ref()
        .map(|parts| Partition::new(parts.clone()))
        .transpose()?;

    match args.identity.as_str() {
        "guo-sun" => {
            reject_symbolic(args)?;
            let n = require("--n", args.n)?;
            let m = require("--m", args.m)?;
            let k = require("--k", args.k)?;
            let lambda = match lambda {
                Some(lambda) => lambda,
                None => Partition::new(vec![0; k])?,
            };
            verify_guo_sun(n, m, k, &lambda, args.points, args.seed, beta_mode(args)?)
        }
        "rectangular" => {
            reject_lambda(args)?;
            pinned_beta(args)?;
            let n = require("--n", args.n)?;
            let m = require("--m", args.m)?;
            let k = require("--k", args.k)?;
            if args.symbolic {
                verify_rectangular_symbolic(n, m, k)
            } else {
                verify_rectangular(n, m, k, args.points, args.seed)
            }
        }
        "duality" => {
            reject_lambda(args)?;
            reject_symbolic(args)?;
            pinned_beta(args)?;
            let n = require("--n", args.n)?;
            let m = require("--m", args.m)?;
            let k = require("--k", args.k)?;
            verify_duality(n, m, k, args.points, args.seed)
        }
        "q-deformed" => {
            reject_symbolic(args)?;
            reject_beta(args)?;
            let n = require("--n", args.n)?;
            let m = require("--m", args.m)?;
            let k = require("--k", args.k)?;
            let base = match lambda {
                Some(lambda) => lambda.padded(k)?,
                None => Partition::new(vec![0; k])?,
            };
            let x = positions_from_partition(&base, m)?;
            verify_q_deformed(n, m, k, &x, args.points, args.seed)
        }
        "prop51" => {
            reject_lambda(args)?;
            reject_symbolic(args)?;
            reject_beta(args)?;
            let n = require("--n", args.n)?;
            let k = require("--k", args.k)?;
            verify_prop51(n, k, args.m.unwrap_or(0), args.seed)
        }
        other => {
            if let Some(id) = other.strip_prefix("commutation:") {
                reject_lambda(args)?;
                reject_symbolic(args)?;
                reject_beta(args)?;
                if args.n.is_some() || args.k.is_some() {
                    return Err(invalid(
                        "commutation checks take `--m` (chain length), `--points`, `--seed`",
                    ));
                }
                let relation = Relation::from_label(id)?;
                let mut sizes = relation.default_sizes();
                if let Some(chain) = args.m {
                    sizes.chain_len = chain;
                }
                verify_commutation(relation, sizes, args.points, args.seed)
            } else if let Some(id) = other.strip_prefix("correspondence:") {
                reject_symbolic(args)?;
                reject_beta(args)?;
                let which = Correspondence::from_label(id)?;
                let n = require("--n", args.n)?;
                let m = match args.m {
                    Some(m) => m,
                    None => default_chain(which, n)?,
                };
                let k = args.k.unwrap_or(0);
                verify_correspondence(which, n, m, k, lambda.as_ref(), args.points, args.seed)
            } else {
                Err(invalid(format!(
                    "unknown identity `{other}`; expected guo-sun, rectangular, duality, \
                     q-deformed, commutation:<id>, correspondence:<id>, or prop51"
                )))
            }
        }
    }
}

/// Chain-length identities default to a chain slightly longer than the row
/// count; the site-count identities have no sensible default and must be
/// given `--m` (except the barred-string check, which names its own sites).
fn default_chain(which: Correspondence, n: usize) -> Result<usize> {
    match which {
        Correspondence::RowString | Correspondence::RowToPolynomial => Ok(n + 3),
        Correspondence::BarredString => Ok(0),
        _ => Err(invalid(format!(
            "`--m` is required for correspondence:{}",
            which.label()
        ))),
    }
}

fn beta_mode(args: &VerifyArgs) -> Result<BetaMode> {
    if args.sampled_beta {
        if args.beta.is_some() {
            return Err(invalid(
                "`--beta` and `--sampled-beta` are mutually exclusive",
            ));
        }
        return Ok(BetaMode::Sampled);
    }
    match &args.beta {
        None => Ok(BetaMode::MinusOne),
        Some(beta) if *beta == -Scalar::one() => Ok(BetaMode::MinusOne),
        Some(beta) => Err(invalid(format!(
            "this identity is checked at β = -1 (or `--sampled-beta`), got β = {beta}"
        ))),
    }
}

fn pinned_beta(args: &VerifyArgs) -> Result<()> {
    if args.sampled_beta {
        return Err(invalid("this identity has no sampled-β form"));
    }
    match &args.beta {
        None => Ok(()),
        Some(beta) if *beta == -Scalar::one() => Ok(()),
        Some(beta) => Err(invalid(format!(
            "this identity holds at β = -1 only, got β = {beta}"
        ))),
    }
}

fn reject_beta(args: &VerifyArgs) -> Result<()> {
    if args.beta.is_some() || args.sampled_beta {
        return Err(invalid("β plays no role in this identity"));
    }
    Ok(())
}

fn reject_lambda(args: &VerifyArgs) -> Result<()> {
    if args.lambda.is_some() {
        return Err(invalid(
            "this identity determines its own shape; drop `--lambda`",
        ));
    }
    Ok(())
}

fn reject_symbolic(args: &VerifyArgs) -> Result<()> {
    if args.symbolic {
        return Err(invalid(
            "`--symbolic` is supported for `verify rectangular` only",
        ));
    }
    Ok(())
}
