//! Batch command-line front end: construction, identity verification,
//! arc scanning, and certified bounds, with machine-readable output.
//!
//! Subcommands:
//! - `expand` — print one basis element or named form,
//! - `faber` — Faber polynomial plus distinct-real-root count in (0, 16),
//! - `verify duality|hi-duality|parity|genfn|product-constant|derivative`
//!   — exact identity sweeps,
//! - `arc scan` — weighted samples over a θ window, `arc roots` — Faber
//!   roots mapped onto the arc,
//! - `certify section5` — the certified-constant table, `certify
//!   theorem1` — threshold products for one weight/pole pair.
//!
//! Exit codes: `0` — every check passed; `1` — a verification or
//! certification failed (the report is still emitted); `2` — usage or
//! parameter error (the synopsis or message goes to the error stream).
//!
//! The environment variable `WH4_BITS` overrides the default interval
//! precision (256 bits) whenever `--bits` is not given explicitly.
//! Identical invocations produce byte-identical output.

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arc::{self, default_window, ArcSample};
use crate::basis::{self, Family};
use crate::certify;
use crate::forms::{named_form, FormName};
use crate::identities::{self, VerificationReport};
use crate::series::{decimal_string, rat, rational_from_decimal, Rational};

/// Upper limit on requested series length; beyond this the exact
/// arithmetic is no longer a batch-friendly cost.
const MAX_TERMS: i64 = 16_384;
/// Accepted precision range for `--bits` / `WH4_BITS`.
const BITS_RANGE: std::ops::RangeInclusive<u32> = 32..=4096;
/// Upper limit on arc sample counts.
const MAX_SAMPLES: usize = 200_000;

#[derive(Parser)]
#[command(
    name = "wh4",
    no_binary_name = true,
    disable_help_subcommand = true,
    about = "Exact bases, identity checks, arc scans, and certified bounds \
             for weakly holomorphic modular forms of level 4"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-expansion of a basis element or a named form
    Expand(ExpandArgs),
    /// Faber polynomial of an f- or g-family element, with the number
    /// of distinct real roots in (0, 16)
    Faber(FaberArgs),
    /// Exact identity sweeps over coefficient grids
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// High-precision evaluation along the arc |z + 1/4| = 1/4
    #[command(subcommand)]
    Arc(ArcCmd),
    /// Interval-certified numeric bounds
    #[command(subcommand)]
    Certify(CertifyCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format (csv is defined for `arc scan` only)
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this path instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExpandArgs {
    /// Basis family: f, g, h, or i (requires --weight and --pole)
    #[arg(long, value_parser = parse_family, requires = "weight", requires = "pole",
          conflicts_with = "form")]
    family: Option<Family>,
    /// Named form: theta, theta4, E2, F, psi_half, psi_zero, psi_inf, g21
    #[arg(long, value_parser = parse_form)]
    form: Option<FormName>,
    /// Even weight k
    #[arg(long, allow_negative_numbers = true)]
    weight: Option<i64>,
    /// Pole order m: the expansion starts at q^{-m}
    #[arg(long, allow_negative_numbers = true)]
    pole: Option<i64>,
    /// Series length: coefficients are known below this exponent
    /// (default: pole + 64)
    #[arg(long)]
    terms: Option<i64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FaberArgs {
    /// Basis family carrying a Faber polynomial: f or g
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Even weight k
    #[arg(long, allow_negative_numbers = true)]
    weight: i64,
    /// Pole order m
    #[arg(long, allow_negative_numbers = true)]
    pole: i64,
    /// Series length used for the factor-and-peel extraction
    /// (default: pole + 64)
    #[arg(long)]
    terms: Option<i64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Coefficient duality a_k(m,n) = -b_{2-k}(n,m) over a grid
    Duality(GridArgs),
    /// The same duality for the h/i pair
    #[command(name = "hi-duality")]
    HiDuality(GridArgs),
    /// Exponent support lies in one parity class; U2 V2 acts as
    /// expected on each element
    Parity(ParityArgs),
    /// Two-variable generating identity, cross-multiplied
    Genfn(GenfnArgs),
    /// Constant term of f_{k,m} * g_{2-k,n} vanishes
    #[command(name = "product-constant")]
    ProductConstant(GridArgs),
    /// q d/dq f_{0,1} = -g_{2,1}
    Derivative(DerivativeArgs),
}

#[derive(Args)]
struct GridArgs {
    /// Even weight k
    #[arg(long, allow_negative_numbers = true)]
    weight: i64,
    /// Largest pole order on the first index
    #[arg(long, default_value_t = 10)]
    max_m: i64,
    /// Largest pole order on the second index
    #[arg(long, default_value_t = 10)]
    max_n: i64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ParityArgs {
    /// Even weight k
    #[arg(long, allow_negative_numbers = true)]
    weight: i64,
    /// Largest pole order checked
    #[arg(long, default_value_t = 10)]
    max_m: i64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct GenfnArgs {
    /// Even weight k
    #[arg(long, allow_negative_numbers = true)]
    weight: i64,
    /// Generating-variable truncation order
    #[arg(long, default_value_t = 12)]
    r_order: i64,
    /// Expansion-variable truncation order
    #[arg(long, default_value_t = 12)]
    q_order: i64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct DerivativeArgs {
    /// Number of coefficients compared
    #[arg(long, default_value_t = 60)]
    terms: i64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum ArcCmd {
    /// Sample the weighted value over a θ window and count sign changes
    Scan(ScanArgs),
    /// Map Faber-polynomial roots to arc angles and cross-check the
    /// window count by Sturm's method
    Roots(RootsArgs),
}

#[derive(Args)]
struct ScanArgs {
    /// Basis family: f, g, h, or i
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Even weight k
    #[arg(long, allow_negative_numbers = true)]
    weight: i64,
    /// Pole order m
    #[arg(long, allow_negative_numbers = true)]
    pole: i64,
    /// Left window end (decimal or a/b; default π/4 rounded inward)
    #[arg(long, value_parser = parse_rational)]
    theta_lo: Option<Rational>,
    /// Right window end (default 3π/4 rounded inward)
    #[arg(long, value_parser = parse_rational)]
    theta_hi: Option<Rational>,
    /// Number of uniformly spaced samples
    #[arg(long, default_value_t = 4000)]
    samples: usize,
    /// Interval precision in bits (default 256, or WH4_BITS)
    #[arg(long)]
    bits: Option<u32>,
    /// Shorthand for --format csv
    #[arg(long)]
    csv: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct RootsArgs {
    /// Basis family carrying a Faber polynomial: f or g
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Even weight k
    #[arg(long, allow_negative_numbers = true)]
    weight: i64,
    /// Pole order m
    #[arg(long, allow_negative_numbers = true)]
    pole: i64,
    /// Series length used for the extraction (default: pole + 64)
    #[arg(long)]
    terms: Option<i64>,
    /// Left window end for the Sturm cross-check (default π/4 inward)
    #[arg(long, value_parser = parse_rational)]
    theta_lo: Option<Rational>,
    /// Right window end (default 3π/4 inward)
    #[arg(long, value_parser = parse_rational)]
    theta_hi: Option<Rational>,
    /// Interval precision in bits (default 256, or WH4_BITS)
    #[arg(long)]
    bits: Option<u32>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum CertifyCmd {
    /// Re-derive the displayed-constant table with certified intervals
    #[command(name = "section5")]
    Section5(Section5Args),
    /// Certify the threshold product for one (ell, pole) pair
    #[command(name = "theorem1")]
    Theorem1(Theorem1Args),
}

#[derive(Args)]
struct Section5Args {
    /// Interval precision in bits (default 256, or WH4_BITS)
    #[arg(long)]
    bits: Option<u32>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct Theorem1Args {
    /// Half the weight: k = 2*ell
    #[arg(long, allow_negative_numbers = true)]
    ell: i64,
    /// Pole order m
    #[arg(long, allow_negative_numbers = true)]
    pole: i64,
    /// Interval precision in bits (default 256, or WH4_BITS)
    #[arg(long)]
    bits: Option<u32>,
    #[command(flatten)]
    out: OutputArgs,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family {s:?}; expected f, g, h, or i"))
}

fn parse_form(s: &str) -> Result<FormName, String> {
    FormName::parse(s).ok_or_else(|| {
        format!(
            "unknown form {s:?}; expected one of {}",
            FormName::ALL.map(|n| n.as_str()).join(", ")
        )
    })
}

/// Accepts `a/b` (integer numerator and denominator) or a decimal
/// literal like `0.7854` / `1e-3`.
fn parse_rational(s: &str) -> Result<Rational, String> {
    if let Some((n, d)) = s.split_once('/') {
        let num: i64 = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: i64 = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if den == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(rat(num, den))
    } else {
        rational_from_decimal(s).map_err(|e| format!("bad rational {s:?}: {e}"))
    }
}

fn resolve_bits(flag: Option<u32>) -> Result<u32, String> {
    let bits = match flag {
        Some(b) => b,
        None => match std::env::var("WH4_BITS") {
            Ok(v) => v
                .trim()
                .parse::<u32>()
                .map_err(|_| format!("WH4_BITS must be an unsigned integer, got {v:?}"))?,
            Err(std::env::VarError::NotPresent) => 256,
            Err(e) => return Err(format!("WH4_BITS: {e}")),
        },
    };
    if !BITS_RANGE.contains(&bits) {
        return Err(format!(
            "precision must lie in [{}, {}] bits, got {bits}",
            BITS_RANGE.start(),
            BITS_RANGE.end()
        ));
    }
    Ok(bits)
}

fn resolve_terms(flag: Option<i64>, pole: i64) -> Result<i64, String> {
    let terms = flag.unwrap_or(pole + 64);
    if terms <= -terms_floor(pole) || terms > MAX_TERMS {
        return Err(format!(
            "series length must lie in ({}, {MAX_TERMS}], got {terms}",
            -terms_floor(pole)
        ));
    }
    Ok(terms)
}

fn terms_floor(pole: i64) -> i64 {
    pole.max(0)
}

fn resolve_samples(samples: usize) -> Result<usize, String> {
    if !(2..=MAX_SAMPLES).contains(&samples) {
        return Err(format!("samples must lie in [2, {MAX_SAMPLES}], got {samples}"));
    }
    Ok(samples)
}

fn resolve_window(
    lo: Option<Rational>,
    hi: Option<Rational>,
) -> (Rational, Rational) {
    let (dlo, dhi) = default_window();
    (lo.unwrap_or(dlo), hi.unwrap_or(dhi))
}

/// A completed command: the report body and whether every check passed.
struct Outcome {
    body: String,
    pass: bool,
    output: Option<PathBuf>,
}

impl Outcome {
    fn new(body: String, pass: bool, out: &OutputArgs) -> Self {
        Outcome { body, pass, output: out.output.clone() }
    }
}

/// Entry point used by the binary and by tests.  `args` must not
/// include the program name.  Returns the process exit code.
pub fn run<I, S, W1, W2>(args: I, stdout: &mut W1, stderr: &mut W2) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
    W1: Write,
    W2: Write,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    2
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            if let Some(path) = &outcome.output {
                if let Err(e) = std::fs::write(path, outcome.body.as_bytes()) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                let _ = write!(stdout, "{}", outcome.body);
            }
            i32::from(!outcome.pass)
        }
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            let _ = writeln!(stderr, "run `wh4 --help` for the command synopsis");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Expand(args) => run_expand(args),
        Command::Faber(args) => run_faber(args),
        Command::Verify(cmd) => run_verify(cmd),
        Command::Arc(ArcCmd::Scan(args)) => run_scan(args),
        Command::Arc(ArcCmd::Roots(args)) => run_roots(args),
        Command::Certify(CertifyCmd::Section5(args)) => run_section5(args),
        Command::Certify(CertifyCmd::Theorem1(args)) => run_theorem1(args),
    }
}

fn reject_csv(out: &OutputArgs) -> Result<(), String> {
    if out.format == Format::Csv {
        Err("csv output is only defined for `arc scan`".to_string())
    } else {
        Ok(())
    }
}

fn json_body(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

fn run_expand(args: ExpandArgs) -> Result<Outcome, String> {
    reject_csv(&args.out)?;
    if let Some(form) = args.form {
        let terms = resolve_terms(args.terms, 0)?;
        let named = named_form(form, terms);
        let body = match args.out.format {
            Format::Text => format!("{}\n", named.series),
            Format::Json => json_body(&serde_json::json!({
                "name": named.name.as_str(),
                "weight": named.weight,
                "series": named.series.to_json(),
            })),
            Format::Csv => unreachable!("rejected above"),
        };
        return Ok(Outcome::new(body, true, &args.out));
    }
    let family = args
        .family
        .ok_or_else(|| "expand needs either --form or --family with --weight/--pole".to_string())?;
    let (weight, pole) = (args.weight.unwrap(), args.pole.unwrap());
    let terms = resolve_terms(args.terms, pole)?;
    let elem = basis::make(family, weight, pole, terms).map_err(|e| e.to_string())?;
    let body = match args.out.format {
        Format::Text => format!("{}\n", elem.series),
        Format::Json => json_body(&elem.to_json()),
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome::new(body, true, &args.out))
}

fn run_faber(args: FaberArgs) -> Result<Outcome, String> {
    reject_csv(&args.out)?;
    let terms = resolve_terms(args.terms, args.pole)?;
    let elem = basis::make_with_faber(args.family, args.weight, args.pole, terms)
        .map_err(|e| e.to_string())?;
    let p = elem.faber.as_ref().expect("make_with_faber attaches the polynomial");
    let roots = p
        .count_roots_open(&rat(0, 1), &rat(16, 1))
        .map_err(|e| e.to_string())?;
    let degree = p.degree().map_or(0, |d| d as i64);
    let body = match args.out.format {
        Format::Text => format!(
            "{}\nP(x) = {}\ndegree: {}\ndistinct real roots in (0, 16): {}\n",
            elem.label(),
            p,
            degree,
            roots
        ),
        Format::Json => {
            let mut value = elem.to_json();
            value["degree"] = serde_json::json!(degree);
            value["roots_in_0_16"] = serde_json::json!(roots);
            json_body(&value)
        }
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome::new(body, true, &args.out))
}

fn run_verify(cmd: VerifyCmd) -> Result<Outcome, String> {
    let (report, out) = match cmd {
        VerifyCmd::Duality(a) => (
            identities::check_duality(a.weight, a.max_m, a.max_n).map_err(|e| e.to_string())?,
            a.out,
        ),
        VerifyCmd::HiDuality(a) => (
            identities::check_hi_duality(a.weight, a.max_m, a.max_n).map_err(|e| e.to_string())?,
            a.out,
        ),
        VerifyCmd::Parity(a) => (
            identities::check_parity(a.weight, a.max_m).map_err(|e| e.to_string())?,
            a.out,
        ),
        VerifyCmd::Genfn(a) => (
            identities::check_genfn(a.weight, a.r_order, a.q_order).map_err(|e| e.to_string())?,
            a.out,
        ),
        VerifyCmd::ProductConstant(a) => (
            identities::check_product_constant(a.weight, a.max_m, a.max_n)
                .map_err(|e| e.to_string())?,
            a.out,
        ),
        VerifyCmd::Derivative(a) => {
            if a.terms < 1 || a.terms > MAX_TERMS {
                return Err(format!("terms must lie in [1, {MAX_TERMS}], got {}", a.terms));
            }
            (identities::check_derivative(a.terms).map_err(|e| e.to_string())?, a.out)
        }
    };
    reject_csv(&out)?;
    let pass = report.pass();
    let body = match out.format {
        Format::Text => verification_text(&report),
        Format::Json => json_body(&report.to_json()),
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome { body, pass, output: out.output })
}

fn verification_text(report: &VerificationReport) -> String {
    let mut s = format!(
        "identity: {}\nranges: {}\ncells checked: {}\ncounterexamples: {}\n",
        report.identity,
        report.ranges,
        report.cells_checked,
        report.counterexamples.len()
    );
    for c in report.counterexamples.iter().take(5) {
        s.push_str(&format!("  at {}: lhs = {}, rhs = {}\n", c.location, c.lhs, c.rhs));
    }
    if report.counterexamples.len() > 5 {
        s.push_str(&format!("  … and {} more\n", report.counterexamples.len() - 5));
    }
    s.push_str(if report.pass() { "result: PASS\n" } else { "result: FAIL\n" });
    s
}

fn sample_json(s: &ArcSample) -> serde_json::Value {
    let mid = |iv: &crate::interval::Interval| {
        decimal_string(&((iv.lo_rational() + iv.hi_rational()) / rat(2, 1)), 20)
    };
    serde_json::json!({
        "theta": decimal_string(&s.theta, 20),
        "weighted_value": mid(&s.weighted_value),
        "imag_residual": decimal_string(&s.imag_residual, 20),
        "cosine_target": mid(&s.cosine_target),
        "tail_estimate": decimal_string(&s.tail_estimate, 20),
    })
}

fn run_scan(args: ScanArgs) -> Result<Outcome, String> {
    let bits = resolve_bits(args.bits)?;
    let samples = resolve_samples(args.samples)?;
    let (theta_lo, theta_hi) = resolve_window(args.theta_lo, args.theta_hi);
    let format = if args.csv { Format::Csv } else { args.out.format };
    let (report, samples_vec) = arc::scan_arc(
        args.family,
        args.weight,
        args.pole,
        &theta_lo,
        &theta_hi,
        samples,
        bits,
    )
    .map_err(|e| e.to_string())?;
    let pass = report.satisfied;
    let body = match format {
        Format::Csv => {
            let mut s = String::from(ArcSample::csv_header());
            s.push('\n');
            for sample in &samples_vec {
                s.push_str(&sample.csv_row());
                s.push('\n');
            }
            s
        }
        Format::Json => json_body(&serde_json::json!({
            "report": report.to_json(),
            "samples": samples_vec.iter().map(sample_json).collect::<Vec<_>>(),
        })),
        Format::Text => format!(
            "{}: window [{}, {}], {} samples ({} accepted) at {} bits, {} terms\n\
             sign changes: {}\ntheorem bound: {}\nmax |weighted - cosine|: {}\nresult: {}\n",
            format!("{}_{{{},{}}}", report.family, report.weight, report.pole_order),
            decimal_string(&report.theta_lo, 10),
            decimal_string(&report.theta_hi, 10),
            report.samples,
            report.accepted,
            report.bits_used,
            report.terms_used,
            report.sign_changes,
            report.theorem_bound,
            decimal_string(&report.max_cosine_gap, 6),
            if pass { "PASS" } else { "FAIL" }
        ),
    };
    Ok(Outcome::new(body, pass, &args.out))
}

fn run_roots(args: RootsArgs) -> Result<Outcome, String> {
    reject_csv(&args.out)?;
    let bits = resolve_bits(args.bits)?;
    let terms = resolve_terms(args.terms, args.pole)?;
    let (theta_lo, theta_hi) = resolve_window(args.theta_lo, args.theta_hi);
    let elem = basis::make_with_faber(args.family, args.weight, args.pole, terms)
        .map_err(|e| e.to_string())?;
    let p = elem.faber.as_ref().expect("make_with_faber attaches the polynomial");
    let (psi_lo, psi_hi) =
        arc::psi_window_of_theta_window(&theta_lo, &theta_hi, bits).map_err(|e| e.to_string())?;
    let sturm = p.count_roots_open(&psi_lo, &psi_hi).map_err(|e| e.to_string())?;
    let mapped = arc::faber_roots_to_theta(p, bits).map_err(|e| e.to_string())?;
    let in_window: Vec<&(Rational, Rational)> = mapped
        .iter()
        .filter(|(value, _)| *value > psi_lo && *value < psi_hi)
        .collect();
    let pass = in_window.len() == sturm;
    let body = match args.out.format {
        Format::Text => {
            let mut s = format!(
                "{}: Faber degree {}\npsi window: ({}, {})\nSturm count in window: {}\n\
                 mapped roots in window: {} (of {} mapped overall)\n",
                elem.label(),
                p.degree().map_or(0, |d| d as i64),
                decimal_string(&psi_lo, 10),
                decimal_string(&psi_hi, 10),
                sturm,
                in_window.len(),
                mapped.len(),
            );
            for (value, theta) in &mapped {
                s.push_str(&format!(
                    "  psi = {:>24}  theta = {}\n",
                    decimal_string(value, 16),
                    decimal_string(theta, 16)
                ));
            }
            s.push_str(if pass {
                "result: PASS (window counts agree)\n"
            } else {
                "result: FAIL (window counts disagree)\n"
            });
            s
        }
        Format::Json => json_body(&serde_json::json!({
            "family": elem.family.as_str(),
            "weight": elem.weight,
            "pole_order": elem.pole_order,
            "degree": p.degree().map_or(0, |d| d as i64),
            "psi_window": [decimal_string(&psi_lo, 20), decimal_string(&psi_hi, 20)],
            "sturm_count": sturm,
            "mapped_in_window": in_window.len(),
            "roots": mapped.iter().map(|(value, theta)| serde_json::json!({
                "psi": decimal_string(value, 20),
                "theta": decimal_string(theta, 20),
            })).collect::<Vec<_>>(),
            "pass": pass,
        })),
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome::new(body, pass, &args.out))
}

fn certificate_text(r: &certify::CertificateReport) -> String {
    format!(
        "{:>24}: [{}, {}] {} {} -> {}\n",
        r.name,
        decimal_string(&r.certified.lo_rational(), 12),
        decimal_string(&r.certified.hi_rational(), 12),
        match r.relation {
            certify::Relation::AtMost => "<=",
            certify::Relation::AtLeast => ">=",
        },
        r.target_text,
        if r.pass { "pass" } else { "FAIL" }
    )
}

fn run_section5(args: Section5Args) -> Result<Outcome, String> {
    reject_csv(&args.out)?;
    let bits = resolve_bits(args.bits)?;
    let summary = certify::run_section5(bits).map_err(|e| e.to_string())?;
    let pass = summary.all_pass;
    let body = match args.out.format {
        Format::Text => {
            let mut s = String::new();
            for r in &summary.reports {
                s.push_str(&certificate_text(r));
            }
            for note in &summary.notes {
                s.push_str(&format!("note: {note}\n"));
            }
            s.push_str(&format!("all pass: {}\n", summary.all_pass));
            s
        }
        Format::Json => json_body(&summary.to_json()),
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome::new(body, pass, &args.out))
}

fn run_theorem1(args: Theorem1Args) -> Result<Outcome, String> {
    reject_csv(&args.out)?;
    let bits = resolve_bits(args.bits)?;
    let report = certify::certify_theorem1(args.ell, args.pole, bits).map_err(|e| e.to_string())?;
    let pass = report.all_pass;
    let body = match args.out.format {
        Format::Text => {
            let mut s = format!(
                "ell: {} (weight {}), pole order: {}, threshold: {}, applicable: {}\n",
                report.ell,
                2 * report.ell,
                report.pole_order,
                report.threshold,
                report.applicable
            );
            for r in &report.reports {
                s.push_str(&certificate_text(r));
            }
            s.push_str(&format!("all pass: {}\n", report.all_pass));
            s
        }
        Format::Json => json_body(&report.to_json()),
        Format::Csv => unreachable!("rejected above"),
    };
    Ok(Outcome::new(body, pass, &args.out))
}
