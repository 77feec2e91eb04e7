//! Command-line front end: parses a polynomial, runs one pipeline stage and
//! reports the result as text or JSON.

pub mod parse;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use primediv::certify::{certify_exponent, predict_failures, suggest_k, FailurePrediction, SuggestOptions};
use primediv::factor::cyclotomic_poly;
use primediv::verify::{density_sigma, exact_density_for, DensityTriple, DEFAULT_BLOCK_SIZE};
use primediv::{
    classify_roots, scan_with, ClassificationReport, ConstantsReport, DensityReport, Error, IntPolynomial,
    KCertificate, RootKind, ScanMethod, ScanOptions, DEFAULT_SEED,
};

pub use parse::{parse_poly, ParseError};

#[derive(Debug, Parser)]
#[command(name = "primediv", version, about = "Primes dividing P(T) but not P(T^k)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Seed for randomized factorization and field construction.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sort the roots of P into roots of unity, other units and non-units.
    Classify { poly: String },
    /// The constants k0, A0, V and c.
    Constants { poly: String },
    /// Exponents k with certificates.
    Suggest {
        poly: String,
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = 1_000_000)]
        witness_limit: u64,
    },
    /// Certify a given k and count the primes dividing P but not P(T^k).
    Verify {
        poly: String,
        #[command(flatten)]
        scan: ScanArgs,
        #[arg(long, default_value_t = 1_000_000)]
        witness_limit: u64,
    },
    /// Empirical densities, with exact values when every root is a root of unity.
    Density {
        poly: String,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// The cyclotomic polynomial of order N.
    Cyclotomic { n: u64 },
    /// Exponents for which the condition provably fails.
    Failures { poly: String },
    /// Exact densities for a product of cyclotomic polynomials.
    Oracle {
        poly: String,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub k: u64,
    /// Largest prime scanned.
    #[arg(long, default_value_t = 10_000_000)]
    pub limit: u64,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    #[arg(long, default_value_t = DEFAULT_BLOCK_SIZE)]
    pub block_size: u64,
    /// List every prime in D.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Direct,
    RootPower,
}

impl From<Method> for ScanMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Auto => ScanMethod::Auto,
            Method::Direct => ScanMethod::Direct,
            Method::RootPower => ScanMethod::RootPower,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("no certified exponent found: {0}")]
    Uncertified(String),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for a violated hypothesis, 2 for unreadable input, 3 for a search
    /// or size limit.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Core(Error::InvalidArgument(_)) => 2,
            CliError::Core(Error::LimitExceeded(_) | Error::CertificateMissing { .. }) | CliError::Uncertified(_) => 3,
            _ => 1,
        }
    }
}

/// Everything a command reports; absent sections are omitted from JSON.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constants: Option<ConstantsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Vec<KCertificate>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<DensityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_density: Option<DensityTriple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failures: Option<FailurePrediction>,
}

fn scan_options(a: &ScanArgs) -> ScanOptions {
    ScanOptions {
        block_size: a.block_size,
        method: a.method.into(),
        record_d: a.list,
    }
}

fn parsed(text: &str) -> Result<IntPolynomial, CliError> {
    let p = parse_poly(text)?;
    primediv::check_preconditions(&p)?;
    Ok(p)
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let report = match &cli.command {
        Command::Classify { poly } => {
            let p = parsed(poly)?;
            Report {
                command: "classify",
                polynomial: Some(p.to_string()),
                classification: Some(classify_roots(&p)?),
                ..Default::default()
            }
        }
        Command::Constants { poly } => {
            let p = parsed(poly)?;
            let c = classify_roots(&p)?;
            Report {
                command: "constants",
                polynomial: Some(p.to_string()),
                constants: Some(ConstantsReport::compute(&p, &c)?),
                classification: Some(c),
                ..Default::default()
            }
        }
        Command::Suggest {
            poly,
            count,
            witness_limit,
        } => {
            let p = parsed(poly)?;
            let opts = SuggestOptions {
                count: *count,
                witness_limit: *witness_limit,
                seed: cli.seed,
                ..Default::default()
            };
            let certs = suggest_k(&p, &opts)?;
            if !certs.iter().any(KCertificate::is_certified) {
                let why = certs.first().map(|c| c.caveats.join("; ")).unwrap_or_default();
                return Err(CliError::Uncertified(why));
            }
            Report {
                command: "suggest",
                polynomial: Some(p.to_string()),
                certificates: Some(certs),
                ..Default::default()
            }
        }
        Command::Verify {
            poly,
            scan,
            witness_limit,
        } => {
            let p = parsed(poly)?;
            let opts = SuggestOptions {
                witness_limit: *witness_limit,
                seed: cli.seed,
                ..Default::default()
            };
            let cert = certify_exponent(&p, scan.k, &opts)?;
            Report {
                command: "verify",
                polynomial: Some(p.to_string()),
                certificates: Some(vec![cert]),
                density: Some(scan_with(&p, scan.k, scan.limit, scan_options(scan))?),
                failures: Some(predict_failures(&p)?),
                ..Default::default()
            }
        }
        Command::Density { poly, scan } => {
            let p = parsed(poly)?;
            let exact = match exact_density_for(&p, scan.k) {
                Ok(t) => Some(t),
                Err(Error::NotCyclotomicCase) => None,
                Err(e) => return Err(e.into()),
            };
            Report {
                command: "density",
                polynomial: Some(p.to_string()),
                density: Some(scan_with(&p, scan.k, scan.limit, scan_options(scan))?),
                exact_density: exact,
                ..Default::default()
            }
        }
        Command::Cyclotomic { n } => {
            if *n == 0 {
                return Err(Error::InvalidArgument("the order must be positive".into()).into());
            }
            if *n > 100_000 {
                return Err(Error::LimitExceeded(format!("order {n} above 100000")).into());
            }
            Report {
                command: "cyclotomic",
                polynomial: Some(cyclotomic_poly(*n).to_string()),
                ..Default::default()
            }
        }
        Command::Failures { poly } => {
            let p = parsed(poly)?;
            Report {
                command: "failures",
                polynomial: Some(p.to_string()),
                failures: Some(predict_failures(&p)?),
                ..Default::default()
            }
        }
        Command::Oracle { poly, k } => {
            let p = parsed(poly)?;
            Report {
                command: "oracle",
                polynomial: Some(p.to_string()),
                exact_density: Some(exact_density_for(&p, *k)?),
                ..Default::default()
            }
        }
    };
    Ok(report)
}

fn kind_name(kind: RootKind) -> &'static str {
    match kind {
        RootKind::RootOfUnity => "root of unity",
        RootKind::UnitNotRootOfUnity => "unit, not a root of unity",
        RootKind::NonUnit => "non-unit",
    }
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".into(), T::to_string)
}

/// Plain-text rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    if let Some(p) = &r.polynomial {
        let label = if r.command == "cyclotomic" { "Phi" } else { "P(T)" };
        writeln!(s, "{label} = {p}").unwrap();
    }
    if let Some(c) = &r.classification {
        for class in &c.classes {
            let order = class.order.map(|n| format!(", order {n}")).unwrap_or_default();
            writeln!(
                s,
                "  {}: {} root(s), {}{order}",
                class.minimal_polynomial,
                class.count,
                kind_name(class.kind)
            )
            .unwrap();
        }
        writeln!(s, "r1 = {}, r2 = {}, r3 = {}", c.r1, c.r2, c.r3).unwrap();
    }
    if let Some(c) = &r.constants {
        writeln!(
            s,
            "k0 = {}, p_min = {}, A0 = {}, V = {}, c = {}",
            c.k0,
            opt(&c.p_min),
            opt(&c.a0),
            opt(&c.v_upper_bound),
            opt(&c.c)
        )
        .unwrap();
        for note in &c.notes {
            writeln!(s, "  note: {note}").unwrap();
        }
    }
    for cert in r.certificates.iter().flatten() {
        let status = if cert.is_certified() { "certified" } else { "NOT certified" };
        write!(s, "k = {} ({:?}, {status})", cert.k, cert.route).unwrap();
        if let Some(b) = cert.base_k {
            write!(s, " via divisor {b}").unwrap();
        }
        writeln!(s).unwrap();
        let u = &cert.constants_used;
        if !u.primes.is_empty() {
            writeln!(s, "  primes {:?}", u.primes).unwrap();
        }
        if let (Some(p0), Some(a), Some(f2)) = (u.p0, u.a0_p0, &u.f2_ub) {
            writeln!(s, "  p0 = {p0}, A0(p0) = {a}, f2 <= {f2}").unwrap();
        }
        for w in &cert.power_witnesses {
            writeln!(
                s,
                "  witness: {} has a root in F_{}^{} that is not a {}-th power",
                w.class_polynomial, w.p, w.f, w.k
            )
            .unwrap();
        }
        for c in &cert.caveats {
            writeln!(s, "  caveat: {c}").unwrap();
        }
    }
    if let Some(d) = &r.density {
        let sigma = density_sigma(d.density_d, d.primes_tested);
        writeln!(
            s,
            "primes <= {}: {} tested ({:?}), P: {}, P(T^{}): {}, D: {}",
            d.n, d.primes_tested, d.method, d.pd_p, d.k, d.pd_pk, d.d_count
        )
        .unwrap();
        writeln!(
            s,
            "density(P) = {:.5}, density(P(T^k)) = {:.5}, density(D) = {:.5} +- {:.5}",
            d.density_p, d.density_pk, d.density_d, sigma
        )
        .unwrap();
        writeln!(s, "f_hat = {}, largest prime in D = {}", opt(&d.f_hat.map(|f| format!("{f:.5}"))), opt(&d.largest_d_prime)).unwrap();
        if let Some(ps) = &d.d_primes {
            writeln!(s, "D = {ps:?}").unwrap();
        }
    }
    if let Some(t) = &r.exact_density {
        writeln!(s, "exact: density(P) = {}, density(P(T^k)) = {}, density(D) = {}", t.dens_p, t.dens_pk, t.dens_d).unwrap();
    }
    if let Some(f) = &r.failures {
        if f.is_empty() {
            writeln!(s, "no provable failures known").unwrap();
        }
        for rule in &f.rules {
            writeln!(s, "fails for every k coprime to {}: {}", rule.modulus, rule.reason).unwrap();
        }
    }
    s
}
