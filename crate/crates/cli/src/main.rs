//! Command-line front end: tabulate coupling coefficients, run the
//! verification grids, and inspect single representations.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::process::ExitCode;

use higgs_cgc::exactnum::format_rational;
use higgs_cgc::verify::SUITE_NAMES;
use higgs_cgc::{
    cgc_closed_form, hermiticity_check, parse_rational, run_verification, CGValue, CgcQuery,
    HalfInt, HermiticityVerdict, IrrepModel, Rational, VerifyOptions,
};

#[derive(Parser)]
#[command(name = "higgs-cgc", version, about = "Exact coupling coefficients for the cubic deformation of su(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate all coupling coefficients for a product of two spins.
    Table {
        /// First spin, as an exact value like "1/2" or "2".
        #[arg(long)]
        j1: String,
        /// Second spin.
        #[arg(long)]
        j2: String,
        /// Deformation parameter, as an exact rational like "1/10".
        #[arg(long, allow_hyphen_values = true)]
        beta2: String,
        /// Restrict to one coupled spin.
        #[arg(long)]
        j: Option<String>,
        /// Restrict to one total weight.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the exact verification suites over a grid of spins and
    /// deformation parameters.
    Verify {
        /// Largest 2j for the single spins in the grids.
        #[arg(long = "max-twoj", default_value_t = 4)]
        max_twoj: i64,
        /// Comma-separated list of exact deformation parameters.
        #[arg(long, default_value = "0,1/10", allow_hyphen_values = true)]
        beta2: String,
        /// Comma-separated subset of suites to run.
        #[arg(long)]
        suites: Option<String>,
        /// Also run the three-factor matrix-element spot grid.
        #[arg(long = "include-n3", default_value_t = false)]
        include_n3: bool,
    },
    /// Print the ladder data and hermiticity status of one representation.
    Rep {
        /// Spin, as an exact value like "1" or "3/2".
        #[arg(long)]
        j: String,
        /// Deformation parameter, as an exact rational.
        #[arg(long, allow_hyphen_values = true)]
        beta2: String,
    },
}

/// An error carrying the process exit code it should produce.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<higgs_cgc::Error> for CliError {
    fn from(e: higgs_cgc::Error) -> Self {
        CliError::invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table { j1, j2, beta2, j, m, format } => {
            cmd_table(&j1, &j2, &beta2, j.as_deref(), m.as_deref(), format)
        }
        Command::Verify { max_twoj, beta2, suites, include_n3 } => {
            cmd_verify(max_twoj, &beta2, suites.as_deref(), include_n3)
        }
        Command::Rep { j, beta2 } => cmd_rep(&j, &beta2),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

/// Parses an exact nonnegative spin ("2", "3/2").
fn parse_spin(label: &str, s: &str) -> Result<HalfInt, CliError> {
    let h = parse_half_integer(label, s)?;
    if h.is_negative() {
        return Err(CliError::invalid(format!("{label} must be nonnegative, got {s}")));
    }
    Ok(h)
}

/// Parses an exact half-integer ("−3/2", "1", "1/2").
fn parse_half_integer(label: &str, s: &str) -> Result<HalfInt, CliError> {
    let r = parse_rational(s)
        .map_err(|_| CliError::invalid(format!("{label} must be an exact integer or half-integer, got {s:?}")))?;
    let twice = &r * Rational::from_integer(2.into());
    if !twice.is_integer() {
        return Err(CliError::invalid(format!(
            "{label} must be an integer or half-integer, got {s}"
        )));
    }
    let twice: i64 = twice
        .to_integer()
        .try_into()
        .map_err(|_| CliError::invalid(format!("{label} out of range: {s}")))?;
    Ok(HalfInt::from_twice(twice))
}

fn parse_beta2(s: &str) -> Result<Rational, CliError> {
    parse_rational(s)
        .map_err(|_| CliError::invalid(format!("beta2 must be an exact rational like \"1/10\", got {s:?}")))
}

/// The hermiticity bound -1/(2j^2) for j > 0.
fn hermiticity_bound(j: HalfInt) -> Option<Rational> {
    if j.twice() <= 0 {
        return None;
    }
    let jr = j.to_rational();
    Some(-(Rational::from_integer(2.into()) * &jr * &jr).recip())
}

/// Rejects spins whose representation fails hermiticity at this beta2.
fn gate_hermiticity(label: &str, j: HalfInt, beta2: &Rational) -> Result<(), CliError> {
    if hermiticity_check(j, beta2) == HermiticityVerdict::Violated {
        let bound = hermiticity_bound(j).expect("violations need j > 0");
        return Err(CliError::invalid(format!(
            "hermiticity violated for {label} = {j}: beta2 = {} is below the bound -1/(2j^2) = {}",
            format_rational(beta2),
            format_rational(&bound),
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct OutputRecord {
    j1: String,
    j2: String,
    j: String,
    m1: String,
    m2: String,
    beta2: String,
    sign: i8,
    square: String,
    decimal: String,
}

/// Coefficient for one (m1, m2) pair, from the closed form. The coupled
/// state is defined through its overlap with a stretched reference product
/// state: m1' = j1 where that state exists (m >= j1 - j2), and m1' = -j1 for
/// the low weights reached from below (m <= j2 - j1). The two constructions
/// are exchanged by the weight-reflection symmetry of the representations,
/// so the second equals the closed form at reflected arguments, up to the
/// (-1)^(j1+j2-j) relating the two stretched phases in the linear limit.
/// Unequal-spin blocks have middle weights where neither reference exists;
/// those columns are omitted.
fn table_value(
    j1: HalfInt,
    j2: HalfInt,
    j: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
    beta2: &Rational,
) -> Result<CGValue, CliError> {
    let m = m1 + m2;
    if (m - j1).abs() <= j2 {
        let q = CgcQuery::new(j1, j2, j, m1, m2, beta2.clone())?;
        return Ok(cgc_closed_form(&q)?);
    }
    let q = CgcQuery::new(j1, j2, j, -m1, -m2, beta2.clone())?;
    let v = cgc_closed_form(&q)?;
    let sign = if q.k_depth() % 2 == 0 { v.sign() } else { -v.sign() };
    Ok(CGValue::new(sign, v.square().clone())?)
}

fn column_defined(j1: HalfInt, j2: HalfInt, m: HalfInt) -> bool {
    (m - j1).abs() <= j2 || (m + j1).abs() <= j2
}

fn cmd_table(
    j1s: &str,
    j2s: &str,
    beta2s: &str,
    js: Option<&str>,
    ms: Option<&str>,
    format: Format,
) -> Result<u8, CliError> {
    let j1 = parse_spin("j1", j1s)?;
    let j2 = parse_spin("j2", j2s)?;
    let beta2 = parse_beta2(beta2s)?;
    let j_filter = js.map(|s| parse_spin("j", s)).transpose()?;
    let m_filter = ms.map(|s| parse_half_integer("m", s)).transpose()?;

    let j_min = (j1 - j2).abs();
    let j_max = j1 + j2;
    if let Some(jf) = j_filter {
        if jf < j_min || jf > j_max || !(j_max - jf).is_integer() {
            return Err(CliError::invalid(format!(
                "j = {jf} outside the coupled range {j_min}..={j_max} of j1 = {j1}, j2 = {j2}"
            )));
        }
    }

    gate_hermiticity("j1", j1, &beta2)?;
    gate_hermiticity("j2", j2, &beta2)?;
    let mut js_out: Vec<HalfInt> = Vec::new();
    let mut tj = j_max.twice();
    while tj >= j_min.twice() {
        let j = HalfInt::from_twice(tj);
        if j_filter.map_or(true, |jf| jf == j) {
            js_out.push(j);
        }
        tj -= 2;
    }
    for &j in &js_out {
        gate_hermiticity("j", j, &beta2)?;
    }

    let beta2_str = format_rational(&beta2);
    let mut records = Vec::new();
    for &j in &js_out {
        let mut tm = j.twice();
        while tm >= -j.twice() {
            let m = HalfInt::from_twice(tm);
            tm -= 2;
            if m_filter.map_or(false, |mf| mf != m) || !column_defined(j1, j2, m) {
                continue;
            }
            let mut tm1 = j1.twice().min((m + j2).twice());
            let tm1_lo = (-j1.twice()).max((m - j2).twice());
            while tm1 >= tm1_lo {
                let m1 = HalfInt::from_twice(tm1);
                let m2 = m - m1;
                tm1 -= 2;
                let value = table_value(j1, j2, j, m1, m2, &beta2)?;
                records.push(OutputRecord {
                    j1: j1.to_string(),
                    j2: j2.to_string(),
                    j: j.to_string(),
                    m1: m1.to_string(),
                    m2: m2.to_string(),
                    beta2: beta2_str.clone(),
                    sign: value.sign(),
                    square: format_rational(value.square()),
                    decimal: value.decimal15(),
                });
            }
        }
    }

    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&records)
                .map_err(|e| CliError::invalid(e.to_string()))?;
            println!("{text}");
        }
        Format::Csv => {
            println!("j1,j2,j,m1,m2,beta2,sign,square,decimal");
            for r in &records {
                println!(
                    "{},{},{},{},{},{},{},{},{}",
                    r.j1, r.j2, r.j, r.m1, r.m2, r.beta2, r.sign, r.square, r.decimal
                );
            }
        }
    }
    Ok(0)
}

fn cmd_verify(
    max_twoj: i64,
    beta2s: &str,
    suites: Option<&str>,
    include_n3: bool,
) -> Result<u8, CliError> {
    if max_twoj < 0 {
        return Err(CliError::invalid(format!("max-twoj must be nonnegative, got {max_twoj}")));
    }
    let betas = beta2s
        .split(',')
        .map(|s| parse_beta2(s.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    if betas.is_empty() {
        return Err(CliError::invalid("beta2 list is empty"));
    }
    let suites = match suites {
        None => None,
        Some(list) => {
            let names: Vec<String> =
                list.split(',').map(|s| s.trim().to_string()).collect();
            for name in &names {
                if !SUITE_NAMES.contains(&name.as_str()) {
                    return Err(CliError::invalid(format!(
                        "unknown suite {name:?}; available: {}",
                        SUITE_NAMES.join(", ")
                    )));
                }
            }
            Some(names)
        }
    };
    let opts = VerifyOptions { max_twoj, betas, suites, include_n3 };
    let report = run_verification(&opts);
    let text =
        serde_json::to_string_pretty(&report).map_err(|e| CliError::invalid(e.to_string()))?;
    println!("{text}");
    if report.passed {
        Ok(0)
    } else {
        for suite in &report.suites {
            if let Some(f) = suite.failures.first() {
                eprintln!(
                    "suite {} failed at {}: lhs = {}, rhs = {}",
                    suite.suite, f.point, f.lhs, f.rhs
                );
                break;
            }
        }
        Ok(1)
    }
}

#[derive(Serialize)]
struct RepReport {
    j: String,
    beta2: String,
    casimir: String,
    bound: Option<String>,
    status: String,
    psi: Vec<String>,
    xi: Vec<String>,
}

fn cmd_rep(js: &str, beta2s: &str) -> Result<u8, CliError> {
    let j = parse_spin("j", js)?;
    let beta2 = parse_beta2(beta2s)?;
    let model = IrrepModel::cubic(j, beta2.clone())?;
    let status = match hermiticity_check(j, &beta2) {
        HermiticityVerdict::Ok => "ok",
        HermiticityVerdict::Boundary => "boundary",
        HermiticityVerdict::Violated => "violated",
    };
    let mut psi = Vec::new();
    let mut xi = Vec::new();
    for n in 1..=j.twice() {
        psi.push(format_rational(&model.psi(n)?));
        xi.push(format_rational(&model.xi(n)?));
    }
    let report = RepReport {
        j: j.to_string(),
        beta2: format_rational(&beta2),
        casimir: format_rational(&model.casimir_eigenvalue()),
        bound: hermiticity_bound(j).map(|b| format_rational(&b)),
        status: status.to_string(),
        psi,
        xi,
    };
    let text =
        serde_json::to_string_pretty(&report).map_err(|e| CliError::invalid(e.to_string()))?;
    println!("{text}");
    Ok(0)
}
