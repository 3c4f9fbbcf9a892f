//! Command-line front end: `eval`, `verify`, `domain` and `kernel`.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on a
//! usage error.

use crate::error::{Error, Result};
use crate::hahn1d::{hahn_sq, Params1D};
use crate::hahnmd::kernel::kernel_direct;
use crate::hahnmd::{sq_nu_value, Basis, HahnMD, LatticeParams, MultiIndex, Normalization};
use crate::verify::{run_suite, Check, Status, SuiteConfig, SUITES};
use crate::lattice::{grid_d2_small, grid_d3_small};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

const LONG_ABOUT: &str = "Hahn polynomials with negative integer parameters on lattice domains, \
built and checked in exact rational arithmetic.

Parameters: --ell l1,..,l(d+1) --N N, with d inferred from the list length.
Univariate factoring uses Kronecker substitution and is limited to degree 12;
bivariate irreducibility tests are limited to total degree 8.";

#[derive(Parser, Debug)]
#[command(name = "hahnlat", version, about = "Exact multivariate Hahn polynomials", long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct ParamArgs {
    /// Comma-separated l_1,..,l_(d+1).
    #[arg(long, value_delimiter = ',')]
    ell: Option<Vec<i64>>,
    /// Total size N.
    #[arg(long = "N")]
    big_n: Option<i64>,
    /// Dimension; must equal the length of --ell minus one.
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Grid {
    #[value(name = "1d")]
    OneD,
    #[value(name = "d2-small")]
    D2Small,
    #[value(name = "d3-small")]
    D3Small,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Norm {
    Q,
    H,
    Hat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SetName {
    #[value(name = "V")]
    V,
    #[value(name = "H")]
    H,
    #[value(name = "CH")]
    Ch,
    #[value(name = "zeros")]
    Zeros,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a polynomial as PolyQ JSON, or its values on V as CSV.
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        /// Degree of the one-variable polynomial (d = 1).
        #[arg(long, conflicts_with = "nu")]
        n: Option<u32>,
        /// Multi-index, e.g. 3,3.
        #[arg(long)]
        nu: Option<String>,
        #[arg(long, value_enum, default_value = "q")]
        norm: Norm,
        /// Print `x_1,..,x_d,value` rows over V instead of the polynomial.
        #[arg(long)]
        values: bool,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        /// One of ortho, factor, genfun, moments, kernel, poisson,
        /// bispectral, cardinality, vanishing, conjecture.
        suite: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Named parameter grid: 1d (l <= 8, N <= 10), d2-small (l <= 6,
        /// N <= 8), d3-small (l <= 4, N <= 5).
        #[arg(long, value_enum)]
        grid: Option<Grid>,
        /// Degree for the conjecture suite.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        ell1: Option<i64>,
        #[arg(long)]
        ell2: Option<i64>,
        /// Report elapsed_ms as 0 so output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print a lattice set as CSV, one point per row.
    Domain {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        set: SetName,
        /// Index for `--set zeros`.
        #[arg(long)]
        nu: Option<String>,
    },
    /// Print the kernel P_n(x, y) as a CSV matrix, rows and columns in
    /// graded-lex order on V.
    Kernel {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
    },
}

/// Machine-readable outcome of `verify`.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: Value,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }
}

enum Parsed {
    None,
    OneD(Params1D),
    Lattice(LatticeParams),
}

impl ParamArgs {
    fn parse(&self) -> Result<Parsed> {
        let (ell, n) = match (&self.ell, self.big_n) {
            (None, None) => {
                if self.d.is_some() {
                    return Err(Error::InvalidParams("--d needs --ell and --N".into()));
                }
                return Ok(Parsed::None);
            }
            (Some(e), Some(n)) => (e.clone(), n),
            _ => return Err(Error::InvalidParams("--ell and --N must be given together".into())),
        };
        if let Some(d) = self.d {
            if d + 1 != ell.len() {
                return Err(Error::InvalidParams(format!("--d {d} but --ell has {} entries", ell.len())));
            }
        }
        if ell.len() == 2 {
            let p = Params1D::new(ell[0], ell[1], n)?;
            // the lattice form additionally needs l_i <= N
            return Ok(match LatticeParams::new(ell, n) {
                Ok(lp) => Parsed::Lattice(lp),
                Err(_) => Parsed::OneD(p),
            });
        }
        Ok(Parsed::Lattice(LatticeParams::new(ell, n)?))
    }

    fn lattice(&self) -> Result<LatticeParams> {
        match self.parse()? {
            Parsed::Lattice(p) => Ok(p),
            Parsed::None => Err(Error::InvalidParams("--ell and --N are required".into())),
            Parsed::OneD(p) => Err(Error::InvalidParams(format!(
                "l=({},{}), N={} violates l_i <= N",
                p.ell1, p.ell2, p.big_n
            ))),
        }
    }
}

fn params_json(p: &LatticeParams) -> Value {
    json!({ "ell": p.ell(), "N": p.big_n() })
}

fn params1_json(p: &Params1D) -> Value {
    json!({ "ell": [p.ell1, p.ell2], "N": p.big_n })
}

/// Parses `args` (including the program name), writes to `out` and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Eval { params, n, nu, norm, values } => cmd_eval(&params, n, nu.as_deref(), norm, values, out),
        Command::Verify { suite, params, grid, n, ell1, ell2, no_timing } => {
            let report = cmd_verify(&suite, &params, grid, (n, ell1, ell2), no_timing)?;
            emit(out, &serde_json::to_string_pretty(&report).expect("report serializes"))?;
            Ok(if report.failed() { 1 } else { 0 })
        }
        Command::Domain { params, set, nu } => cmd_domain(&params, set, nu.as_deref(), out),
        Command::Kernel { params, n } => cmd_kernel(&params, n, out),
    }
}

fn emit(out: &mut dyn Write, s: &str) -> Result<()> {
    writeln!(out, "{s}").map_err(|e| Error::Domain(format!("write failed: {e}")))
}

fn row(x: &MultiIndex) -> String {
    x.0.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_eval(
    params: &ParamArgs,
    n: Option<u32>,
    nu: Option<&str>,
    norm: Norm,
    values: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let parsed = params.parse()?;
    if let Some(n) = n {
        let p = match parsed {
            Parsed::OneD(p) => p,
            Parsed::Lattice(ref lp) if lp.d() == 1 => Params1D::new(lp.ell_at(1), lp.ell_at(2), lp.big_n())?,
            _ => return Err(Error::InvalidParams("--n needs d = 1 (two entries in --ell)".into())),
        };
        let poly = hahn_sq(n, &p)?;
        if values {
            let s = p.support();
            for x in s.lo..=s.hi {
                emit(out, &format!("{x},{}", poly.eval_int(&[x])?))?;
            }
        } else {
            emit(out, &serde_json::to_string(&poly).expect("poly serializes"))?;
        }
        return Ok(0);
    }
    let nu = MultiIndex::parse(nu.ok_or_else(|| Error::InvalidParams("one of --n or --nu is required".into()))?)?;
    let p = params.lattice()?;
    let norm = match norm {
        Norm::Q => Normalization::Q,
        Norm::H => Normalization::H,
        Norm::Hat => Normalization::Hat,
    };
    let h = HahnMD::new(nu, p.clone(), norm)?;
    if values {
        for x in p.enum_v() {
            emit(out, &format!("{},{}", row(&x), h.poly.eval_int(&x.0)?))?;
        }
    } else {
        emit(out, &serde_json::to_string(&h.poly).expect("poly serializes"))?;
    }
    Ok(0)
}

/// Builds the suite configuration from the flags and runs it.
fn cmd_verify(
    suite: &str,
    params: &ParamArgs,
    grid: Option<Grid>,
    conj: (Option<u32>, Option<i64>, Option<i64>),
    no_timing: bool,
) -> Result<RunReport> {
    if !SUITES.contains(&suite) {
        return Err(Error::InvalidParams(format!("unknown suite {suite:?}; one of {}", SUITES.join(", "))));
    }
    let start = Instant::now();
    let parsed = params.parse()?;
    let mut cfg;
    let pj;
    match (grid, parsed) {
        (Some(_), Parsed::OneD(_) | Parsed::Lattice(_)) => {
            return Err(Error::InvalidParams("--grid conflicts with --ell/--N".into()))
        }
        (Some(g), Parsed::None) => {
            cfg = SuiteConfig::default();
            let name = match g {
                Grid::OneD => {
                    cfg.one_d = crate::verify::grid_1d();
                    "1d"
                }
                Grid::D2Small => {
                    cfg.lattice = grid_d2_small();
                    "d2-small"
                }
                Grid::D3Small => {
                    cfg.lattice = grid_d3_small();
                    "d3-small"
                }
            };
            pj = json!({ "grid": name });
        }
        (None, Parsed::OneD(p)) => {
            cfg = SuiteConfig { one_d: vec![p], ..Default::default() };
            pj = params1_json(&p);
        }
        (None, Parsed::Lattice(lp)) => {
            cfg = SuiteConfig::default();
            if lp.d() == 1 {
                cfg.one_d.push(Params1D::new(lp.ell_at(1), lp.ell_at(2), lp.big_n())?);
            }
            pj = params_json(&lp);
            cfg.lattice.push(lp);
        }
        (None, Parsed::None) => {
            cfg = SuiteConfig::defaults(suite);
            pj = json!({ "grid": "default" });
        }
    }
    let mut pj = pj;
    if suite == "conjecture" {
        let (n, l1, l2) = conj;
        if n.is_some() || l1.is_some() || l2.is_some() {
            cfg.conjecture = crate::verify::conjecture_grid()
                .into_iter()
                .filter(|&(a, b, c)| n.is_none_or(|v| v == a) && l1.is_none_or(|v| v == b) && l2.is_none_or(|v| v == c))
                .collect();
            // explicit instances outside the default grid
            if let (Some(a), Some(b), Some(c)) = (n, l1, l2) {
                if a == 0 || b < 1 || c < 1 || a as i64 > b.min(c) {
                    return Err(Error::InvalidParams(format!("need 1 <= n <= min(l1,l2), got n={a}, l1={b}, l2={c}")));
                }
                cfg.conjecture = vec![(a, b, c)];
            }
            pj = json!({ "n": n, "ell1": l1, "ell2": l2 });
        } else {
            cfg.conjecture = crate::verify::conjecture_grid();
        }
    }
    let checks = run_suite(suite, &cfg)?;
    let elapsed_ms = if no_timing { 0 } else { start.elapsed().as_millis() as u64 };
    Ok(RunReport { command: format!("verify {suite}"), params: pj, checks, elapsed_ms })
}

/// Runs `verify` and returns the report, for use from code and tests.
pub fn verify_report(suite: &str, args: &[&str]) -> Result<RunReport> {
    let mut full = vec!["hahnlat", "verify", suite, "--no-timing"];
    full.extend_from_slice(args);
    let cli = Cli::try_parse_from(full).map_err(|e| Error::InvalidParams(e.to_string()))?;
    match cli.command {
        Command::Verify { suite, params, grid, n, ell1, ell2, no_timing } => {
            cmd_verify(&suite, &params, grid, (n, ell1, ell2), no_timing)
        }
        _ => unreachable!("parsed a verify command"),
    }
}

fn cmd_domain(params: &ParamArgs, set: SetName, nu: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let p = params.lattice()?;
    let points = match set {
        SetName::V => p.enum_v(),
        SetName::H => p.enum_h(),
        SetName::Ch => p.enum_ch(),
        SetName::Zeros => {
            let nu = MultiIndex::parse(nu.ok_or_else(|| Error::InvalidParams("--set zeros needs --nu".into()))?)?;
            p.check_index(&nu)?;
            let mut pts = Vec::new();
            for x in bounding_box(&p) {
                if sq_nu_value(&nu, &x, &p)?.is_zero() {
                    pts.push(x);
                }
            }
            pts
        }
    };
    for x in &points {
        emit(out, &row(x))?;
    }
    Ok(0)
}

/// Points with `0 ≤ x_i ≤ min(ℓ_i, N)`, in graded-lex order.
fn bounding_box(p: &LatticeParams) -> Vec<MultiIndex> {
    let d = p.d();
    let mut pts = vec![Vec::new()];
    for i in 1..=d {
        let top = p.ell_at(i).min(p.big_n());
        pts = pts
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=top).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    let mut out: Vec<MultiIndex> = pts.into_iter().map(MultiIndex).collect();
    out.sort();
    out
}

fn cmd_kernel(params: &ParamArgs, n: u32, out: &mut dyn Write) -> Result<i32> {
    let p = params.lattice()?;
    if n as i64 > p.max_degree() {
        return Err(Error::OutOfRange(format!("n={n} > max degree {}", p.max_degree())));
    }
    let b = Basis::new(&p)?;
    for i in 0..b.v.len() {
        let cells: Vec<String> = (0..b.v.len()).map(|j| kernel_direct(&b, n as i64, i, j).to_string()).collect();
        emit(out, &cells.join(","))?;
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let mut full = vec!["hahnlat"];
        full.extend_from_slice(args);
        let code = run(full, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn domain_counts() {
        let (c, s) = run_str(&["domain", "--set", "V", "--ell", "6,4,4", "--N", "7"]);
        assert_eq!(c, 0);
        assert_eq!(s.lines().count(), 23);
        let (_, s) = run_str(&["domain", "--set", "H", "--ell", "6,4,4", "--N", "7"]);
        assert_eq!(s.lines().count(), 23);
        let (_, z) = run_str(&["domain", "--set", "zeros", "--nu", "0,5", "--ell", "6,4,4", "--N", "7"]);
        let (_, v) = run_str(&["domain", "--set", "V", "--ell", "6,4,4", "--N", "7"]);
        let zs: Vec<&str> = z.lines().collect();
        assert!(v.lines().all(|l| zs.contains(&l)));
    }

    #[test]
    fn eval_constant_and_usage() {
        let (c, s) = run_str(&["eval", "--ell", "6,4,4", "--N", "7", "--nu", "0,0"]);
        assert_eq!(c, 0);
        assert_eq!(s.trim(), r#"{"nvars":2,"terms":[{"exp":[0,0],"num":"1","den":"1"}]}"#);
        assert_eq!(run_str(&["eval", "--ell", "6,4,4", "--N", "3", "--nu", "0,0"]).0, 2);
        assert_eq!(run_str(&["eval", "--d", "3", "--ell", "6,4,4", "--N", "7", "--nu", "0,0"]).0, 2);
        assert_eq!(run_str(&["verify", "nope"]).0, 2);
    }
}
