//! Command-line front end: `classify`, `scan`, `polygon` and `factor`.
//!
//! Exit codes for `classify`: 0 maximal and monogenic, 10 not monogenic,
//! 20 undecided, 2 input error. The other commands exit 0 on success, 2 on
//! input errors and 1 on I/O failures.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::json;

use crate::arith::{is_probable_prime, FactoredInteger};
use crate::error::{Error, Result};
use crate::ffpoly::{factor, FqField};
use crate::monogen::{classify, FieldSpec, Variant, Verdict, VerdictKind};
use crate::ore::analyze_prime;
use crate::polygon::{build_polygon, phi_index, render_ascii, render_svg, residual_polynomial_in};
use crate::zxpoly::{parse_poly, phi_expand, ZxPoly};

pub const EXIT_MAXIMAL: i32 = 0;
pub const EXIT_NON_MONOGENIC: i32 = 10;
pub const EXIT_UNDECIDED: i32 = 20;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 1;

/// Largest accepted scan range.
pub const MAX_SCAN_RANGE: u64 = 1_000_000;
/// Largest exponent accepted for u, v, t on the command line.
pub const MAX_EXPONENT: u32 = 6;
/// Largest prime accepted by `factor`.
pub const MAX_FACTOR_PRIME: u64 = 10_000;

pub const CSV_HEADER: &str = "u,v,t,m,n,maximal,verdict,rules,witness_p,witness_f,Pf_bound,Nf";

#[derive(Debug, Parser)]
#[command(name = "montes-lite", version, about = "Newton polygon analysis of pure number fields x^(2^u 3^v 5^t) - m")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Proof,
    Theorem,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Proof => Variant::Proof,
            VariantArg::Theorem => Variant::Theorem,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the field defined by x^(2^u 3^v 5^t) - m.
    Classify {
        #[arg(long)]
        u: u32,
        #[arg(long)]
        v: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, value_enum, default_value = "proof")]
        variant: VariantArg,
        #[arg(long)]
        json: bool,
        /// Comma-separated prime factors of |m|, bypassing factorization.
        #[arg(long, value_delimiter = ',')]
        m_factored: Option<Vec<String>>,
    },
    /// Classify every square-free m in a range.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        m_from: i64,
        #[arg(long, allow_hyphen_values = true)]
        m_to: i64,
        #[arg(long)]
        u: u32,
        #[arg(long)]
        v: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Worker threads (default: one per core).
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value = "proof")]
        variant: VariantArg,
    },
    /// Show the phi-Newton polygon of a polynomial at a prime.
    Polygon {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        p: u64,
        /// Monic phi; defaults to every irreducible factor of the reduction.
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print the full Ore report at p as JSON instead.
        #[arg(long)]
        json: bool,
    },
    /// Factor a polynomial modulo a prime.
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        p: u64,
    },
}

/// Parses arguments and runs the command, writing to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Classify { u, v, t, m, variant, json, m_factored } => {
            cmd_classify(u, v, t, &m, variant.into(), json, m_factored.as_deref(), out)
        }
        Command::Scan { m_from, m_to, u, v, t, out: path, format, workers, variant } => {
            let params = ScanParams { m_from, m_to, u, v, t, workers, variant: variant.into() };
            cmd_scan(&params, path.as_deref(), format, out, err)
        }
        Command::Polygon { poly, p, phi, svg, json } => {
            cmd_polygon(&poly, p, phi.as_deref(), svg.as_deref(), json, out)
        }
        Command::Factor { poly, p } => cmd_factor(&poly, p, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::FactoringBudgetExceeded(_) = e {
                let _ = writeln!(err, "hint: pass the prime factors of |m| with --m-factored p1,p2,...");
            }
            match e {
                Error::Io(_) => EXIT_IO,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn check_exponents(u: u32, v: u32, t: u32) -> Result<()> {
    for (name, x) in [("u", u), ("v", v), ("t", t)] {
        if !(1..=MAX_EXPONENT).contains(&x) {
            return Err(Error::Input(format!("--{name} must lie in 1..={MAX_EXPONENT} (got {x})")));
        }
    }
    Ok(())
}

fn parse_m(text: &str) -> Result<BigInt> {
    let m: BigInt = text
        .trim()
        .parse()
        .map_err(|_| Error::Input(format!("--m expects an integer (got '{text}')")))?;
    if m.abs() > BigInt::from(1u64 << 63) {
        return Err(Error::Input("|m| must not exceed 2^63".into()));
    }
    Ok(m)
}

fn build_spec(u: u32, v: u32, t: u32, m: &BigInt, factored: Option<&[String]>) -> Result<FieldSpec> {
    check_exponents(u, v, t)?;
    let spec = match factored {
        None => FieldSpec::new(u, v, t, m.clone()),
        Some(list) => {
            let primes = list
                .iter()
                .map(|s| s.trim().parse::<BigUint>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Input("--m-factored expects comma-separated primes".into()))?;
            let sign = if m.is_negative() { -1 } else { 1 };
            let fact = FactoredInteger::from_primes(sign, &primes)?;
            if &fact.value() != m {
                return Err(Error::Input(format!("the listed primes multiply to {}, not {m}", fact.value())));
            }
            FieldSpec::with_factorization(u, v, t, fact)
        }
    };
    spec.map_err(|e| match e {
        Error::Domain(msg) => Error::Input(msg),
        other => other,
    })
}

fn verdict_code(kind: VerdictKind) -> i32 {
    match kind {
        VerdictKind::MaximalMonogenic => EXIT_MAXIMAL,
        VerdictKind::NonMonogenic => EXIT_NON_MONOGENIC,
        VerdictKind::NotMaximalUndecided => EXIT_UNDECIDED,
    }
}

/// Human-readable verdict.
pub fn describe_verdict(spec: &FieldSpec, verdict: &Verdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "field: {spec}");
    if verdict.maximal {
        let _ = writeln!(s, "Z[α] is the ring of integers");
    } else {
        let _ = writeln!(s, "Z[α] is not the ring of integers");
    }
    let _ = writeln!(s, "verdict: {} (variant {})", verdict.kind, verdict.variant);
    for w in &verdict.witnesses {
        let _ = write!(
            s,
            "  {}: p = {}, f = {}, P_f >= {} vs N_f = {} [{}]",
            w.rule, w.p, w.f, w.pf_bound, w.nf, w.source
        );
        if w.refuted {
            let _ = write!(s, " (engine report at {} is regular with no witness)", w.p);
        }
        s.push('\n');
    }
    if !verdict.maximal && !verdict.engine_ran {
        let _ = writeln!(s, "  polygon engine skipped: degree above the engine limit");
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn cmd_classify(
    u: u32,
    v: u32,
    t: u32,
    m: &str,
    variant: Variant,
    json: bool,
    factored: Option<&[String]>,
    out: &mut dyn Write,
) -> Result<i32> {
    let m = parse_m(m)?;
    let spec = build_spec(u, v, t, &m, factored)?;
    let verdict = classify(&spec, variant)?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&verdict.to_json()).unwrap())?;
    } else {
        out.write_all(describe_verdict(&spec, &verdict).as_bytes())?;
    }
    Ok(verdict_code(verdict.kind))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanParams {
    pub m_from: i64,
    pub m_to: i64,
    pub u: u32,
    pub v: u32,
    pub t: u32,
    pub workers: Option<usize>,
    pub variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub u: u32,
    pub v: u32,
    pub t: u32,
    pub m: i64,
    pub n: u64,
    pub maximal: bool,
    pub verdict: VerdictKind,
    pub rules: Vec<String>,
    /// `(p, f, P_f bound, N_f)`.
    pub witness: Option<(u64, u64, u64, u64)>,
}

impl ScanRow {
    fn from_verdict(spec: &FieldSpec, m: i64, v: &Verdict) -> Self {
        ScanRow {
            u: spec.u(),
            v: spec.v(),
            t: spec.t(),
            m,
            n: spec.n(),
            maximal: v.maximal,
            verdict: v.kind,
            rules: v.witnesses.iter().map(|w| w.rule.to_string()).collect(),
            witness: v.primary_witness().map(|w| (w.p, w.f, w.pf_bound, w.nf)),
        }
    }

    pub fn to_csv(&self) -> String {
        let (wp, wf, wb, wn) = match self.witness {
            Some((p, f, b, n)) => (p.to_string(), f.to_string(), b.to_string(), n.to_string()),
            None => Default::default(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.u,
            self.v,
            self.t,
            self.m,
            self.n,
            self.maximal,
            self.verdict,
            self.rules.join(";"),
            wp,
            wf,
            wb,
            wn
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let witness = self.witness.map(|(p, f, b, n)| json!({ "p": p, "f": f, "P_f_bound": b, "N_f": n }));
        json!({
            "u": self.u, "v": self.v, "t": self.t, "m": self.m, "n": self.n,
            "maximal": self.maximal,
            "verdict": self.verdict,
            "rules": self.rules,
            "witness": witness,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanOutcome {
    pub rows: Vec<ScanRow>,
    /// Values of m that are 0, +-1 or not square-free.
    pub skipped: u64,
}

impl ScanOutcome {
    pub fn csv(&self) -> String {
        let mut s = String::with_capacity(64 * (self.rows.len() + 1));
        s.push_str(CSV_HEADER);
        s.push('\n');
        for row in &self.rows {
            s.push_str(&row.to_csv());
            s.push('\n');
        }
        s
    }

    pub fn json(&self) -> String {
        let rows: Vec<_> = self.rows.iter().map(ScanRow::to_json).collect();
        let mut s = serde_json::to_string_pretty(&rows).unwrap();
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let count = |k: VerdictKind| self.rows.iter().filter(|r| r.verdict == k).count();
        format!(
            "{} fields: {} MaximalMonogenic, {} NonMonogenic, {} NotMaximalUndecided; {} skipped",
            self.rows.len(),
            count(VerdictKind::MaximalMonogenic),
            count(VerdictKind::NonMonogenic),
            count(VerdictKind::NotMaximalUndecided),
            self.skipped
        )
    }
}

/// Classifies every admissible m in `m_from..=m_to` on a worker pool. The
/// result does not depend on the number of workers.
pub fn scan(params: &ScanParams) -> Result<ScanOutcome> {
    check_exponents(params.u, params.v, params.t)?;
    if params.m_from > params.m_to {
        return Ok(ScanOutcome::default());
    }
    let size = (params.m_to as i128 - params.m_from as i128 + 1) as u128;
    if size > MAX_SCAN_RANGE as u128 {
        return Err(Error::Input(format!("scan range has {size} values; the limit is {MAX_SCAN_RANGE}")));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = params.workers {
        if w == 0 {
            return Err(Error::Input("--workers must be positive".into()));
        }
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| Error::Input(e.to_string()))?;
    let results: Vec<Result<Option<ScanRow>>> = pool.install(|| {
        (params.m_from..=params.m_to)
            .into_par_iter()
            .map(|m| {
                let spec = match FieldSpec::new(params.u, params.v, params.t, m) {
                    Ok(spec) => spec,
                    Err(Error::Domain(_)) | Err(Error::FactoringBudgetExceeded(_)) => return Ok(None),
                    Err(e) => return Err(e),
                };
                let verdict = classify(&spec, params.variant)?;
                Ok(Some(ScanRow::from_verdict(&spec, m, &verdict)))
            })
            .collect()
    });
    let mut outcome = ScanOutcome::default();
    for r in results {
        match r? {
            Some(row) => outcome.rows.push(row),
            None => outcome.skipped += 1,
        }
    }
    outcome.rows.sort_by_key(|r| (r.u, r.v, r.t, r.m));
    Ok(outcome)
}

fn cmd_scan(
    params: &ScanParams,
    path: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let outcome = scan(params)?;
    let body = match format {
        Format::Csv => outcome.csv(),
        Format::Json => outcome.json(),
    };
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        None => out.write_all(body.as_bytes())?,
    }
    writeln!(err, "{}", outcome.summary())?;
    Ok(0)
}

fn parse_prime(p: u64) -> Result<u64> {
    if !is_probable_prime(&BigUint::from(p)) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    if p > u32::MAX as u64 {
        return Err(Error::Input(format!("p = {p} is too large")));
    }
    Ok(p)
}

fn parse_monic(text: &str, what: &str) -> Result<ZxPoly> {
    let f = parse_poly(text)?;
    match f.degree() {
        None | Some(0) => Err(Error::Input(format!("{what} must have positive degree"))),
        _ if !f.is_monic() => Err(Error::Input(format!("{what} = {f} must be monic"))),
        _ => Ok(f),
    }
}

fn svg_path(base: &Path, k: usize, total: usize) -> PathBuf {
    if total == 1 {
        return base.to_path_buf();
    }
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("polygon");
    let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("svg");
    base.with_file_name(format!("{stem}-{}.{ext}", k + 1))
}

/// Text description of the `phi`-polygon of `f` at `p`.
pub fn describe_polygon(f: &ZxPoly, phi: &ZxPoly, p: u64) -> Result<(String, String)> {
    let exp = phi_expand(f, phi)?;
    let poly = build_polygon(&exp, p)?;
    let principal = poly.principal_part();
    let deg_phi = phi.degree().unwrap() as u64;
    let field = FqField::new_unchecked(phi.reduce_mod_p(p)?);
    let mut s = String::new();
    let _ = writeln!(s, "phi = {phi}");
    let vs: Vec<String> = principal.vertices().iter().map(|(i, y)| format!("({i},{y})")).collect();
    let _ = writeln!(s, "vertices: {}", vs.join(" "));
    for (j, side) in principal.sides().iter().enumerate() {
        let residual = residual_polynomial_in(side, &exp, &field)?;
        let factors = factor(&residual.poly)?;
        let fs: Vec<String> = factors.iter().map(|(g, a)| format!("({g})^{a}")).collect();
        let _ = writeln!(
            s,
            "side {}: slope {} l = {} H = {} d = {} e = {}",
            j + 1,
            side.slope_text(),
            side.length,
            side.height,
            side.degree,
            side.slope_den
        );
        let _ = writeln!(s, "  residual: {}", residual.poly);
        let _ = writeln!(s, "  factors: {}", fs.join(" "));
    }
    let _ = writeln!(s, "ind_phi = {}", phi_index(&principal, deg_phi));
    s.push('\n');
    s.push_str(&render_ascii(&principal, deg_phi));
    Ok((s, render_svg(&principal, deg_phi)))
}

fn cmd_polygon(
    poly: &str,
    p: u64,
    phi: Option<&str>,
    svg: Option<&Path>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let f = parse_monic(poly, "poly")?;
    let p = parse_prime(p)?;
    if json {
        let report = analyze_prime(&f, p)?;
        writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).unwrap())?;
        return Ok(0);
    }
    let reduced_factors = factor(&f.reduce_mod_p(p)?);
    let phis: Vec<ZxPoly> = match phi {
        Some(text) => {
            let phi = parse_monic(text, "phi")?;
            if !crate::ffpoly::is_irreducible(&phi.reduce_mod_p(p)?)? {
                let hint = match &reduced_factors {
                    Ok(fs) if !fs.is_empty() => format!("; try --phi \"{}\"", ZxPoly::lift(&fs[0].0)),
                    _ => String::new(),
                };
                return Err(Error::Input(format!("phi = {phi} is reducible modulo {p}{hint}")));
            }
            vec![phi]
        }
        None => reduced_factors
            .map_err(|_| Error::Input(format!("{f} is constant modulo {p}")))?
            .iter()
            .map(|(g, _)| ZxPoly::lift(g))
            .collect(),
    };
    let _ = writeln!(out, "F = {f}, p = {p}");
    for (k, phi) in phis.iter().enumerate() {
        let (text, picture) = describe_polygon(&f, phi, p)?;
        writeln!(out)?;
        out.write_all(text.as_bytes())?;
        if let Some(base) = svg {
            let path = svg_path(base, k, phis.len());
            std::fs::write(&path, picture).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            writeln!(out, "svg written to {}", path.display())?;
        }
    }
    Ok(0)
}

fn cmd_factor(poly: &str, p: u64, out: &mut dyn Write) -> Result<i32> {
    let f = parse_poly(poly)?;
    let p = parse_prime(p)?;
    if p > MAX_FACTOR_PRIME {
        return Err(Error::Input(format!("p = {p} exceeds {MAX_FACTOR_PRIME}")));
    }
    let reduced = f.reduce_mod_p(p)?;
    if reduced.degree().unwrap_or(0) == 0 {
        return Err(Error::Input(format!("{f} is constant modulo {p}")));
    }
    let factors = factor(&reduced)?;
    writeln!(out, "{f} mod {p}")?;
    if let Some(lc) = reduced.leading().filter(|&&c| c != 1) {
        writeln!(out, "leading coefficient: {lc}")?;
    }
    let width = factors.iter().map(|(g, _)| g.to_string().len()).max().unwrap_or(0).max(6);
    writeln!(out, "{:<width$}  multiplicity", "factor")?;
    for (g, k) in &factors {
        writeln!(out, "{:<width$}  {k}", g.to_string())?;
    }
    Ok(0)
}
