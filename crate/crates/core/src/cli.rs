//! Command-line front end: function specs, subcommands and report writers.
//!
//! Every output file starts with `#` comment lines recording the full
//! configuration. CSV numbers use 17 significant digits so they round-trip.

use std::f64::consts::FRAC_PI_4;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::approx::{error_report, Approximant, Mode};
use crate::basis::Family;
use crate::error::Error;
use crate::expr::{parse_expression, Expr, ParseError};
use crate::grid::Interval;
use crate::ordering::gap_report;
use crate::quadrature::QuadratureSpec;
use crate::well::{duality_numbers, wave_table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERIC: i32 = 2;

/// Shared, thread-safe real function.
pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Numeric(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Numeric(_) => EXIT_NUMERIC,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, PartialEq)]
pub enum Builtin {
    /// `x tan α - g x² / (2 v0² cos² α)`.
    Projectile { alpha: f64, v0: f64, g: f64 },
    Identity,
    Const(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    Builtin(Builtin),
    /// Coefficients in ascending powers.
    Polynomial(Vec<f64>),
    Expression { source: String, tree: Expr },
}

impl FunctionSpec {
    /// Projectile with `α = π/4` and `v0 = √g`, i.e. `x - x²`.
    pub fn projectile() -> Self {
        let g: f64 = 9.81;
        FunctionSpec::Builtin(Builtin::Projectile { alpha: FRAC_PI_4, v0: g.sqrt(), g })
    }

    pub fn expression(source: &str) -> Result<Self, ParseError> {
        Ok(FunctionSpec::Expression { source: source.to_string(), tree: parse_expression(source)? })
    }

    pub fn polynomial(coeffs: Vec<f64>) -> CliResult<Self> {
        if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(CliError::Usage("polynomial coefficients must be finite and non-empty".into()));
        }
        Ok(FunctionSpec::Polynomial(coeffs))
    }

    pub fn to_fn(&self) -> RealFn {
        match self.clone() {
            FunctionSpec::Builtin(Builtin::Projectile { alpha, v0, g }) => {
                let slope = alpha.tan();
                let curv = g / (2.0 * v0 * v0 * alpha.cos().powi(2));
                Arc::new(move |x| x * slope - curv * x * x)
            }
            FunctionSpec::Builtin(Builtin::Identity) => Arc::new(|x| x),
            FunctionSpec::Builtin(Builtin::Const(beta)) => Arc::new(move |_| beta),
            FunctionSpec::Polynomial(c) => {
                Arc::new(move |x| c.iter().rev().fold(0.0, |acc, &a| acc * x + a))
            }
            FunctionSpec::Expression { tree, .. } => Arc::new(move |x| tree.eval(x)),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FunctionSpec::Builtin(Builtin::Projectile { alpha, v0, g }) => {
                format!("projectile(alpha={alpha},v0={v0},g={g})")
            }
            FunctionSpec::Builtin(Builtin::Identity) => "identity".into(),
            FunctionSpec::Builtin(Builtin::Const(b)) => format!("const({b})"),
            FunctionSpec::Polynomial(c) => {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                format!("poly({})", parts.join(";"))
            }
            FunctionSpec::Expression { source, .. } => format!("expr({source})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Tri,
    Trig,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Tri => Family::Triangular,
            FamilyArg::Trig => Family::Trig,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Quad,
    Closed,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Quad => Mode::Quadrature,
            ModeArg::Closed => Mode::ClosedForm,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "condexp", version, about = "Approximate continuous functions by conditional expectations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one approximant and tabulate it on the probe grid
    Approx(RunArgs),
    /// Error and residual for several partition sizes
    Study(RunArgs),
    /// Export the joint density on a lattice
    Density(RunArgs),
    /// Tabulate the well eigenstates of one level
    Well(WellArgs),
    /// Check the sorted-gap bound on random sequences
    Lemma(LemmaArgs),
}

#[derive(Debug, Args)]
pub struct FnArgs {
    /// Built-in function: projectile, identity, const or const:<value>
    #[arg(long = "fn", conflicts_with_all = ["expr", "poly"])]
    pub builtin: Option<String>,
    /// Expression in x, e.g. "x*(1-x)"
    #[arg(long)]
    pub expr: Option<String>,
    /// Polynomial coefficients in ascending powers, comma separated
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Launch angle of the projectile (radians)
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Launch speed of the projectile
    #[arg(long)]
    pub v0: Option<f64>,
    /// Gravitational acceleration of the projectile
    #[arg(long)]
    pub g: Option<f64>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub function: FnArgs,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub b: f64,
    /// Partition size (quantum number for the trig family)
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated partition sizes for `study`
    #[arg(long, value_delimiter = ',')]
    pub ns: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "tri")]
    pub family: FamilyArg,
    /// Defaults to closed for tri and quad for trig
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long, default_value_t = 1001)]
    pub probes: usize,
    #[arg(long, default_value_t = QuadratureSpec::DEFAULT_PANELS)]
    pub panels: usize,
    /// Density lattice, `N` or `NXxNY`
    #[arg(long, default_value = "64")]
    pub res: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WellArgs {
    #[arg(long)]
    pub n: usize,
    /// Number of table rows
    #[arg(long, default_value_t = 1001)]
    pub probes: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check one fixed sequence instead, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub values: Option<Vec<f64>>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Validated configuration shared by `approx`, `study` and `density`.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub function: FunctionSpec,
    pub interval: Interval,
    pub ns: Vec<usize>,
    pub family: Family,
    pub mode: Mode,
    pub probes: usize,
    pub quadrature: QuadratureSpec,
    pub res: (usize, usize),
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl FnArgs {
    pub fn to_spec(&self) -> CliResult<FunctionSpec> {
        if let Some(src) = &self.expr {
            if self.poly.is_some() {
                return Err(CliError::Usage("--expr and --poly are exclusive".into()));
            }
            return Ok(FunctionSpec::expression(src)?);
        }
        if let Some(p) = &self.poly {
            let coeffs = p
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Usage(format!("bad --poly: {e}")))?;
            return FunctionSpec::polynomial(coeffs);
        }
        let name = self.builtin.as_deref().unwrap_or("projectile");
        let spec = match name {
            "projectile" => {
                let FunctionSpec::Builtin(Builtin::Projectile { alpha, g, .. }) =
                    FunctionSpec::projectile()
                else {
                    unreachable!()
                };
                let g = self.g.unwrap_or(g);
                let alpha = self.alpha.unwrap_or(alpha);
                let v0 = self.v0.unwrap_or(g.sqrt());
                if !(alpha > 0.0 && alpha < std::f64::consts::FRAC_PI_2 && v0 > 0.0 && g > 0.0) {
                    return Err(CliError::Usage("projectile needs 0 < alpha < pi/2, v0 > 0, g > 0".into()));
                }
                FunctionSpec::Builtin(Builtin::Projectile { alpha, v0, g })
            }
            "identity" => FunctionSpec::Builtin(Builtin::Identity),
            "const" => FunctionSpec::Builtin(Builtin::Const(1.0)),
            other => match other.strip_prefix("const:") {
                Some(v) => {
                    let beta: f64 = v
                        .parse()
                        .map_err(|_| CliError::Usage(format!("bad constant '{v}'")))?;
                    if !beta.is_finite() {
                        return Err(CliError::Usage(format!("bad constant '{v}'")));
                    }
                    FunctionSpec::Builtin(Builtin::Const(beta))
                }
                None => return Err(CliError::Usage(format!("unknown function '{other}'"))),
            },
        };
        Ok(spec)
    }
}

fn parse_res(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Usage(format!("bad --res '{s}'"));
    let (a, b) = match s.split_once(['x', 'X']) {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let nx: usize = a.trim().parse().map_err(|_| bad())?;
    let ny: usize = b.trim().parse().map_err(|_| bad())?;
    if nx == 0 || ny == 0 {
        return Err(bad());
    }
    Ok((nx, ny))
}

impl RunArgs {
    pub fn to_config(&self, need_many: bool) -> CliResult<RunConfig> {
        let function = self.function.to_spec()?;
        let interval = Interval::new(self.a, self.b)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let ns = if need_many {
            self.ns.clone().or_else(|| self.n.map(|n| vec![n]))
        } else {
            self.n.map(|n| vec![n])
        }
        .ok_or_else(|| CliError::Usage(if need_many { "--ns is required" } else { "--n is required" }.into()))?;
        if ns.is_empty() || ns.contains(&0) {
            return Err(CliError::Usage("partition sizes must be at least 1".into()));
        }
        let family: Family = self.family.into();
        let mode = self.mode.map(Mode::from).unwrap_or_else(|| Mode::default_for(family));
        if family == Family::Trig && mode == Mode::ClosedForm {
            return Err(CliError::Usage("--mode closed needs --family tri".into()));
        }
        if self.probes < crate::approx::MIN_PROBES {
            return Err(CliError::Usage(format!(
                "--probes must be at least {}",
                crate::approx::MIN_PROBES
            )));
        }
        let quadrature =
            QuadratureSpec::new(self.panels).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(RunConfig {
            function,
            interval,
            ns,
            family,
            mode,
            probes: self.probes,
            quadrature,
            res: parse_res(&self.res)?,
            format: self.format,
            out: self.out.clone(),
        })
    }
}

impl RunConfig {
    pub fn header(&self, command: &str) -> String {
        let ns: Vec<String> = self.ns.iter().map(|n| n.to_string()).collect();
        format!(
            "# condexp {command} fn={} a={} b={} n={} family={} mode={} panels={} probes={}",
            self.function.describe(),
            self.interval.lo(),
            self.interval.hi(),
            ns.join(";"),
            self.family.name(),
            self.mode.name(),
            self.quadrature.panels_per_cell(),
            self.probes,
        )
    }

    fn json_config(&self, command: &str) -> serde_json::Value {
        json!({
            "command": command,
            "function": self.function.describe(),
            "a": self.interval.lo(),
            "b": self.interval.hi(),
            "ns": self.ns,
            "family": self.family.name(),
            "mode": self.mode.name(),
            "panels": self.quadrature.panels_per_cell(),
            "probes": self.probes,
        })
    }

    fn build(&self, n: usize) -> CliResult<Approximant> {
        let f = self.function.to_fn();
        Ok(Approximant::build(&*f, self.interval, n, self.family, self.mode, self.quadrature)?)
    }
}

/// Round-trippable decimal with 17 significant digits.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn cmd_approx(cfg: &RunConfig, stdout: &mut dyn Write) -> CliResult<()> {
    let n = cfg.ns[0];
    let f = cfg.function.to_fn();
    let appx = cfg.build(n)?;
    let report = error_report(&appx, &*f, cfg.probes)?;
    let mut rows = Vec::with_capacity(cfg.probes);
    for x in cfg.interval.probe_points(cfg.probes) {
        let fx = f(x);
        let fn_x = appx.eval(x)?;
        rows.push((x, fx, fn_x, (fn_x - fx).abs()));
    }

    let text = match cfg.format {
        Format::Csv => {
            let mut s = cfg.header("approx");
            let _ = writeln!(
                s,
                "\n# n={} sup_error={} bound_3dy={} within_bound={} max_node_residual={} probe_count={}",
                report.n,
                num(report.sup_error),
                num(report.bound_3dy),
                report.within_bound,
                num(report.max_node_residual),
                report.probe_count
            );
            s.push_str("x,f,f_n,abs_diff\n");
            for (x, fx, fnx, d) in rows {
                let _ = writeln!(s, "{},{},{},{}", num(x), num(fx), num(fnx), num(d));
            }
            s
        }
        Format::Json => to_json(&json!({
            "config": cfg.json_config("approx"),
            "report": report,
            "rows": rows.iter().map(|&(x, f, g, d)| json!({"x": x, "f": f, "f_n": g, "abs_diff": d})).collect::<Vec<_>>(),
        })),
    };
    emit(&cfg.out, stdout, &text)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StudyRow {
    pub n: usize,
    pub sup_error: f64,
    pub bound_3dy: f64,
    pub residual_sup: f64,
}

/// Rows of a convergence study, computed in parallel and kept in `ns` order.
pub fn study_rows(cfg: &RunConfig) -> CliResult<Vec<StudyRow>> {
    let f = cfg.function.to_fn();
    cfg.ns
        .par_iter()
        .map(|&n| {
            let appx = cfg.build(n)?;
            let rep = error_report(&appx, &*f, cfg.probes)?;
            let res = appx.residual_report(&*f, cfg.probes)?;
            Ok(StudyRow {
                n,
                sup_error: rep.sup_error,
                bound_3dy: rep.bound_3dy,
                residual_sup: res.residual_sup,
            })
        })
        .collect()
}

pub fn cmd_study(cfg: &RunConfig, stdout: &mut dyn Write) -> CliResult<()> {
    let rows = study_rows(cfg)?;
    let text = match cfg.format {
        Format::Csv => {
            let mut s = cfg.header("study");
            s.push_str("\nn,sup_error,bound_3dy,residual_sup\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.n,
                    num(r.sup_error),
                    num(r.bound_3dy),
                    num(r.residual_sup)
                );
            }
            s
        }
        Format::Json => to_json(&json!({ "config": cfg.json_config("study"), "rows": rows })),
    };
    emit(&cfg.out, stdout, &text)
}

pub fn cmd_density(cfg: &RunConfig, stdout: &mut dyn Write) -> CliResult<()> {
    let appx = cfg.build(cfg.ns[0])?;
    let density = appx.density().ok_or_else(|| {
        CliError::Numeric(Error::DegenerateRange(appx.beta().unwrap_or_default()))
    })?;
    let (nx, ny) = cfg.res;
    let grid = density.sample_grid(nx, ny);
    let text = match cfg.format {
        Format::Csv => {
            let mut s = cfg.header("density");
            let _ = writeln!(
                s,
                "\n# H={} res={}x{} cell_area={} mass={}",
                num(density.h()),
                nx,
                ny,
                num(grid.cell_area),
                num(grid.mass())
            );
            s.push('x');
            for &y in &grid.ys {
                let _ = write!(s, ",{}", num(y));
            }
            s.push('\n');
            for (x, row) in grid.xs.iter().zip(&grid.values) {
                s.push_str(&num(*x));
                for &v in row {
                    let _ = write!(s, ",{}", num(v));
                }
                s.push('\n');
            }
            s
        }
        Format::Json => to_json(&json!({
            "config": cfg.json_config("density"),
            "h": density.h(),
            "cell_area": grid.cell_area,
            "xs": grid.xs,
            "ys": grid.ys,
            "values": grid.values,
        })),
    };
    emit(&cfg.out, stdout, &text)
}

pub fn cmd_well(args: &WellArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let d = duality_numbers(args.n)?;
    let rows = wave_table(args.n, args.probes.max(2))?;
    let text = match args.format {
        Format::Csv => {
            let mut s = format!("# condexp well n={} points={}\n", args.n, rows.len());
            let _ = writeln!(s, "# nu={} lambda={} product={}", d.nu, d.lambda, d.product);
            s.push_str("x,psi_n,phi_n,psi_n_sq,phi_n_sq\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    num(r.x),
                    num(r.psi),
                    num(r.phi),
                    num(r.psi_sq),
                    num(r.phi_sq)
                );
            }
            s
        }
        Format::Json => to_json(&json!({ "n": args.n, "duality": d, "rows": rows })),
    };
    emit(&args.out, stdout, &text)
}

/// Outcome of a seeded sweep of the sorted-gap bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaSummary {
    pub count: usize,
    pub failures: usize,
    /// Smallest `e - d` seen.
    pub worst_margin: f64,
}

/// Check `d <= e` on `count` random sequences with lengths in
/// `2..=max_len` and values uniform in `[-range, range]`.
pub fn lemma_sweep(count: usize, seed: u64, max_len: usize, range: f64) -> LemmaSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut worst_margin = f64::INFINITY;
    let mut buf = Vec::with_capacity(max_len);
    for _ in 0..count {
        let len = rng.gen_range(2..=max_len.max(2));
        buf.clear();
        buf.extend((0..len).map(|_| rng.gen_range(-range..=range)));
        let g = gap_report(&buf).expect("at least two finite values");
        if !g.holds() {
            failures += 1;
        }
        worst_margin = worst_margin.min(g.margin());
    }
    LemmaSummary { count, failures, worst_margin }
}

pub fn cmd_lemma(args: &LemmaArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let text = if let Some(values) = &args.values {
        let g = gap_report(values)?;
        format!(
            "lemma fixture: d={} e={} {}\n",
            g.d,
            g.e,
            if g.holds() { "pass" } else { "FAIL" }
        )
    } else {
        if args.count == 0 {
            return Err(CliError::Usage("--count must be at least 1".into()));
        }
        let s = lemma_sweep(args.count, args.seed, 100, 100.0);
        format!(
            "lemma sweep: count={} seed={} failures={} worst_margin={} {}\n",
            s.count,
            args.seed,
            s.failures,
            num(s.worst_margin),
            if s.failures == 0 { "pass" } else { "FAIL" }
        )
    };
    emit(&args.out, stdout, &text)?;
    Ok(())
}

pub fn dispatch(cli: &Cli, stdout: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Approx(a) => cmd_approx(&a.to_config(false)?, stdout),
        Command::Study(a) => cmd_study(&a.to_config(true)?, stdout),
        Command::Density(a) => cmd_density(&a.to_config(false)?, stdout),
        Command::Well(a) => cmd_well(a, stdout),
        Command::Lemma(a) => cmd_lemma(a, stdout),
    }
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["condexp"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn default_projectile_is_parabola() {
        let f = FunctionSpec::projectile().to_fn();
        for x in [0.0, 0.25, 0.5, 1.0] {
            assert!((f(x) - (x - x * x)).abs() < 1e-15);
        }
    }

    #[test]
    fn polynomial_horner() {
        let f = FunctionSpec::polynomial(vec![1.0, -2.0, 3.0]).unwrap().to_fn();
        assert_eq!(f(2.0), 1.0 - 4.0 + 12.0);
        assert!(FunctionSpec::polynomial(vec![]).is_err());
    }

    #[test]
    fn res_parsing() {
        assert_eq!(parse_res("64").unwrap(), (64, 64));
        assert_eq!(parse_res("8x4").unwrap(), (8, 4));
        assert!(parse_res("0").is_err());
        assert!(parse_res("ax2").is_err());
    }

    #[test]
    fn well_duality_line() {
        let (code, out, _) = run_capture(&["well", "--n", "5", "--probes", "11"]);
        assert_eq!(code, 0);
        assert!(out.contains("nu=2.5 lambda=0.4 product=1\n"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["well", "--n", "0"]).0, EXIT_NUMERIC);
        assert_eq!(run_capture(&["lemma", "--count", "0"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["approx", "--n", "3", "--expr", "x**"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["approx", "--n", "3", "--expr", "1/x"]).0, EXIT_NUMERIC);
        assert_eq!(run_capture(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["approx"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["approx", "--n", "2", "--family", "trig", "--mode", "closed"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["density", "--n", "2", "--fn", "const:3"]).0, EXIT_NUMERIC);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn lemma_fixture() {
        let (code, out, _) = run_capture(&["lemma", "--values", "3,1,2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "lemma fixture: d=1 e=2 pass\n");
    }
}
