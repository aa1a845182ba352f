//! Command-line front end. Every subcommand builds a [`Report`] which is
//! written once, so identical arguments give byte-identical output.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::coefficients::{b_dir_odd, b_free_odd, Method, WeylCoefficients, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::material::{Admissibility, Bc, Material};
use crate::rayleigh::{alpha_star, rayleigh_cubic, rayleigh_roots, rayleigh_tilde, RootCase};
use crate::shift::{b_from_shift, shift, ShiftProfile};
use crate::spectra::cache;
use crate::spectra::cylinder::cylinder_spectrum_with;
use crate::spectra::disk::disk_spectrum_with;
use crate::spectra::{CountingFunction, Geometry, ScanOptions};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "elastic-weyl", version, about = "Two-term Weyl asymptotics for linear elasticity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weyl coefficients a, b_dir, b_free and their variants.
    Coeffs(CoeffsArgs),
    /// Roots of the Rayleigh cubic.
    Rayleigh(RayleighArgs),
    /// Samples of the spectral shift function at |xi'| = xi.
    Shift(ShiftArgs),
    /// Exact counting function of a model domain against the two-term prediction.
    Count(CountArgs),
}

#[derive(Args, Debug, Clone)]
pub struct MaterialArgs {
    /// First Lamé parameter.
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub lambda: f64,
    /// Shear modulus.
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    /// Give alpha = mu/(lambda+2mu) instead of lambda.
    #[arg(long, conflicts_with = "lambda")]
    pub alpha: Option<f64>,
    /// Only require lambda + mu > 0 instead of d lambda + 2 mu > 0.
    #[arg(long)]
    pub extended: bool,
}

impl MaterialArgs {
    pub fn build(&self, dim: usize) -> Result<Material> {
        match self.alpha {
            Some(a) => Material::from_alpha(a, self.mu, dim),
            None => {
                let mode = if self.extended { Admissibility::Extended } else { Admissibility::Standard };
                Material::with_mode(self.lambda, self.mu, dim, mode)
            }
        }
    }
}

/// Inclusive dimension range written `3` or `2..5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimRange(pub usize, pub usize);

impl FromStr for DimRange {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad dimension '{t}'"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => (parse(s)?, parse(s)?),
        };
        if lo < 2 || hi < lo {
            return Err(format!("dimension range '{s}' must satisfy 2 <= lo <= hi"));
        }
        Ok(DimRange(lo, hi))
    }
}

/// `lo:hi:n`, `n` equally spaced values including both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Sweep {
    pub fn values(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.lo];
        }
        (0..self.n).map(|i| self.lo + (self.hi - self.lo) * i as f64 / (self.n - 1) as f64).collect()
    }
}

impl FromStr for Sweep {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("sweep '{s}' is not lo:hi:n"));
        }
        let lo: f64 = parts[0].parse().map_err(|_| format!("bad lower end '{}'", parts[0]))?;
        let hi: f64 = parts[1].parse().map_err(|_| format!("bad upper end '{}'", parts[1]))?;
        let n: usize = parts[2].parse().map_err(|_| format!("bad count '{}'", parts[2]))?;
        if n == 0 || hi < lo {
            return Err(format!("sweep '{s}' needs n >= 1 and lo <= hi"));
        }
        Ok(Sweep { lo, hi, n })
    }
}

#[derive(Args, Debug)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub material: MaterialArgs,
    /// Dimension or inclusive range, e.g. `3` or `2..5`.
    #[arg(long, default_value = "3")]
    pub dim: DimRange,
    /// Add Liu's Dirichlet value and its ratio to ours.
    #[arg(long)]
    pub liu: bool,
    /// Sweep alpha as `lo:hi:n` (mu fixed, lambda follows).
    #[arg(long)]
    pub alpha_sweep: Option<Sweep>,
    /// Quadrature tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct RayleighArgs {
    #[command(flatten)]
    pub material: MaterialArgs,
    /// Sweep alpha as `lo:hi:n`.
    #[arg(long)]
    pub alpha_sweep: Option<Sweep>,
}

#[derive(Args, Debug)]
pub struct ShiftArgs {
    #[command(flatten)]
    pub material: MaterialArgs,
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
    #[arg(long, value_enum)]
    pub bc: Bc,
    /// Tangential frequency |xi'|.
    #[arg(long, default_value_t = 1.0)]
    pub xi: f64,
    /// Number of equally spaced samples in (0, top].
    #[arg(long, default_value_t = 400)]
    pub grid: usize,
    /// Largest Lambda sampled; defaults to 1.25 (lambda + 2 mu) xi^2.
    #[arg(long)]
    pub top: Option<f64>,
    /// Also integrate the shift over the boundary phase space and compare with quadrature.
    #[arg(long)]
    pub check_b: bool,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Disk,
    Cylinder,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[command(flatten)]
    pub material: MaterialArgs,
    #[arg(long, value_enum)]
    pub model: Model,
    #[arg(long, value_enum)]
    pub bc: Bc,
    /// Every eigenvalue up to here is computed.
    #[arg(long, default_value_t = 2000.0)]
    pub lambda_max: f64,
    /// Cylinder height.
    #[arg(long, default_value_t = PI)]
    pub h: f64,
    /// Number of output rows, equally spaced in (0, lambda_max].
    #[arg(long, default_value_t = 400)]
    pub grid: usize,
    /// Add the curve predicted by Liu's Dirichlet coefficient.
    #[arg(long)]
    pub emit_liu: bool,
    /// Spectrum cache; reused when it matches, written otherwise.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Scan step as a fraction of the typical root spacing.
    #[arg(long, default_value_t = 0.125)]
    pub step_fraction: f64,
}

/// One output value.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Flag(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format!("{x:.11e}"),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Flag(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => serde_json::Number::from_f64(*x).map(Value::Number).unwrap_or(Value::Null),
            Cell::Int(i) => json!(i),
            Cell::Text(s) => json!(s),
            Cell::Flag(b) => json!(b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

/// A table plus a few summary values.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub meta: Vec<(String, Cell)>,
    pub notes: Vec<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Self { command, meta: vec![], notes: vec![], columns, rows: vec![] }
    }

    fn meta(&mut self, key: &str, value: impl Into<Cell>) {
        self.meta.push((key.to_string(), value.into()));
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    pub fn meta_value(&self, key: &str) -> Option<&Cell> {
        self.meta.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut w = w;
        let io = |e: std::io::Error| Error::InvalidArgument(format!("cannot write output: {e}"));
        writeln!(w, "# elastic-weyl {} schema={SCHEMA_VERSION}", self.command).map_err(io)?;
        for (k, v) in &self.meta {
            writeln!(w, "# {k}={}", v.csv()).map_err(io)?;
        }
        for n in &self.notes {
            writeln!(w, "# note: {n}").map_err(io)?;
        }
        let mut wr = csv::Writer::from_writer(w);
        let err = |e: csv::Error| Error::InvalidArgument(format!("cannot write output: {e}"));
        wr.write_record(&self.columns).map_err(err)?;
        for row in &self.rows {
            wr.write_record(row.iter().map(Cell::csv)).map_err(err)?;
        }
        wr.flush().map_err(io)
    }

    pub fn to_json(&self) -> Value {
        let mut meta = Map::new();
        for (k, v) in &self.meta {
            meta.insert(k.clone(), v.json());
        }
        let rows: Vec<Value> = self.rows.iter().map(|r| Value::Array(r.iter().map(Cell::json).collect())).collect();
        json!({
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "meta": meta,
            "notes": self.notes,
            "columns": self.columns,
            "rows": rows,
        })
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>> {
        let mut buf = Vec::new();
        match format {
            Format::Csv => self.write_csv(&mut buf)?,
            Format::Json => {
                buf = serde_json::to_vec_pretty(&self.to_json())
                    .map_err(|e| Error::InvalidArgument(format!("cannot encode JSON: {e}")))?;
                buf.push(b'\n');
            }
        }
        Ok(buf)
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Coeffs(a) => cmd_coeffs(a),
        Command::Rayleigh(a) => cmd_rayleigh(a),
        Command::Shift(a) => cmd_shift(a),
        Command::Count(a) => cmd_count(a),
    }
}

/// Runs the command and writes its report to `--out` or stdout.
pub fn execute(cli: &Cli) -> Result<()> {
    let bytes = run(cli)?.render(cli.format)?;
    let io = |e: std::io::Error| Error::InvalidArgument(format!("cannot write output: {e}"));
    match &cli.out {
        Some(path) => std::fs::write(path, bytes).map_err(io),
        None => std::io::stdout().lock().write_all(&bytes).map_err(io),
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

pub fn cmd_coeffs(args: &CoeffsArgs) -> Result<Report> {
    check_tol(args.tol)?;
    let mut cols = vec![
        "dim", "alpha", "lambda", "mu", "gamma_r", "a", "b_dir", "b_free", "a_heat", "b_dir_heat", "b_free_heat",
        "b_dir_scaled", "b_free_scaled", "b_dir_odd", "b_free_odd", "delta_dir", "delta_free",
    ];
    if args.liu {
        cols.extend(["b_dir_liu", "liu_ratio"]);
    }
    let mut rep = Report::new("coeffs", cols);
    let DimRange(lo, hi) = args.dim;
    let materials: Vec<Material> = match args.alpha_sweep {
        Some(sw) => {
            let mut v = Vec::new();
            for alpha in sw.values() {
                for d in lo..=hi {
                    v.push(Material::from_alpha(alpha, args.material.mu, d)?);
                }
            }
            v
        }
        None => (lo..=hi).map(|d| args.material.build(d)).collect::<Result<_>>()?,
    };
    for m in materials {
        let c = WeylCoefficients::compute(&m, Method::Quadrature, args.tol)?;
        let d = m.dim();
        // b mu^{(d-1)/2} depends on alpha alone
        let scale = m.mu().powf((d as f64 - 1.0) / 2.0);
        let mut row: Vec<Cell> = vec![
            Cell::Int(d as i64),
            m.alpha().into(),
            m.lambda().into(),
            m.mu().into(),
            rayleigh_roots(m.alpha())?.gamma_r.into(),
            c.a.into(),
            c.b_dir.into(),
            c.b_free.into(),
            c.a_heat.into(),
            c.b_dir_heat.into(),
            c.b_free_heat.into(),
            (c.b_dir * scale).into(),
            (c.b_free * scale).into(),
        ];
        if d % 2 == 1 {
            let (od, of) = (b_dir_odd(&m)?, b_free_odd(&m)?);
            row.extend([od.into(), of.into(), (c.b_dir - od).abs().into(), (c.b_free - of).abs().into()]);
        } else {
            row.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty]);
        }
        if args.liu {
            row.extend([c.b_dir_liu.into(), (c.b_dir_liu / c.b_dir).into()]);
        }
        rep.rows.push(row);
    }
    Ok(rep)
}

pub fn cmd_rayleigh(args: &RayleighArgs) -> Result<Report> {
    let mut rep = Report::new(
        "rayleigh",
        vec!["alpha", "gamma_r", "w1", "w2_re", "w2_im", "w3_re", "w3_im", "case", "residual_cubic", "residual_tilde"],
    );
    rep.meta("alpha_star", alpha_star());
    let alphas = match args.alpha_sweep {
        Some(sw) => sw.values(),
        None => vec![args.material.build(2)?.alpha()],
    };
    for alpha in alphas {
        let r = rayleigh_roots(alpha)?;
        let case = match r.case {
            RootCase::ComplexPair => "complex_pair",
            RootCase::DoubleReal => "double_real",
            RootCase::DistinctReal => "distinct_real",
        };
        rep.rows.push(vec![
            alpha.into(),
            r.gamma_r.into(),
            r.w1.into(),
            r.w2.re.into(),
            r.w2.im.into(),
            r.w3.re.into(),
            r.w3.im.into(),
            Cell::Text(case.into()),
            rayleigh_cubic(alpha, r.w1).into(),
            rayleigh_tilde(alpha, r.w1).into(),
        ]);
    }
    Ok(rep)
}

pub fn cmd_shift(args: &ShiftArgs) -> Result<Report> {
    check_tol(args.tol)?;
    if args.grid == 0 {
        return Err(Error::InvalidArgument("grid must be at least 1".into()));
    }
    let m = args.material.build(args.dim)?;
    let profile = ShiftProfile::new(&m, args.bc, args.xi)?;
    let top = args.top.unwrap_or(1.25 * m.p_modulus() * args.xi * args.xi);
    if !(top > 0.0) {
        return Err(Error::InvalidArgument(format!("top must be positive, got {top}")));
    }
    let mut rep = Report::new("shift", vec!["Lambda", "shift", "at_breakpoint"]);
    rep.meta("bc", Cell::Text(args.bc.to_string()));
    rep.meta("dim", Cell::Int(args.dim as i64));
    rep.meta("alpha", m.alpha());
    rep.meta("xi", args.xi);
    for (i, b) in profile.breakpoints.iter().enumerate() {
        rep.meta(&format!("breakpoint_{i}"), *b);
    }
    for (i, p) in profile.plateaus.iter().enumerate() {
        rep.meta(&format!("plateau_{i}"), p.map(Cell::Num).unwrap_or(Cell::Empty));
    }
    let mut grid: Vec<f64> = (1..=args.grid).map(|i| top * i as f64 / args.grid as f64).collect();
    grid.extend(profile.breakpoints.iter().copied().filter(|&b| b <= top));
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup();
    for l in grid {
        let s = shift(&m, args.bc, args.xi, l)?;
        rep.rows.push(vec![l.into(), s.value.into(), Cell::Flag(s.at_breakpoint)]);
    }
    if args.check_b {
        let bs = b_from_shift(&m, args.bc, args.tol)?;
        let c = WeylCoefficients::compute(&m, Method::Quadrature, args.tol)?;
        let bq = match args.bc {
            Bc::Dir => c.b_dir,
            Bc::Free => c.b_free,
        };
        rep.meta("b_from_shift", bs);
        rep.meta("b_quadrature", bq);
        rep.meta("b_abs_diff", (bs - bq).abs());
    }
    Ok(rep)
}

/// Spectrum for `count`, through the cache when one is given.
pub fn model_spectrum(
    m: &Material,
    model: Model,
    bc: Bc,
    h: f64,
    lambda_max: f64,
    opts: &ScanOptions,
    cache_path: Option<&std::path::Path>,
) -> Result<CountingFunction> {
    let geometry = match model {
        Model::Disk => Geometry::Disk,
        Model::Cylinder => Geometry::Cylinder { h },
    };
    if let Some(p) = cache_path {
        if let Some(c) = cache::load_matching(p, m, geometry, bc, lambda_max)? {
            return Ok(c);
        }
    }
    let c = match model {
        Model::Disk => disk_spectrum_with(m, bc, lambda_max, opts)?,
        Model::Cylinder => cylinder_spectrum_with(m, bc, h, lambda_max, opts)?,
    };
    if let Some(p) = cache_path {
        cache::save(&c, m, p)?;
    }
    Ok(c)
}

pub fn cmd_count(args: &CountArgs) -> Result<Report> {
    if args.grid == 0 {
        return Err(Error::InvalidArgument("grid must be at least 1".into()));
    }
    if args.emit_liu && args.bc != Bc::Dir {
        return Err(Error::InvalidArgument("Liu's coefficient exists only for the Dirichlet problem".into()));
    }
    let dim = match args.model {
        Model::Disk => 2,
        Model::Cylinder => 3,
    };
    let m = args.material.build(dim)?;
    let opts = ScanOptions { step_fraction: args.step_fraction, ..ScanOptions::default() };
    let c = model_spectrum(&m, args.model, args.bc, args.h, args.lambda_max, &opts, args.cache.as_deref())?;
    let coeffs = WeylCoefficients::compute(&m, Method::Quadrature, DEFAULT_TOL)?;
    let b = match args.bc {
        Bc::Dir => coeffs.b_dir,
        Bc::Free => coeffs.b_free,
    };
    let vol = c.geometry.volume();
    let bvol = c.geometry.boundary_volume();
    let (p_lead, p_bdry) = (dim as f64 / 2.0, (dim as f64 - 1.0) / 2.0);

    let mut cols = vec!["Lambda", "N", "residual", "prediction"];
    if args.emit_liu {
        cols.push("liu");
    }
    let mut rep = Report::new("count", cols);
    rep.meta("geometry", Cell::Text(c.geometry.label()));
    rep.meta("bc", Cell::Text(args.bc.to_string()));
    rep.meta("lambda", m.lambda());
    rep.meta("mu", m.mu());
    rep.meta("lambda_max", args.lambda_max);
    rep.meta("a", coeffs.a);
    rep.meta("b", b);
    rep.meta("total", Cell::Int(c.count(f64::INFINITY) as i64));
    // mean of residual / Lambda^{(d-1)/2} over the top half, against b Vol(boundary)
    let mean = c.mean_residual(coeffs.a * vol, 0.5 * args.lambda_max, args.lambda_max)?;
    rep.meta("top_half_mean", mean);
    rep.meta("top_half_ratio", mean / (b * bvol));
    if args.emit_liu {
        rep.meta("b_liu", coeffs.b_dir_liu);
    }
    rep.notes = c.notes.clone();
    for i in 1..=args.grid {
        let l = args.lambda_max * i as f64 / args.grid as f64;
        let n = c.count(l);
        let mut row: Vec<Cell> = vec![
            l.into(),
            Cell::Int(n as i64),
            (n as f64 - coeffs.a * vol * l.powf(p_lead)).into(),
            (b * bvol * l.powf(p_bdry)).into(),
        ];
        if args.emit_liu {
            row.push((coeffs.b_dir_liu * bvol * l.powf(p_bdry)).into());
        }
        rep.rows.push(row);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("elastic-weyl").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn dim_range_parsing() {
        assert_eq!("3".parse::<DimRange>().unwrap(), DimRange(3, 3));
        assert_eq!("2..5".parse::<DimRange>().unwrap(), DimRange(2, 5));
        assert!("1".parse::<DimRange>().is_err());
        assert!("5..2".parse::<DimRange>().is_err());
    }

    #[test]
    fn sweep_parsing() {
        let s: Sweep = "0.05:0.95:19".parse().unwrap();
        let v = s.values();
        assert_eq!(v.len(), 19);
        assert!((v[1] - 0.1).abs() < 1e-15 && (v[18] - 0.95).abs() < 1e-15);
        assert!("0.5:0.1:3".parse::<Sweep>().is_err());
        assert!("1:2".parse::<Sweep>().is_err());
    }

    #[test]
    fn coeffs_row_for_alpha_quarter() {
        let rep = run(&parse(&["coeffs", "--dim", "3", "--lambda", "2", "--mu", "1", "--liu"])).unwrap();
        let row = &rep.rows[0];
        let get = |c: &str| match &row[rep.column(c).unwrap()] {
            Cell::Num(x) => *x,
            other => panic!("{other:?}"),
        };
        assert!((get("b_dir") + 0.0537154).abs() < 1e-6);
        assert!((get("b_free") - 0.0629989).abs() < 1e-6);
        assert!(get("delta_dir") < 1e-8);
        assert!(get("liu_ratio") < 1.0);
    }

    #[test]
    fn csv_layout_and_precision() {
        let rep = run(&parse(&["rayleigh", "--alpha", "0.25"])).unwrap();
        let text = String::from_utf8(rep.render(Format::Csv).unwrap()).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "# elastic-weyl rayleigh schema=1");
        assert!(lines.next().unwrap().starts_with("# alpha_star="));
        assert!(lines.next().unwrap().starts_with("alpha,gamma_r,w1"));
        let first = lines.next().unwrap().split(',').next().unwrap().to_string();
        assert_eq!(first, "2.50000000000e-1");
    }

    #[test]
    fn json_is_parseable() {
        let rep = run(&parse(&["shift", "--bc", "free", "--dim", "3", "--grid", "10"])).unwrap();
        let v: Value = serde_json::from_slice(&rep.render(Format::Json).unwrap()).unwrap();
        assert_eq!(v["command"], "shift");
        // ten grid points plus the Rayleigh breakpoint; 1 and 4 are already on the grid
        assert_eq!(v["rows"].as_array().unwrap().len(), 11);
    }

    #[test]
    fn liu_for_free_is_a_config_error() {
        let e = run(&parse(&["count", "--model", "disk", "--bc", "free", "--emit-liu", "--lambda-max", "50"]))
            .unwrap_err();
        assert!(e.is_config());
    }

    #[test]
    fn alpha_conflicts_with_lambda() {
        let r = Cli::try_parse_from(["elastic-weyl", "coeffs", "--alpha", "0.3", "--lambda", "2"]);
        assert!(r.is_err());
    }
}
