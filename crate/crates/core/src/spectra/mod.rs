//! Exact eigenvalue counting functions for separable model domains: the unit
//! disk and the flat cylinder `T^2 x [0, h]`.

pub mod cache;
pub mod cylinder;
pub mod disk;

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::material::Bc;
use crate::numerics::{Root, RootTag};

pub use cylinder::{cylinder_secular, cylinder_spectrum, lamb_secular, LambParity};
pub use disk::{disk_secular, disk_spectrum};

/// Relative distance below which two eigenvalues are merged.
pub const MERGE_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Geometry {
    Disk,
    Cylinder { h: f64 },
}

impl Geometry {
    pub fn dim(&self) -> usize {
        match self {
            Geometry::Disk => 2,
            Geometry::Cylinder { .. } => 3,
        }
    }

    pub fn volume(&self) -> f64 {
        match *self {
            Geometry::Disk => PI,
            Geometry::Cylinder { h } => 4.0 * PI * PI * h,
        }
    }

    pub fn boundary_volume(&self) -> f64 {
        match self {
            Geometry::Disk => 2.0 * PI,
            Geometry::Cylinder { .. } => 8.0 * PI * PI,
        }
    }

    /// Label used in the cache file.
    pub fn label(&self) -> String {
        match self {
            Geometry::Disk => "disk".to_string(),
            Geometry::Cylinder { h } => format!("cylinder(h={h})"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s == "disk" {
            return Ok(Geometry::Disk);
        }
        if let Some(inner) = s.strip_prefix("cylinder(h=").and_then(|r| r.strip_suffix(')')) {
            let h: f64 = inner
                .parse()
                .map_err(|_| Error::Cache(format!("bad cylinder height in '{s}'")))?;
            return Ok(Geometry::Cylinder { h });
        }
        Err(Error::Cache(format!("unknown geometry '{s}'")))
    }
}

/// Tuning for the secular-equation scans.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    /// Grid step as a fraction of the expected spacing of roots in a branch.
    pub step_fraction: f64,
    /// `|det|` below which a touching minimum counts as a root, relative to
    /// the branch's natural scale.
    pub residual_tol: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { step_fraction: 0.125, residual_tol: 1e-8 }
    }
}

impl ScanOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.step_fraction > 0.0 && self.step_fraction <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "step fraction must lie in (0, 1], got {}",
                self.step_fraction
            )));
        }
        if !(self.residual_tol > 0.0) {
            return Err(Error::InvalidArgument("residual tolerance must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub lambda: f64,
    pub multiplicity: u32,
    /// Separated problem that produced it, e.g. `k=3` or `K=5:sh`.
    pub branch: String,
}

/// Sorted multiset of eigenvalues; `N(Lambda) = #{n : Lambda_n < Lambda}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountingFunction {
    pub geometry: Geometry,
    pub bc: Bc,
    /// Every eigenvalue up to here has been found.
    pub lambda_max: f64,
    pub entries: Vec<Eigenvalue>,
    /// Diagnostics from the scan, such as tangential roots.
    pub notes: Vec<String>,
    #[serde(skip)]
    cumulative: Vec<u64>,
}

impl CountingFunction {
    /// Sorts and merges coincident eigenvalues, summing multiplicities.
    pub fn new(geometry: Geometry, bc: Bc, lambda_max: f64, mut raw: Vec<Eigenvalue>, notes: Vec<String>) -> Self {
        raw.sort_by(|a, b| a.lambda.partial_cmp(&b.lambda).unwrap().then_with(|| a.branch.cmp(&b.branch)));
        let mut entries: Vec<Eigenvalue> = Vec::with_capacity(raw.len());
        for e in raw {
            match entries.last_mut() {
                Some(last) if (e.lambda - last.lambda).abs() <= MERGE_RTOL * last.lambda.abs().max(1.0) => {
                    last.multiplicity += e.multiplicity;
                    if !last.branch.split('|').any(|b| b == e.branch) {
                        last.branch.push('|');
                        last.branch.push_str(&e.branch);
                    }
                }
                _ => entries.push(e),
            }
        }
        let mut cumulative = Vec::with_capacity(entries.len());
        let mut acc = 0u64;
        for e in &entries {
            acc += e.multiplicity as u64;
            cumulative.push(acc);
        }
        Self { geometry, bc, lambda_max, entries, notes, cumulative }
    }

    /// `N(Lambda)`, counting with multiplicity the eigenvalues strictly below `Lambda`.
    pub fn count(&self, lambda: f64) -> u64 {
        let i = self.entries.partition_point(|e| e.lambda < lambda);
        if i == 0 {
            0
        } else {
            self.cumulative[i - 1]
        }
    }

    /// Total multiplicity stored, including any zero modes.
    pub fn total(&self) -> u64 {
        self.cumulative.last().copied().unwrap_or(0)
    }

    /// Mean over `[lo, hi]` of `(N(L) - a_vol L^{d/2}) / L^{(d-1)/2}`, integrated exactly
    /// on the piecewise-constant counting function.
    pub fn mean_residual(&self, a_vol: f64, lo: f64, hi: f64) -> Result<f64> {
        if !(hi > lo && lo > 0.0) {
            return Err(Error::InvalidArgument(format!("need 0 < lo < hi, got [{lo}, {hi}]")));
        }
        if hi > self.lambda_max * (1.0 + 1e-12) {
            return Err(Error::InvalidArgument(format!(
                "window top {hi} exceeds the complete range {}",
                self.lambda_max
            )));
        }
        let d = self.geometry.dim() as f64;
        let q = (d - 1.0) / 2.0;
        let anti = |x: f64| if q == 1.0 { x.ln() } else { x.powf(1.0 - q) / (1.0 - q) };
        let mut total = 0.0;
        let mut x = lo;
        let mut n = self.count(lo) as f64;
        let start = self.entries.partition_point(|e| e.lambda < lo);
        for e in &self.entries[start..] {
            if e.lambda >= hi {
                break;
            }
            total += n * (anti(e.lambda) - anti(x));
            n += e.multiplicity as f64;
            x = e.lambda;
        }
        total += n * (anti(hi) - anti(x));
        // the Weyl term: a_vol L^{d/2 - q} = a_vol L^{1/2}
        total -= a_vol * 2.0 / 3.0 * (hi.powf(1.5) - lo.powf(1.5));
        Ok(total / (hi - lo))
    }
}

/// `#{(k1, k2) in Z^2 : k1^2 + k2^2 = K}`.
pub fn sum_two_squares(k: u64) -> u64 {
    let mut count = 0;
    let r = (k as f64).sqrt() as i64 + 1;
    for a in -r..=r {
        let rest = k as i64 - a * a;
        if rest < 0 {
            continue;
        }
        let b = (rest as f64).sqrt().round() as i64;
        for bb in [b - 1, b, b + 1] {
            if bb >= 0 && bb * bb == rest {
                count += if bb == 0 { 1 } else { 2 };
                break;
            }
        }
    }
    count
}

/// Turns scanned roots into eigenvalues with multiplicities. Suspect
/// (touching) roots are checked for a sign change of the derivative; if
/// confirmed they count twice, otherwise once, and either way a note is left.
pub(crate) fn resolve_roots<F: Fn(f64) -> f64>(
    roots: &[Root],
    f: F,
    to_lambda: impl Fn(f64) -> f64,
    branch: &str,
    multiplicity: u32,
    notes: &mut Vec<String>,
) -> Vec<Eigenvalue> {
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        let mult = match r.tag {
            RootTag::Simple => multiplicity,
            RootTag::Suspect => {
                let h = 1e-7 * r.x.abs().max(1e-3);
                let (fl, f0, fr) = (f(r.x - h), f(r.x), f(r.x + h));
                let extremum = (f0 - fl) * (fr - f0) < 0.0;
                if extremum {
                    notes.push(format!(
                        "{branch}: tangential root at Lambda = {:.12e} counted as double",
                        to_lambda(r.x)
                    ));
                    2 * multiplicity
                } else {
                    notes.push(format!(
                        "{branch}: ambiguous near-root at Lambda = {:.12e} (|det| = {:.3e}) counted once",
                        to_lambda(r.x),
                        r.residual
                    ));
                    multiplicity
                }
            }
        };
        out.push(Eigenvalue { lambda: to_lambda(r.x), multiplicity: mult, branch: branch.to_string() });
    }
    out
}
