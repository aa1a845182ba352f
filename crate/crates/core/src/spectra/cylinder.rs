//! Flat cylinders `T^2 x [0, h]` with `T^2 = R^2 / (2 pi Z)^2`.
//!
//! A horizontal Fourier mode `e^{i k . x}`, `|k|^2 = K`, reduces the problem to
//! ODEs on `[0, h]`. The horizontally polarised (SH) part has the closed form
//! `mu (K + (m pi / h)^2)`. The in-plane (Lamb) part splits by symmetry about
//! the midplane into two 2x2 determinants. With `p^2 = Lambda/(lambda+2mu) - K`,
//! `q^2 = Lambda/mu - K`, `C_p = cos(p H)`, `S_p = sin(p H)/p`, `H = h/2`:
//!
//! | bc   | symmetric                                 | antisymmetric                             |
//! |------|-------------------------------------------|-------------------------------------------|
//! | dir  | `K C_p S_q + p^2 C_q S_p`                 | `K S_p C_q + q^2 S_q C_p`                 |
//! | free | `4 K p^2 S_p C_q + (q^2 - K)^2 S_q C_p`   | `4 K q^2 C_p S_q + (q^2 - K)^2 S_p C_q`   |
//!
//! `C` and `S` are entire in `p^2`, so evanescent branches switch to `cosh`
//! and `sinh` without any change of formula.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::{resolve_roots, sum_two_squares, CountingFunction, Eigenvalue, Geometry, ScanOptions};
use crate::error::{Error, Result};
use crate::material::{Bc, Material};
use crate::numerics::scan_roots;
use crate::rayleigh::gamma_r;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambParity {
    /// Horizontal displacement even about the midplane.
    Symmetric,
    Antisymmetric,
}

impl LambParity {
    fn tag(self) -> &'static str {
        match self {
            LambParity::Symmetric => "lamb-s",
            LambParity::Antisymmetric => "lamb-a",
        }
    }
}

/// `(C, S)` at thickness `t`, both divided by `cosh(sqrt(-p2) t)` when `p2 < 0`.
/// The common positive factor does not move roots and keeps values finite.
pub(crate) fn cos_sinc(p2: f64, t: f64) -> (f64, f64) {
    if p2 >= 0.0 {
        let p = p2.sqrt();
        let x = p * t;
        let s = if x < 1e-4 { t * (1.0 - x * x / 6.0) } else { x.sin() / p };
        (x.cos(), s)
    } else {
        let y = (-p2).sqrt();
        let x = y * t;
        let s = if x < 1e-4 { t * (1.0 - x * x / 3.0) } else { x.tanh() / y };
        (1.0, s)
    }
}

fn wavenumbers(m: &Material, k: f64, lambda: f64) -> (f64, f64) {
    (lambda / m.p_modulus() - k, lambda / m.mu() - k)
}

/// Lamb determinant of one parity, scaled into `[-sqrt 2, sqrt 2]` by a positive factor.
pub fn lamb_secular(m: &Material, bc: Bc, parity: LambParity, k: u64, h: f64, lambda: f64) -> f64 {
    let kf = k as f64;
    let (p2, q2) = wavenumbers(m, kf, lambda);
    let t = 0.5 * h;
    let (cp, sp) = cos_sinc(p2, t);
    let (cq, sq) = cos_sinc(q2, t);
    let (t1, t2) = match (bc, parity) {
        (Bc::Dir, LambParity::Symmetric) => (kf * cp * sq, p2 * cq * sp),
        (Bc::Dir, LambParity::Antisymmetric) => (kf * sp * cq, q2 * sq * cp),
        (Bc::Free, LambParity::Symmetric) => (4.0 * kf * p2 * sp * cq, (q2 - kf).powi(2) * sq * cp),
        (Bc::Free, LambParity::Antisymmetric) => (4.0 * kf * q2 * cp * sq, (q2 - kf).powi(2) * sp * cq),
    };
    let norm = t1.hypot(t2);
    if norm == 0.0 {
        0.0
    } else {
        (t1 + t2) / norm
    }
}

/// SH determinant: `S_q(h)` for Dirichlet, `-q^2 S_q(h)` for free, scaled as in [`lamb_secular`].
pub fn sh_secular(m: &Material, bc: Bc, k: u64, h: f64, lambda: f64) -> f64 {
    let q2 = lambda / m.mu() - k as f64;
    let (_, s) = cos_sinc(q2, h);
    match bc {
        Bc::Dir => s,
        Bc::Free => -q2 * s,
    }
}

/// `(sh, lamb)` at wavenumber `K`; `lamb` is the product of the two parities.
pub fn cylinder_secular(m: &Material, bc: Bc, k: u64, h: f64, lambda: f64) -> Result<(f64, f64)> {
    if !(h > 0.0) {
        return Err(Error::InvalidArgument(format!("cylinder height must be positive, got {h}")));
    }
    if !(lambda > 0.0) {
        return Err(Error::InvalidArgument(format!("Lambda must be positive, got {lambda}")));
    }
    let lamb = lamb_secular(m, bc, LambParity::Symmetric, k, h, lambda)
        * lamb_secular(m, bc, LambParity::Antisymmetric, k, h, lambda);
    Ok((sh_secular(m, bc, k, h, lambda), lamb))
}

/// SH eigenvalues `mu (K + (m pi/h)^2) <= lambda_max`.
fn sh_modes(m: &Material, bc: Bc, k: u64, h: f64, lambda_max: f64, mult: u32) -> Vec<Eigenvalue> {
    let first = if bc == Bc::Dir { 1 } else { 0 };
    let w = PI / h;
    (first..)
        .map(|n: u64| m.mu() * (k as f64 + (n as f64 * w).powi(2)))
        .take_while(|&l| l <= lambda_max)
        .map(|l| Eigenvalue { lambda: l, multiplicity: mult, branch: format!("K={k}:sh") })
        .collect()
}

/// At `K = 0` the three components decouple: two shear families and one pressure family.
fn vertical_modes(m: &Material, bc: Bc, h: f64, lambda_max: f64) -> Vec<Eigenvalue> {
    let first = if bc == Bc::Dir { 1 } else { 0 };
    let w = PI / h;
    let mut out = Vec::new();
    for (modulus, mult, name) in [(m.mu(), 2, "K=0:shear"), (m.p_modulus(), 1, "K=0:pressure")] {
        for n in first.. {
            let l = modulus * (n as f64 * w).powi(2);
            if l > lambda_max {
                break;
            }
            out.push(Eigenvalue { lambda: l, multiplicity: mult, branch: name.into() });
        }
    }
    out
}

fn scan_lamb(
    m: &Material,
    bc: Bc,
    k: u64,
    h: f64,
    lambda_max: f64,
    mult: u32,
    opts: &ScanOptions,
) -> (Vec<Eigenvalue>, Vec<String>) {
    let w2 = (PI / h).powi(2);
    let start = match bc {
        // the Dirichlet form dominates mu |grad u|^2
        Bc::Dir => m.mu() * (k as f64 + w2) * (1.0 - 1e-9),
        // Lambda = 0 is a spurious root of the potential representation
        Bc::Free => 1e-6 * m.mu(),
    };
    let mut found = Vec::new();
    let mut notes = Vec::new();
    if start >= lambda_max {
        return (found, notes);
    }
    let step = opts.step_fraction * m.mu() * w2;
    for parity in [LambParity::Symmetric, LambParity::Antisymmetric] {
        let f = |l: f64| lamb_secular(m, bc, parity, k, h, l);
        let scan = scan_roots(f, start, lambda_max, step, opts.residual_tol);
        let label = format!("K={k}:{}", parity.tag());
        found.extend(resolve_roots(&scan.roots, f, |l| l, &label, mult, &mut notes));
    }
    (found, notes)
}

pub fn cylinder_spectrum(m: &Material, bc: Bc, h: f64, lambda_max: f64) -> Result<CountingFunction> {
    cylinder_spectrum_with(m, bc, h, lambda_max, &ScanOptions::default())
}

/// All eigenvalues of `T^2 x [0, h]` up to `lambda_max`.
pub fn cylinder_spectrum_with(
    m: &Material,
    bc: Bc,
    h: f64,
    lambda_max: f64,
    opts: &ScanOptions,
) -> Result<CountingFunction> {
    opts.validate()?;
    if m.dim() != 3 {
        return Err(Error::InvalidArgument(format!("the cylinder is three-dimensional, material has d = {}", m.dim())));
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidArgument(format!("cylinder height must be positive, got {h}")));
    }
    if !(lambda_max > 0.0) || !lambda_max.is_finite() {
        return Err(Error::InvalidArgument(format!("lambda_max must be positive, got {lambda_max}")));
    }
    let w2 = (PI / h).powi(2);
    // free plates carry Rayleigh-type modes just below mu gamma_R^2 K, so
    // scan a margin past that and require the margin to come out empty
    let (k_complete, k_top) = match bc {
        Bc::Dir => {
            let k = (lambda_max / m.mu() - w2).floor().max(0.0) as u64;
            (k, k)
        }
        Bc::Free => {
            let g2 = gamma_r(m.alpha())?.powi(2);
            let k = (lambda_max / (m.mu() * g2)).floor() as u64;
            (k, (1.05 * lambda_max / (m.mu() * g2)).ceil() as u64 + 1)
        }
    };
    let ks: Vec<(u64, u64)> = (1..=k_top).map(|k| (k, sum_two_squares(k))).filter(|&(_, s)| s > 0).collect();

    let results: Vec<(u64, Vec<Eigenvalue>, Vec<String>)> = ks
        .par_iter()
        .map(|&(k, s)| {
            let mult = s as u32;
            let (mut found, notes) = scan_lamb(m, bc, k, h, lambda_max, mult, opts);
            found.extend(sh_modes(m, bc, k, h, lambda_max, mult));
            (k, found, notes)
        })
        .collect();

    let mut entries = vertical_modes(m, bc, h, lambda_max);
    let mut notes = Vec::new();
    for (k, found, nt) in results {
        if k > k_complete && !found.is_empty() {
            return Err(Error::ScanBudget {
                branch: format!("K={k}"),
                detail: format!("modes found beyond the wavenumber cutoff K = {k_complete}"),
            });
        }
        entries.extend(found);
        notes.extend(nt);
    }
    Ok(CountingFunction::new(Geometry::Cylinder { h }, bc, lambda_max, entries, notes))
}
