//! Weyl coefficients: the leading constant `a` and the boundary coefficients
//! `b_dir`, `b_free`, in counting-function and heat-trace normalisation.
//!
//! With `t = tau^{-2}` the boundary integrals become
//! `1/2 integral_1^{1/alpha} t^{-(d+1)/2} arctan(.) dt`, which is what is
//! evaluated here. In odd dimension `d = 2k + 1` the same quantities have
//! closed forms in terms of the `k`-th Taylor coefficient of explicit
//! algebraic functions at `t = 0`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::material::{Bc, Material};
use crate::numerics::{factorial, gamma_half, quad_split, PowerSeries};
use crate::rayleigh::{gamma_r, rayleigh_cubic};

/// Default absolute tolerance for quadrature-based coefficients.
pub const DEFAULT_TOL: f64 = 1e-10;

/// How the second coefficients were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Quadrature,
    ClosedFormOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeylCoefficients {
    pub a: f64,
    pub b_dir: f64,
    pub b_free: f64,
    pub a_heat: f64,
    pub b_dir_heat: f64,
    pub b_free_heat: f64,
    pub b_dir_liu: f64,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeatCoefficients {
    pub a: f64,
    pub b_dir: f64,
    pub b_free: f64,
}

impl WeylCoefficients {
    pub fn compute(m: &Material, method: Method, tol: f64) -> Result<Self> {
        let (b_dir, b_free) = match method {
            Method::Quadrature => (b_dir_quadrature(m, tol)?, b_free_quadrature(m, tol)?),
            Method::ClosedFormOdd => (b_dir_odd(m)?, b_free_odd(m)?),
        };
        let a = weyl_a(m);
        let mut c = Self {
            a,
            b_dir,
            b_free,
            a_heat: 0.0,
            b_dir_heat: 0.0,
            b_free_heat: 0.0,
            b_dir_liu: liu_b_dir(m),
            method,
        };
        let h = heat_coefficients(&c, m.dim());
        c.a_heat = h.a;
        c.b_dir_heat = h.b_dir;
        c.b_free_heat = h.b_free;
        Ok(c)
    }
}

/// Coefficient of `Vol(Omega) Lambda^{d/2}` in the counting function.
pub fn weyl_a(m: &Material) -> f64 {
    let d = m.dim() as f64;
    let num = (d - 1.0) / m.mu().powf(d / 2.0) + 1.0 / m.p_modulus().powf(d / 2.0);
    num / ((4.0 * PI).powf(d / 2.0) * gamma_half(m.dim() + 2))
}

/// `mu^{(1-d)/2} / (2^{d+1} pi^{(d-1)/2} Gamma((d+1)/2))`.
fn prefactor(m: &Material) -> f64 {
    let d = m.dim() as f64;
    m.mu().powf((1.0 - d) / 2.0) / (2f64.powf(d + 1.0) * PI.powf((d - 1.0) / 2.0) * gamma_half(m.dim() + 1))
}

/// Argument of the arctangent after the substitution `t = tau^{-2}`, for `t` in `[1, 1/alpha]`.
pub fn arctan_term(bc: Bc, alpha: f64, t: f64) -> f64 {
    let rad = ((1.0 - alpha * t) * (t - 1.0)).max(0.0).sqrt();
    match bc {
        Bc::Dir => rad.atan(),
        // atan2 keeps the endpoint limit pi/2 and the 0/0 case finite
        Bc::Free => ((t - 2.0) * (t - 2.0)).atan2(4.0 * rad),
    }
}

/// `integral_1^{1/alpha} arctan_term(t) t^{-p} dt`.
pub fn t_integral(bc: Bc, alpha: f64, p: f64, tol: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} lies outside (0, 1)")));
    }
    let f = |t: f64| arctan_term(bc, alpha, t) * t.powf(-p);
    quad_split(f, 1.0, 1.0 / alpha, &[2.0], tol.max(1e-14)).map(|q| q.value)
}

/// `integral_{sqrt(alpha)}^1 tau^{d-2} arctan(.) d tau`.
pub fn boundary_integral(bc: Bc, alpha: f64, dim: usize, tol: f64) -> Result<f64> {
    let p = (dim as f64 + 1.0) / 2.0;
    Ok(0.5 * t_integral(bc, alpha, p, 2.0 * tol)?)
}

pub fn b_dir_quadrature(m: &Material, tol: f64) -> Result<f64> {
    b_quadrature(m, Bc::Dir, tol)
}

pub fn b_free_quadrature(m: &Material, tol: f64) -> Result<f64> {
    b_quadrature(m, Bc::Free, tol)
}

fn b_quadrature(m: &Material, bc: Bc, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let d = m.dim() as f64;
    let alpha = m.alpha();
    let c = prefactor(m);
    let weight = 4.0 * (d - 1.0) / PI;
    let integral = boundary_integral(bc, alpha, m.dim(), tol / (c * weight))?;
    let tail = alpha.powf((d - 1.0) / 2.0);
    Ok(match bc {
        Bc::Dir => -c * (weight * integral + tail + d - 1.0),
        Bc::Free => {
            let g = gamma_r(alpha)?;
            c * (weight * integral + tail + d - 5.0 + 4.0 * g.powf(1.0 - d))
        }
    })
}

fn odd_k(m: &Material) -> Result<usize> {
    let d = m.dim();
    if d % 2 == 0 {
        return Err(Error::InvalidArgument(format!("closed forms need odd dimension, got {d}")));
    }
    Ok((d - 1) / 2)
}

/// `k`-th Taylor coefficient at 0 of
/// `(2t - (alpha+1)/alpha) / (t - (alpha+1)/alpha) / sqrt((1 - alpha t)(1 - t))`.
pub fn dir_series_coeff(alpha: f64, k: usize) -> Result<f64> {
    let n = k + 1;
    let beta = (alpha + 1.0) / alpha;
    let rad = PowerSeries::from_poly(&[1.0, -(1.0 + alpha), alpha], n).sqrt()?;
    let num = PowerSeries::from_poly(&[-beta, 2.0], n);
    let den = &PowerSeries::from_poly(&[-beta, 1.0], n) * &rad;
    Ok(num.try_div(&den)?.coeff(k))
}

/// `k`-th Taylor coefficient at 0 of
/// `P(t) (4 S + (t-2)^2) / ((t-2) R_alpha(t) S)` with
/// `P = 2 alpha t^2 + (alpha-3) t + 2(1-alpha)` and `S = sqrt((1 - alpha t)(1 - t))`.
pub fn free_series_coeff(alpha: f64, k: usize) -> Result<f64> {
    let n = k + 1;
    let s = PowerSeries::from_poly(&[1.0, -(1.0 + alpha), alpha], n).sqrt()?;
    let p = PowerSeries::from_poly(&[2.0 * (1.0 - alpha), alpha - 3.0, 2.0 * alpha], n);
    let sq = PowerSeries::from_poly(&[4.0, -4.0, 1.0], n);
    let num = &p * &(&s.scale(4.0) + &sq);
    let cubic = PowerSeries::from_poly(&[16.0 * (alpha - 1.0), 8.0 * (3.0 - 2.0 * alpha), -8.0, 1.0], n);
    let den = &(&PowerSeries::from_poly(&[-2.0, 1.0], n) * &cubic) * &s;
    debug_assert_eq!(cubic.coeff(0), rayleigh_cubic(alpha, 0.0));
    Ok(num.try_div(&den)?.coeff(k))
}

fn odd_prefactor(m: &Material, k: usize) -> f64 {
    m.mu().powi(-(k as i32)) / (4f64.powi(k as i32 + 1) * factorial(k) * PI.powi(k as i32))
}

/// Closed form of `b_dir` in odd dimension.
pub fn b_dir_odd(m: &Material) -> Result<f64> {
    let k = odd_k(m)?;
    let a = m.alpha();
    let ck = dir_series_coeff(a, k)?;
    let bracket = 2.0 * ck - 2.0 * (a / (a + 1.0)).powi(k as i32) + a.powi(k as i32) + 2.0 * k as f64;
    Ok(-odd_prefactor(m, k) * bracket)
}

/// Closed form of `b_free` in odd dimension.
pub fn b_free_odd(m: &Material) -> Result<f64> {
    let k = odd_k(m)?;
    let a = m.alpha();
    let ck = free_series_coeff(a, k)?;
    let bracket = -8.0 * ck - a.powi(k as i32) + 2.0 * (k as f64 + 2f64.powi(2 - k as i32) - 1.0);
    Ok(odd_prefactor(m, k) * bracket)
}

/// Heat-trace normalisation: `a~ = Gamma(1 + d/2) a`, `b~ = Gamma(1 + (d-1)/2) b`.
pub fn heat_coefficients(c: &WeylCoefficients, dim: usize) -> HeatCoefficients {
    let ga = gamma_half(dim + 2);
    let gb = gamma_half(dim + 1);
    HeatCoefficients { a: ga * c.a, b_dir: gb * c.b_dir, b_free: gb * c.b_free }
}

/// The Dirichlet coefficient without the integral term. Known to be wrong;
/// kept for comparison with measured spectra.
pub fn liu_b_dir(m: &Material) -> f64 {
    let d = m.dim() as f64;
    -prefactor(m) * (m.alpha().powf((d - 1.0) / 2.0) + d - 1.0)
}

/// Both sides of the contour-integral identity behind the odd-dimensional
/// closed forms: `(lhs, rhs)` with the integral on the left.
pub fn oddform_identity_check(alpha: f64, k: usize, bc: Bc, tol: f64) -> Result<(f64, f64)> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let kf = k as f64;
    let p = kf + 1.0;
    match bc {
        Bc::Dir => {
            let lhs = 2.0 * kf / PI * t_integral(Bc::Dir, alpha, p, tol)?;
            let rhs = dir_series_coeff(alpha, k)? - (alpha / (alpha + 1.0)).powi(k as i32);
            Ok((lhs, rhs))
        }
        Bc::Free => {
            let lhs = 4.0 * kf / PI * t_integral(Bc::Free, alpha, p, tol)?;
            let g = gamma_r(alpha)?;
            let rhs = -8.0 * free_series_coeff(alpha, k)? + 2f64.powi(3 - k as i32) + 2.0 * (1.0 - alpha.powi(k as i32))
                - 4.0 * g.powi(-2 * k as i32);
            Ok((lhs, rhs))
        }
    }
}
