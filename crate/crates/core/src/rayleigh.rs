//! The Rayleigh cubic
//! `R_alpha(w) = w^3 - 8 w^2 + 8 (3 - 2 alpha) w + 16 (alpha - 1)`
//! and its distinguished root `w1 = gamma_R^2` in `(0, 1)`.

use std::sync::OnceLock;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Nature of the two roots other than `w1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootCase {
    ComplexPair,
    DoubleReal,
    DistinctReal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayleighRoots {
    pub alpha: f64,
    /// The real root in `(0, 1)`.
    pub w1: f64,
    /// For a complex pair `w2` has positive imaginary part; for real roots `w2 <= w3`.
    pub w2: Complex64,
    pub w3: Complex64,
    pub case: RootCase,
    /// `sqrt(w1)`, the Rayleigh wave speed in units of the shear speed.
    pub gamma_r: f64,
}

/// `R_alpha(w)` for real `w`.
pub fn rayleigh_cubic(alpha: f64, w: f64) -> f64 {
    ((w - 8.0) * w + 8.0 * (3.0 - 2.0 * alpha)) * w + 16.0 * (alpha - 1.0)
}

/// `R_alpha(w)` for complex `w`.
pub fn rayleigh_cubic_c(alpha: f64, w: Complex64) -> Complex64 {
    ((w - 8.0) * w + 8.0 * (3.0 - 2.0 * alpha)) * w + 16.0 * (alpha - 1.0)
}

/// The equivalent form `4 sqrt((1 - alpha w)(1 - w)) - (w - 2)^2`, for `w` in `[0, 1]`.
pub fn rayleigh_tilde(alpha: f64, w: f64) -> f64 {
    4.0 * ((1.0 - alpha * w) * (1.0 - w)).max(0.0).sqrt() - (w - 2.0) * (w - 2.0)
}

fn dcubic(alpha: f64, w: f64) -> f64 {
    (3.0 * w - 16.0) * w + 8.0 * (3.0 - 2.0 * alpha)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} lies outside (0, 1)")));
    }
    Ok(())
}

/// The real root of the cubic in `(0, 1)`.
pub fn rayleigh_w1(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    // R(0) = 16(alpha - 1) < 0 and R(1) = 1 > 0
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if rayleigh_cubic(alpha, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut w = 0.5 * (lo + hi);
    // one Newton polish, kept only if it stays inside the bracket
    let d = dcubic(alpha, w);
    if d != 0.0 {
        let wn = w - rayleigh_cubic(alpha, w) / d;
        if wn > lo && wn < hi {
            w = wn;
        }
    }
    Ok(w)
}

/// `gamma_R = sqrt(w1)`.
pub fn gamma_r(alpha: f64) -> Result<f64> {
    rayleigh_w1(alpha).map(f64::sqrt)
}

/// All three roots and their classification.
pub fn rayleigh_roots(alpha: f64) -> Result<RayleighRoots> {
    let w1 = rayleigh_w1(alpha)?;
    // deflate: R(w) = (w - w1)(w^2 + p w + q)
    let p = w1 - 8.0;
    let q = 8.0 * (3.0 - 2.0 * alpha) + w1 * p;
    let disc = p * p - 4.0 * q;
    let case = if disc.abs() <= 1e-12 * p * p {
        RootCase::DoubleReal
    } else if disc < 0.0 {
        RootCase::ComplexPair
    } else {
        RootCase::DistinctReal
    };
    let (w2, w3) = match case {
        RootCase::ComplexPair => {
            let im = 0.5 * (-disc).sqrt();
            (Complex64::new(-0.5 * p, im), Complex64::new(-0.5 * p, -im))
        }
        RootCase::DoubleReal => (Complex64::new(-0.5 * p, 0.0), Complex64::new(-0.5 * p, 0.0)),
        RootCase::DistinctReal => {
            // stable quadratic formula; p < 0 here
            let s = -0.5 * (p - disc.sqrt());
            let (a, b) = (s, q / s);
            (Complex64::new(a.min(b), 0.0), Complex64::new(a.max(b), 0.0))
        }
    };
    Ok(RayleighRoots { alpha, w1, w2, w3, case, gamma_r: w1.sqrt() })
}

/// The value of `alpha` in `(0, 1)` at which the two other roots coalesce:
/// the real root of `alpha^3 - 107/64 alpha^2 + 31/32 alpha - 11/64`.
pub fn alpha_star() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    *CELL.get_or_init(|| {
        let g = |a: f64| ((a - 107.0 / 64.0) * a + 31.0 / 32.0) * a - 11.0 / 64.0;
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if g(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    })
}
