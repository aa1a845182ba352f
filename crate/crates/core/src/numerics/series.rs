//! Truncated power series at `t = 0`.
//!
//! A `PowerSeries` of length `n` carries the Taylor coefficients `c_0..c_{n-1}`.
//! All operations keep the length of their inputs; coefficient `k` of a result
//! depends only on coefficients `0..=k` of the operands, so it is exact up to
//! rounding.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<f64>,
}

impl PowerSeries {
    /// Polynomial `p[0] + p[1] t + ...` truncated (or zero padded) to `len` terms.
    pub fn from_poly(p: &[f64], len: usize) -> Self {
        let mut coeffs = vec![0.0; len];
        for (c, &v) in coeffs.iter_mut().zip(p) {
            *c = v;
        }
        Self { coeffs }
    }

    pub fn constant(c: f64, len: usize) -> Self {
        Self::from_poly(&[c], len)
    }

    /// The series of `t` itself.
    pub fn variable(len: usize) -> Self {
        Self::from_poly(&[0.0, 1.0], len)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, i.e. `f^(k)(0) / k!`.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// `f(c t)`.
    pub fn compose_linear(&self, c: f64) -> Self {
        let mut p = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&v| {
                let r = v * p;
                p *= c;
                r
            })
            .collect();
        Self { coeffs }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::constant(1.0, self.len()).try_div(self)
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        check_len(self, rhs)?;
        let b0 = rhs.coeff(0);
        if b0 == 0.0 {
            return Err(Error::Series("division by a series with zero constant term".into()));
        }
        let n = self.len();
        let mut q = vec![0.0; n];
        for k in 0..n {
            let mut s = self.coeffs[k];
            for j in 1..=k {
                s -= rhs.coeffs[j] * q[k - j];
            }
            q[k] = s / b0;
        }
        Ok(Self { coeffs: q })
    }

    /// Principal square root; requires a positive constant term.
    pub fn sqrt(&self) -> Result<Self> {
        let a0 = self.coeff(0);
        if !(a0 > 0.0) {
            return Err(Error::Series(format!(
                "square root needs a positive constant term, got {a0}"
            )));
        }
        let n = self.len();
        let mut r = vec![0.0; n];
        r[0] = a0.sqrt();
        for k in 1..n {
            let mut s = self.coeffs[k];
            for j in 1..k {
                s -= r[j] * r[k - j];
            }
            r[k] = s / (2.0 * r[0]);
        }
        Ok(Self { coeffs: r })
    }
}

fn check_len(a: &PowerSeries, b: &PowerSeries) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::Series(format!("length mismatch: {} vs {}", a.len(), b.len())));
    }
    Ok(())
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        assert_eq!(self.len(), rhs.len(), "series length mismatch");
        PowerSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        assert_eq!(self.len(), rhs.len(), "series length mismatch");
        PowerSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        assert_eq!(self.len(), rhs.len(), "series length mismatch");
        let n = self.len();
        let mut c = vec![0.0; n];
        for i in 0..n {
            if self.coeffs[i] == 0.0 {
                continue;
            }
            for j in 0..n - i {
                c[i + j] += self.coeffs[i] * rhs.coeffs[j];
            }
        }
        PowerSeries { coeffs: c }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(-1.0)
    }
}
