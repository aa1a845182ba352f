//! Bessel functions of the first kind, integer order, real argument.
//!
//! Small arguments use the ascending series. Otherwise Miller's backward
//! recurrence is started well above `max(n, x)` and normalised with the
//! Neumann identity `J_0(x) + 2 sum_k J_{2k}(x) = 1`.

use crate::error::{Error, Result};

/// Largest argument accepted. Far beyond anything the spectra need.
pub const MAX_ARG: f64 = 1.0e5;

const SERIES_LIMIT: f64 = 1.0;
const RESCALE: f64 = 1.0e250;

/// `J_n(x)` for `n >= 0`, `x >= 0`.
pub fn bessel_j(n: usize, x: f64) -> Result<f64> {
    check_arg(x)?;
    if x <= SERIES_LIMIT {
        return Ok(series(n, x));
    }
    let all = miller(n, x);
    Ok(all[n])
}

/// `[J_0(x), ..., J_nmax(x)]` from a single recurrence sweep.
pub fn bessel_j_all(nmax: usize, x: f64) -> Result<Vec<f64>> {
    check_arg(x)?;
    if x <= SERIES_LIMIT {
        return Ok((0..=nmax).map(|n| series(n, x)).collect());
    }
    let mut v = miller(nmax, x);
    v.truncate(nmax + 1);
    Ok(v)
}

/// `x J_n'(x)` using `x J_n' = n J_n - x J_{n+1}`, from a precomputed table.
#[inline]
pub fn x_dj(table: &[f64], n: usize, x: f64) -> f64 {
    n as f64 * table[n] - x * table[n + 1]
}

fn check_arg(x: f64) -> Result<()> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Range(format!("Bessel argument must be finite and >= 0, got {x}")));
    }
    if x > MAX_ARG {
        return Err(Error::Range(format!("Bessel argument {x} exceeds {MAX_ARG}")));
    }
    Ok(())
}

fn series(n: usize, x: f64) -> f64 {
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * x;
    // (x/2)^n / n!, built incrementally so it underflows gracefully
    let mut lead = 1.0;
    for k in 1..=n {
        lead *= half / k as f64;
        if lead == 0.0 {
            return 0.0;
        }
    }
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..60 {
        term *= q / (j as f64 * (n + j) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

/// Backward recurrence returning `J_0..J_m` for some `m >= nmax`.
fn miller(nmax: usize, x: f64) -> Vec<f64> {
    let top = nmax.max(x.ceil() as usize);
    // start index: comfortably inside the region where J decays super-exponentially
    let mut start = top + 20 + (40.0 * top as f64).sqrt() as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let mut vals = vec![0.0; start + 2];
    let mut next = 0.0; // J_{k+1}
    let mut cur = 1.0e-300; // J_k
    vals[start] = cur;
    let mut k = start;
    while k > 0 {
        let prev = 2.0 * k as f64 / x * cur - next;
        next = cur;
        cur = prev;
        k -= 1;
        vals[k] = cur;
        if cur.abs() > RESCALE {
            let inv = 1.0 / RESCALE;
            for v in vals[k..].iter_mut() {
                *v *= inv;
            }
            cur *= inv;
            next *= inv;
        }
    }
    let mut norm = vals[0];
    for v in vals.iter().skip(2).step_by(2) {
        norm += 2.0 * v;
    }
    let inv = 1.0 / norm;
    for v in vals.iter_mut() {
        *v *= inv;
    }
    vals
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent ascending-series oracle with compensated summation.
    fn oracle(n: usize, x: f64) -> f64 {
        let half = x / 2.0;
        let (mut sum, mut comp) = (0.0f64, 0.0f64);
        let mut fact_j = 1.0f64;
        for j in 0..200usize {
            if j > 0 {
                fact_j *= j as f64;
            }
            let mut fact_nj = 1.0f64;
            for i in 1..=(n + j) {
                fact_nj *= i as f64;
            }
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let term = sign * half.powi((2 * j + n) as i32) / (fact_j * fact_nj);
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            if term.abs() < 1e-300 || (j > 10 && term.abs() < 1e-20 * sum.abs()) {
                break;
            }
        }
        sum
    }

    #[test]
    fn trivial_values() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(3, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn j2_at_one() {
        let v = bessel_j(2, 1.0).unwrap();
        assert!((v - 0.1149034849).abs() < 1e-10);
        assert!((v - oracle(2, 1.0)).abs() < 1e-15);
    }

    #[test]
    fn first_zero_of_j1() {
        assert!(bessel_j(1, 3.8317059702).unwrap().abs() < 1e-9);
    }

    #[test]
    fn matches_series_oracle_at_moderate_arguments() {
        for &n in &[0usize, 1, 2, 5, 10] {
            // the alternating oracle loses digits to cancellation beyond x ~ 8
            for &x in &[0.3, 1.5, 4.0, 6.5, 8.0] {
                let v = bessel_j(n, x).unwrap();
                let o = oracle(n, x);
                assert!((v - o).abs() < 1e-12, "n={n} x={x}: {v} vs {o}");
            }
        }
    }

    #[test]
    fn large_argument_asymptotics() {
        // J_0(x) ~ sqrt(2/(pi x)) cos(x - pi/4) up to O(1/x)
        let x = 2000.0;
        let v = bessel_j(0, x).unwrap();
        let asym = (2.0 / (std::f64::consts::PI * x)).sqrt()
            * ((x - std::f64::consts::FRAC_PI_4).cos() + (x - std::f64::consts::FRAC_PI_4).sin() / (8.0 * x));
        assert!((v - asym).abs() < 1e-7);
    }

    #[test]
    fn recurrence_residual() {
        for &x in &[0.5, 1.0, 3.3, 10.0, 47.0, 120.0] {
            let t = bessel_j_all(60, x).unwrap();
            for n in 1..59 {
                let r = t[n - 1] + t[n + 1] - 2.0 * n as f64 / x * t[n];
                assert!(r.abs() < 1e-9, "x={x} n={n} residual {r}");
            }
        }
    }

    #[test]
    fn neumann_normalisation() {
        for &x in &[1.0, 5.0, 20.0] {
            let t = bessel_j_all(80, x).unwrap();
            let s: f64 = t[0] + 2.0 * t.iter().skip(2).step_by(2).sum::<f64>();
            assert!((s - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn table_agrees_with_single_order() {
        let t = bessel_j_all(30, 17.5).unwrap();
        for n in 0..=30 {
            assert!((t[n] - bessel_j(n, 17.5).unwrap()).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(bessel_j(0, -1.0).is_err());
        assert!(bessel_j(0, f64::NAN).is_err());
        assert!(bessel_j(0, 1e7).is_err());
    }
}
