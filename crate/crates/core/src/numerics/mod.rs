//! Numerical kernels: quadrature, Bessel functions, power series, root scanning,
//! and a few exact special values.

pub mod bessel;
pub mod quad;
pub mod roots;
pub mod series;

pub use bessel::{bessel_j, bessel_j_all};
pub use quad::{quad, quad_split, Quad};
pub use roots::{scan_roots, Root, RootScan, RootTag};
pub use series::PowerSeries;

use std::f64::consts::PI;

/// `Gamma(n / 2)` for a positive integer `n`, by exact recurrence from
/// `Gamma(1) = 1` and `Gamma(1/2) = sqrt(pi)`.
pub fn gamma_half(n: usize) -> f64 {
    assert!(n > 0, "Gamma(0) is a pole");
    let (mut g, mut k) = if n % 2 == 0 { (1.0, 2) } else { (PI.sqrt(), 1) };
    while k < n {
        g *= k as f64 / 2.0;
        k += 2;
    }
    g
}

/// Surface area of the unit sphere `S^{m}` in `R^{m+1}`; `S^0` has two points.
pub fn sphere_area(m: usize) -> f64 {
    2.0 * PI.powf((m + 1) as f64 / 2.0) / gamma_half(m + 1)
}

/// `n!` as a float.
pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_at_half_integers() {
        assert_eq!(gamma_half(2), 1.0);
        assert_eq!(gamma_half(4), 1.0);
        assert_eq!(gamma_half(6), 2.0);
        assert!((gamma_half(1) - PI.sqrt()).abs() < 1e-15);
        assert!((gamma_half(3) - PI.sqrt() / 2.0).abs() < 1e-15);
        assert!((gamma_half(5) - 0.75 * PI.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn sphere_areas() {
        assert_eq!(sphere_area(0), 2.0);
        assert!((sphere_area(1) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_area(2) - 4.0 * PI).abs() < 1e-14);
        assert!((sphere_area(3) - 2.0 * PI * PI).abs() < 1e-13);
    }
}
