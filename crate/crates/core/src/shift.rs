//! Spectral shift functions of the half-space problems, their components, the
//! scattering phases they are built from, and the boundary coefficient
//! recovered by integrating the shift over the boundary phase space.
//!
//! Everything is evaluated at `|xi'| = 1` and rescaled by homogeneity:
//! `shift(xi', Lambda) = shift(1, Lambda / |xi'|^2)`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::material::{Bc, Material};
use crate::numerics::{quad_split, sphere_area};
use crate::rayleigh::rayleigh_w1;

/// A shift value together with a flag telling whether `Lambda` sat exactly on
/// a breakpoint, in which case the limit from above was returned.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftValue {
    pub value: f64,
    pub at_breakpoint: bool,
}

/// Piecewise description of `Lambda -> shift(xi', Lambda)` for fixed `xi'`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShiftProfile {
    pub material: Material,
    pub bc: Bc,
    pub xi: f64,
    /// Ascending: `mu gamma_R^2 xi^2` (free only), `mu xi^2`, `(lambda + 2 mu) xi^2`.
    pub breakpoints: Vec<f64>,
    /// Value on each of the `breakpoints.len() + 1` pieces where it is constant,
    /// `None` on the window between `mu xi^2` and `(lambda + 2 mu) xi^2`.
    pub plateaus: Vec<Option<f64>>,
}

impl ShiftProfile {
    pub fn new(m: &Material, bc: Bc, xi: f64) -> Result<Self> {
        check_xi(xi)?;
        let d = m.dim() as f64;
        let x2 = xi * xi;
        let (breakpoints, plateaus) = match bc {
            Bc::Dir => (vec![m.mu() * x2, m.p_modulus() * x2], vec![Some(0.0), None, Some(-d / 4.0)]),
            Bc::Free => (
                vec![rayleigh_eigenvalue(m)? * x2, m.mu() * x2, m.p_modulus() * x2],
                vec![Some(0.0), Some(1.0), None, Some(d / 4.0)],
            ),
        };
        Ok(Self { material: *m, bc, xi, breakpoints, plateaus })
    }

    pub fn eval(&self, lambda: f64) -> Result<ShiftValue> {
        shift(&self.material, self.bc, self.xi, lambda)
    }
}

fn check_xi(xi: f64) -> Result<()> {
    if !(xi > 0.0) || !xi.is_finite() {
        return Err(Error::InvalidArgument(format!("|xi'| must be positive and finite, got {xi}")));
    }
    Ok(())
}

/// `Lambda_R = mu gamma_R^2`, the bound state of the free plane problem at `|xi'| = 1`.
pub fn rayleigh_eigenvalue(m: &Material) -> Result<f64> {
    Ok(m.mu() * rayleigh_w1(m.alpha())?)
}

/// Radicand `(1 - L/(lambda+2mu)) (L/mu - 1)`, clamped at zero.
fn radical(m: &Material, l: f64) -> f64 {
    ((1.0 - l / m.p_modulus()) * (l / m.mu() - 1.0)).max(0.0).sqrt()
}

/// The arctangent appearing on the window `[mu, lambda + 2 mu]`, valid on the closed window.
fn window_arctan(m: &Material, bc: Bc, l: f64) -> f64 {
    let r = radical(m, l);
    match bc {
        Bc::Dir => r.atan(),
        Bc::Free => {
            let q = l / m.mu() - 2.0;
            (q * q).atan2(4.0 * r)
        }
    }
}

pub fn shift_dir(m: &Material, xi: f64, lambda: f64) -> Result<ShiftValue> {
    shift(m, Bc::Dir, xi, lambda)
}

pub fn shift_free(m: &Material, xi: f64, lambda: f64) -> Result<ShiftValue> {
    shift(m, Bc::Free, xi, lambda)
}

/// `shift(xi', Lambda)` with `xi = |xi'|`.
pub fn shift(m: &Material, bc: Bc, xi: f64, lambda: f64) -> Result<ShiftValue> {
    check_xi(xi)?;
    if !lambda.is_finite() {
        return Err(Error::InvalidArgument(format!("Lambda must be finite, got {lambda}")));
    }
    let l = lambda / (xi * xi);
    let (perp, plane, at_breakpoint) = components_flagged(m, bc, l)?;
    Ok(ShiftValue { value: perp + plane, at_breakpoint })
}

/// `(perp, plane)` addends of the shift at `|xi'| = 1`.
pub fn shift_components(m: &Material, bc: Bc, lambda: f64) -> Result<(f64, f64)> {
    let (p, q, _) = components_flagged(m, bc, lambda)?;
    Ok((p, q))
}

fn components_flagged(m: &Material, bc: Bc, l: f64) -> Result<(f64, f64, bool)> {
    let d = m.dim() as f64;
    let (mu, p) = (m.mu(), m.p_modulus());
    let mut at_bp = l == mu || l == p;
    let perp_mag = (d - 2.0) / 4.0;
    let out = match bc {
        Bc::Dir => {
            let perp = if l >= mu { -perp_mag } else { 0.0 };
            let plane = if l < mu {
                0.0
            } else if l < p {
                -window_arctan(m, bc, l) / PI - 0.25
            } else {
                -0.5
            };
            (perp, plane)
        }
        Bc::Free => {
            let lr = rayleigh_eigenvalue(m)?;
            at_bp |= l == lr;
            let perp = if l >= mu { perp_mag } else { 0.0 };
            let plane = if l < lr {
                0.0
            } else if l < mu {
                1.0
            } else if l < p {
                window_arctan(m, bc, l) / PI + 0.25
            } else {
                0.5
            };
            (perp, plane)
        }
    };
    Ok((out.0, out.1, at_bp))
}

/// `arg det S` of the plane problem at `|xi'| = 1`, on `(mu, lambda + 2 mu)`
/// and above `lambda + 2 mu`.
pub fn scattering_phase(m: &Material, bc: Bc, lambda: f64) -> Result<f64> {
    if !(lambda > m.mu()) {
        return Err(Error::Range(format!(
            "Lambda = {lambda} is not in the continuous spectrum (> {})",
            m.mu()
        )));
    }
    Ok(plane_phase(m, bc, lambda))
}

fn plane_phase(m: &Material, bc: Bc, l: f64) -> f64 {
    if l >= m.p_modulus() {
        return 0.0;
    }
    match bc {
        Bc::Dir => -2.0 * window_arctan(m, bc, l),
        Bc::Free => 2.0 * window_arctan(m, bc, l),
    }
}

/// `arg det S` of the problem for the components orthogonal to the plane
/// spanned by the normal and `xi'`.
pub fn perp_scattering_phase(m: &Material, bc: Bc, lambda: f64) -> Result<f64> {
    if !(lambda > m.mu()) {
        return Err(Error::Range(format!(
            "Lambda = {lambda} is not in the continuous spectrum (> {})",
            m.mu()
        )));
    }
    Ok(perp_phase(m, bc))
}

fn perp_phase(m: &Material, bc: Bc) -> f64 {
    match bc {
        Bc::Dir if m.dim() % 2 == 1 => PI,
        _ => 0.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThresholdKind {
    Rigid,
    Soft,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Threshold {
    pub lambda: f64,
    /// Increase in the number of open channels across the threshold.
    pub channels: usize,
    pub kind: ThresholdKind,
}

impl Threshold {
    /// Jump of the shift across the threshold: `-m/4` if rigid, `+m/4` if soft.
    pub fn shift_jump(&self) -> f64 {
        let s = self.channels as f64 / 4.0;
        match self.kind {
            ThresholdKind::Rigid => -s,
            ThresholdKind::Soft => s,
        }
    }
}

/// Thresholds, bound states and phases of the one-dimensional problems at `|xi'| = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatteringData {
    pub bc: Bc,
    pub plane_thresholds: [Threshold; 2],
    /// Absent in dimension two.
    pub perp_threshold: Option<Threshold>,
    pub plane_bound_states: Vec<f64>,
}

pub fn scattering_data(m: &Material, bc: Bc) -> Result<ScatteringData> {
    let second = match bc {
        Bc::Free if m.lambda() == 0.0 => ThresholdKind::Soft,
        _ => ThresholdKind::Rigid,
    };
    let perp_kind = match bc {
        Bc::Dir => ThresholdKind::Rigid,
        Bc::Free => ThresholdKind::Soft,
    };
    let bound = match bc {
        Bc::Dir => vec![],
        Bc::Free => vec![rayleigh_eigenvalue(m)?],
    };
    Ok(ScatteringData {
        bc,
        plane_thresholds: [
            Threshold { lambda: m.mu(), channels: 1, kind: ThresholdKind::Rigid },
            Threshold { lambda: m.p_modulus(), channels: 1, kind: second },
        ],
        perp_threshold: (m.dim() > 2).then_some(Threshold {
            lambda: m.mu(),
            channels: m.dim() - 2,
            kind: perp_kind,
        }),
        plane_bound_states: bound,
    })
}

/// One-sided limits `(below, above)` of the plane phase at a threshold.
/// Below the continuous spectrum the phase is taken to be zero.
pub fn plane_phase_limits(m: &Material, bc: Bc, threshold: f64) -> (f64, f64) {
    let (mu, p) = (m.mu(), m.p_modulus());
    if threshold == mu {
        (0.0, plane_phase(m, bc, mu))
    } else if threshold == p {
        let below = match bc {
            Bc::Dir => -2.0 * window_arctan(m, bc, p),
            Bc::Free => 2.0 * window_arctan(m, bc, p),
        };
        (below, 0.0)
    } else {
        let v = plane_phase(m, bc, threshold);
        (v, v)
    }
}

/// Shift at `|xi'| = 1` rebuilt from the phases, the bound states and the
/// rigid/soft jump rule alone: between thresholds
/// `shift = arg det S / (2 pi) + #{bound states < Lambda} + const`, and the
/// constant changes at each threshold so that the shift jumps by `-m/4`
/// (rigid) or `+m/4` (soft).
pub fn shift_from_phase(m: &Material, bc: Bc, lambda: f64) -> Result<f64> {
    let data = scattering_data(m, bc)?;
    let mut plane_const = 0.0;
    for t in &data.plane_thresholds {
        if lambda >= t.lambda {
            let (below, above) = plane_phase_limits(m, bc, t.lambda);
            plane_const += t.shift_jump() - (above - below) / (2.0 * PI);
        }
    }
    let count = data.plane_bound_states.iter().filter(|&&e| e < lambda).count() as f64;
    let phase = if lambda >= m.mu() { plane_phase(m, bc, lambda) } else { 0.0 };
    let plane = phase / (2.0 * PI) + count + plane_const;

    let perp = match data.perp_threshold {
        Some(t) if lambda >= t.lambda => {
            let phi = perp_phase(m, bc);
            phi / (2.0 * PI) + (t.shift_jump() - phi / (2.0 * PI))
        }
        _ => 0.0,
    };
    Ok(perp + plane)
}

/// `b = Area(S^{d-2}) / (2 pi)^{d-1} integral_0^inf shift(r, 1) r^{d-2} dr`.
pub fn b_from_shift(m: &Material, bc: Bc, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let d = m.dim();
    let factor = sphere_area(d - 2) / (2.0 * PI).powi(d as i32 - 1);
    // shift(r, 1) = shift(1, 1/r^2); breakpoints in r
    let r_p = 1.0 / m.p_modulus().sqrt();
    let r_s = 1.0 / m.mu().sqrt();
    let r_top = match bc {
        Bc::Dir => r_s,
        Bc::Free => 1.0 / rayleigh_eigenvalue(m)?.sqrt(),
    };
    let mut breaks = vec![r_p, r_s];
    if bc == Bc::Free && m.lambda() > 0.0 {
        breaks.push(1.0 / (2.0 * m.mu()).sqrt());
    }
    let f = |r: f64| {
        let (p, q, _) = components_flagged(m, bc, 1.0 / (r * r)).expect("material already validated");
        (p + q) * r.powi(d as i32 - 2)
    };
    let q = quad_split(f, 0.0, r_top, &breaks, tol / factor)?;
    Ok(factor * q.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{b_dir_quadrature, b_free_quadrature};

    fn m3() -> Material {
        Material::new(2.0, 1.0, 3).unwrap()
    }

    #[test]
    fn dirichlet_examples() {
        let m = m3();
        assert_eq!(shift_dir(&m, 1.0, 5.0).unwrap().value, -0.75);
        assert_eq!(shift_dir(&m, 1.0, 0.5).unwrap().value, 0.0);
        let v = shift_dir(&m, 1.0, 2.0).unwrap().value;
        let oracle = -0.5 - (0.5f64).sqrt().atan() / PI;
        assert!((v - oracle).abs() < 1e-15);
        assert!((v + 0.695913).abs() < 1e-6);
    }

    #[test]
    fn free_examples() {
        let m = m3();
        assert_eq!(shift_free(&m, 1.0, 0.9).unwrap().value, 1.0);
        assert_eq!(shift_free(&m, 1.0, 5.0).unwrap().value, 0.75);
        assert_eq!(shift_free(&m, 1.0, 0.5).unwrap().value, 0.0);
    }

    #[test]
    fn breakpoint_flag_and_right_limit() {
        let m = m3();
        let v = shift_dir(&m, 1.0, 1.0).unwrap();
        assert!(v.at_breakpoint);
        assert_eq!(v.value, -0.5);
        let v = shift_dir(&m, 1.0, 4.0).unwrap();
        assert!(v.at_breakpoint);
        assert_eq!(v.value, -0.75);
        assert!(!shift_dir(&m, 1.0, 2.0).unwrap().at_breakpoint);
        let lr = rayleigh_eigenvalue(&m).unwrap();
        let v = shift_free(&m, 1.0, lr).unwrap();
        assert!(v.at_breakpoint);
        assert_eq!(v.value, 1.0);
    }

    #[test]
    fn component_examples() {
        let m = Material::new(2.0, 1.0, 4).unwrap();
        assert_eq!(shift_components(&m, Bc::Dir, 2.0).unwrap().0, -0.5);
        assert_eq!(shift_components(&m, Bc::Free, 2.0).unwrap().0, 0.5);
        for d in 2..6 {
            let m = Material::new(2.0, 1.0, d).unwrap();
            assert_eq!(shift_components(&m, Bc::Dir, 4.5).unwrap().1, -0.5);
        }
    }

    #[test]
    fn phase_examples() {
        let m = m3();
        assert_eq!(scattering_phase(&m, Bc::Dir, 4.5).unwrap(), 0.0);
        assert_eq!(scattering_phase(&m, Bc::Free, 2.0).unwrap(), 0.0);
        let v = scattering_phase(&m, Bc::Dir, 2.0).unwrap();
        assert!((v + 1.23096).abs() < 1e-5);
        assert!(scattering_phase(&m, Bc::Dir, 0.5).is_err());
        assert!(scattering_phase(&m, Bc::Free, 1.0).is_err());
    }

    #[test]
    fn rayleigh_eigenvalue_examples() {
        let m = m3();
        let l = rayleigh_eigenvalue(&m).unwrap();
        assert!((l - 0.86960).abs() < 1e-5);
        let m4 = Material::new(8.0, 4.0, 3).unwrap();
        assert!((rayleigh_eigenvalue(&m4).unwrap() - 4.0 * l).abs() < 1e-13);
        for i in 1..20 {
            let m = Material::from_alpha(0.05 * i as f64, 1.0, 3).unwrap();
            assert!(rayleigh_eigenvalue(&m).unwrap() < m.mu());
        }
    }

    #[test]
    fn free_phase_jump_at_second_threshold() {
        let m = Material::new(2.0, 1.0, 2).unwrap();
        let (b, a) = plane_phase_limits(&m, Bc::Free, m.p_modulus());
        assert!(((a - b) / PI + 1.0).abs() < 1e-15);
        let m = Material::new(0.0, 1.0, 2).unwrap();
        let (b, a) = plane_phase_limits(&m, Bc::Free, m.p_modulus());
        assert_eq!((a - b) / PI, 0.0);
        assert_eq!(scattering_data(&m, Bc::Free).unwrap().plane_thresholds[1].kind, ThresholdKind::Soft);
    }

    #[test]
    fn phase_reconstruction_matches_closed_form() {
        for &(l, mu) in &[(2.0, 1.0), (0.0, 1.0), (7.0, 2.0), (-0.3, 1.0)] {
            for d in 2..6 {
                let m = Material::extended(l, mu, d).unwrap();
                for bc in [Bc::Dir, Bc::Free] {
                    for i in 1..400 {
                        let lam = i as f64 * 0.025 * m.p_modulus();
                        let closed = shift(&m, bc, 1.0, lam).unwrap().value;
                        let rebuilt = shift_from_phase(&m, bc, lam).unwrap();
                        assert!((closed - rebuilt).abs() < 1e-14, "{l} {mu} d={d} {bc} L={lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn b_from_shift_reference() {
        let m = m3();
        let bd = b_from_shift(&m, Bc::Dir, 1e-11).unwrap();
        let bf = b_from_shift(&m, Bc::Free, 1e-11).unwrap();
        assert!((bd + 0.0537154).abs() < 1e-6);
        assert!((bf - 0.0629989).abs() < 1e-6);
        assert!((bd - b_dir_quadrature(&m, 1e-12).unwrap()).abs() < 1e-9);
        assert!((bf - b_free_quadrature(&m, 1e-12).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn free_shift_has_compact_support() {
        let m = m3();
        let lr = rayleigh_eigenvalue(&m).unwrap();
        let r = 1.0 / lr.sqrt();
        assert_eq!(shift(&m, Bc::Free, r * 1.0001, 1.0).unwrap().value, 0.0);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn additivity_and_sign(l in -0.4f64..20.0, d in 2usize..7, lam in 0.0f64..30.0) {
            let m = Material::extended(l, 1.0, d).unwrap();
            for bc in [Bc::Dir, Bc::Free] {
                let (p, q) = shift_components(&m, bc, lam).unwrap();
                let s = shift(&m, bc, 1.0, lam).unwrap().value;
                prop_assert!((p + q - s).abs() < 1e-14);
                match bc {
                    Bc::Dir => prop_assert!(s <= 0.0),
                    Bc::Free => prop_assert!(s >= 0.0),
                }
            }
        }

        #[test]
        fn homogeneity(l in 0.0f64..10.0, lam in 0.01f64..20.0, s in prop::sample::select(vec![0.1, 1.0, 7.0])) {
            let m = Material::new(l, 1.0, 3).unwrap();
            for bc in [Bc::Dir, Bc::Free] {
                let a = shift(&m, bc, 1.0, lam).unwrap();
                let b = shift(&m, bc, s, s * s * lam).unwrap();
                // skip samples that land within rounding of a breakpoint
                let prof = ShiftProfile::new(&m, bc, 1.0).unwrap();
                if prof.breakpoints.iter().all(|&x| (x - lam).abs() > 1e-12 * x) {
                    prop_assert!((a.value - b.value).abs() < 1e-14);
                }
            }
        }
    }
}
