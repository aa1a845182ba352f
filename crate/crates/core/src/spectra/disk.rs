//! The unit disk. Displacements `grad phi + curl(z psi)` with
//! `phi = J_k(a r) e^{ik theta}`, `psi = J_k(b r) e^{ik theta}`, where
//! `a^2 = Lambda / (lambda + 2 mu)` and `b^2 = Lambda / mu`. The boundary
//! condition at `r = 1` gives a 2x2 determinant in each angular order `k`.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::{resolve_roots, CountingFunction, Eigenvalue, Geometry, ScanOptions};
use crate::error::{Error, Result};
use crate::material::{Bc, Material};
use crate::numerics::bessel::{bessel_j_all, MAX_ARG};
use crate::numerics::scan_roots;
use crate::rayleigh::gamma_r;

/// One separated problem. For `k = 0` the determinant factorises and each
/// factor is scanned on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskBranch {
    /// Dirichlet `J_1(a)`, or the free radial factor `b^2 J_0(a) - 2 a J_1(a)`.
    ZeroA,
    /// Dirichlet `J_1(b)`, or the free torsional factor `J_2(b)`.
    ZeroB,
    /// Angular order `k >= 1`, multiplicity two.
    Order(usize),
}

impl DiskBranch {
    pub fn label(&self, bc: Bc) -> String {
        match (self, bc) {
            (DiskBranch::ZeroA, Bc::Dir) => "k=0:a".into(),
            (DiskBranch::ZeroB, Bc::Dir) => "k=0:b".into(),
            (DiskBranch::ZeroA, Bc::Free) => "k=0:radial".into(),
            (DiskBranch::ZeroB, Bc::Free) => "k=0:torsional".into(),
            (DiskBranch::Order(k), _) => format!("k={k}"),
        }
    }

    fn multiplicity(&self) -> u32 {
        match self {
            DiskBranch::Order(_) => 2,
            _ => 1,
        }
    }
}

fn frequencies(m: &Material, lambda: f64) -> (f64, f64) {
    ((lambda / m.p_modulus()).sqrt(), (lambda / m.mu()).sqrt())
}

fn table(n: usize, x: f64) -> Vec<f64> {
    bessel_j_all(n, x).expect("argument range checked before scanning")
}

/// Entries `[[m11, m12], [m21, m22]]` of the boundary matrix in order `k`.
fn matrix(bc: Bc, k: usize, a: f64, b: f64) -> [f64; 4] {
    let ja = table(k + 1, a);
    let jb = table(k + 1, b);
    let kf = k as f64;
    // x J_k'(x) = k J_k(x) - x J_{k+1}(x)
    let (ja_k, jb_k) = (ja[k], jb[k]);
    let daj = kf * ja_k - a * ja[k + 1];
    let dbj = kf * jb_k - b * jb[k + 1];
    match bc {
        Bc::Dir => [daj, kf * jb_k, kf * ja_k, dbj],
        Bc::Free => [
            (2.0 * kf * kf - b * b) * ja_k - 2.0 * daj,
            -2.0 * kf * (dbj - jb_k),
            2.0 * kf * (daj - ja_k),
            2.0 * dbj + (b * b - 2.0 * kf * kf) * jb_k,
        ],
    }
}

/// Secular function of order `k` at `Lambda > 0`. Dirichlet:
/// `J_1(a) J_1(b)` for `k = 0`, else `a b J_k'(a) J_k'(b) - k^2 J_k(a) J_k(b)`.
/// Free: the determinant of the traction matrix (divided by `mu^2`).
pub fn disk_secular(m: &Material, bc: Bc, k: usize, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::InvalidArgument(format!("Lambda must be positive, got {lambda}")));
    }
    let (a, b) = frequencies(m, lambda);
    if b > MAX_ARG {
        return Err(Error::Range(format!("Lambda = {lambda} too large for the Bessel kernels")));
    }
    let e = matrix(bc, k, a, b);
    Ok(match (bc, k) {
        (Bc::Dir, 0) => table(1, a)[1] * table(1, b)[1],
        _ => e[0] * e[3] - e[1] * e[2],
    })
}

/// Branch function of `s = sqrt(Lambda)`, scaled by a positive factor so its
/// magnitude stays of order one.
pub fn branch_value(m: &Material, bc: Bc, branch: DiskBranch, s: f64) -> f64 {
    let (a, b) = frequencies(m, s * s);
    match (branch, bc) {
        (DiskBranch::ZeroA, Bc::Dir) => {
            let j = table(1, a);
            j[1] / j[0].hypot(j[1])
        }
        (DiskBranch::ZeroB, Bc::Dir) => {
            let j = table(1, b);
            j[1] / j[0].hypot(j[1])
        }
        (DiskBranch::ZeroA, Bc::Free) => {
            let j = table(1, a);
            let (u, v) = (b * b * j[0], 2.0 * a * j[1]);
            (u - v) / u.hypot(v)
        }
        (DiskBranch::ZeroB, Bc::Free) => {
            let j = table(2, b);
            j[2] / j[1].hypot(j[2])
        }
        (DiskBranch::Order(k), _) => {
            let e = matrix(bc, k, a, b);
            let det = e[0] * e[3] - e[1] * e[2];
            // each column belongs to one potential; dividing by the column
            // norms leaves the sine of the angle between them
            det / (e[0].hypot(e[2]) * e[1].hypot(e[3]) + 1e-300)
        }
    }
}

/// Lowest `s` at which a branch can have a root.
fn branch_start(m: &Material, bc: Bc, branch: DiskBranch, gamma: f64) -> f64 {
    let floor = 1e-3 * m.mu().sqrt();
    let b_lo = match (branch, bc) {
        // Dirichlet order-k eigenvalues exceed mu j_{k-1,1}^2 > mu (k-1)^2
        (DiskBranch::Order(k), Bc::Dir) => k.saturating_sub(1) as f64,
        // whispering-gallery modes sit near b = gamma_R k; half of that is a safe floor
        (DiskBranch::Order(k), Bc::Free) if k >= 2 => 0.5 * gamma * k as f64,
        _ => 0.0,
    };
    (b_lo * m.mu().sqrt()).max(floor)
}

fn scan_branch(
    m: &Material,
    bc: Bc,
    branch: DiskBranch,
    s_max: f64,
    gamma: f64,
    opts: &ScanOptions,
) -> (Vec<Eigenvalue>, Vec<String>) {
    let start = branch_start(m, bc, branch, gamma);
    let mut notes = Vec::new();
    if start >= s_max {
        return (vec![], notes);
    }
    // roots in b are spaced by about pi / (1 + sqrt(alpha))
    let step = opts.step_fraction * PI * m.mu().sqrt() / (1.0 + m.alpha().sqrt());
    let f = |s: f64| branch_value(m, bc, branch, s);
    let scan = scan_roots(f, start, s_max, step, opts.residual_tol);
    let label = branch.label(bc);
    let found = resolve_roots(&scan.roots, f, |s| s * s, &label, branch.multiplicity(), &mut notes);
    (found, notes)
}

pub fn disk_spectrum(m: &Material, bc: Bc, lambda_max: f64) -> Result<CountingFunction> {
    disk_spectrum_with(m, bc, lambda_max, &ScanOptions::default())
}

/// All eigenvalues of the unit disk up to `lambda_max`.
pub fn disk_spectrum_with(m: &Material, bc: Bc, lambda_max: f64, opts: &ScanOptions) -> Result<CountingFunction> {
    opts.validate()?;
    if m.dim() != 2 {
        return Err(Error::InvalidArgument(format!("the disk is two-dimensional, material has d = {}", m.dim())));
    }
    if !(lambda_max > 0.0) || !lambda_max.is_finite() {
        return Err(Error::InvalidArgument(format!("lambda_max must be positive, got {lambda_max}")));
    }
    let s_max = lambda_max.sqrt();
    let b_max = s_max / m.mu().sqrt();
    if b_max > 0.5 * MAX_ARG {
        return Err(Error::Range(format!("lambda_max = {lambda_max} too large for the Bessel kernels")));
    }
    let gamma = gamma_r(m.alpha())?;
    let k_top = match bc {
        Bc::Dir => b_max.floor() as usize + 1,
        Bc::Free => (2.0 * b_max / gamma).ceil() as usize + 2,
    };
    let mut branches = vec![DiskBranch::ZeroA, DiskBranch::ZeroB];
    branches.extend((1..=k_top + 2).map(DiskBranch::Order));

    let results: Vec<(Vec<Eigenvalue>, Vec<String>)> = branches
        .par_iter()
        .map(|&br| scan_branch(m, bc, br, s_max, gamma, opts))
        .collect();

    let mut notes = Vec::new();
    let n = results.len();
    if results[n - 1].0.iter().chain(&results[n - 2].0).next().is_some() {
        return Err(Error::ScanBudget {
            branch: format!("k={}", k_top + 2),
            detail: "the last two angular orders scanned are not empty".into(),
        });
    }
    let mut entries = Vec::new();
    if bc == Bc::Free {
        entries.push(Eigenvalue { lambda: 0.0, multiplicity: 1, branch: "k=0:rigid".into() });
        entries.push(Eigenvalue { lambda: 0.0, multiplicity: 2, branch: "k=1:rigid".into() });
    }
    for (found, nt) in results {
        entries.extend(found.into_iter().filter(|e| e.lambda <= lambda_max));
        notes.extend(nt);
    }
    Ok(CountingFunction::new(Geometry::Disk, bc, lambda_max, entries, notes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::bessel_j;

    fn bessel_zeros(n: usize, count: usize) -> Vec<f64> {
        // oracle: bisection on a fine grid of J_n
        let mut out = Vec::new();
        let mut x = 0.5;
        let h = 0.01;
        while out.len() < count {
            let (f0, f1) = (bessel_j(n, x).unwrap(), bessel_j(n, x + h).unwrap());
            if f0 * f1 < 0.0 {
                let (mut lo, mut hi) = (x, x + h);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if bessel_j(n, lo).unwrap() * bessel_j(n, mid).unwrap() <= 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                out.push(0.5 * (lo + hi));
            }
            x += h;
        }
        out
    }

    #[test]
    fn first_j1_zero_squared() {
        let f = |l: f64| bessel_j(1, l.sqrt()).unwrap();
        let s = scan_roots(f, 0.1, 20.0, 0.05, 1e-12);
        assert_eq!(s.roots.len(), 1);
        assert!((s.roots[0].x - 14.682).abs() < 1e-3);
        assert!((s.roots[0].x - 3.8317059702f64.powi(2)).abs() < 1e-8);
    }

    #[test]
    fn dirichlet_k0_roots_are_bessel_zeros() {
        let m = Material::new(2.0, 1.0, 2).unwrap();
        let c = disk_spectrum(&m, Bc::Dir, 300.0).unwrap();
        let zeros = bessel_zeros(1, 8);
        let k0: Vec<f64> =
            c.entries.iter().filter(|e| e.branch.starts_with("k=0")).map(|e| e.lambda).collect();
        let mut expected: Vec<f64> = zeros
            .iter()
            .flat_map(|j| [j * j * m.mu(), j * j * m.p_modulus()])
            .filter(|&l| l <= 300.0)
            .collect();
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(k0.len(), expected.len());
        for (x, y) in k0.iter().zip(&expected) {
            assert!((x - y).abs() < 1e-9 * y, "{x} vs {y}");
        }
        let j11 = zeros[0] * zeros[0];
        assert!(disk_secular(&m, Bc::Dir, 0, j11 * m.p_modulus()).unwrap().abs() < 1e-10);
    }

    #[test]
    fn dirichlet_spectrum_positive() {
        let m = Material::new(2.0, 1.0, 2).unwrap();
        let c = disk_spectrum(&m, Bc::Dir, 100.0).unwrap();
        assert_eq!(c.count(1e-9), 0);
        assert!(c.entries.iter().all(|e| e.lambda > 0.0));
        // first eigenvalue lies below j_{1,1}^2 since k >= 1 branches go lower
        assert!(c.entries[0].lambda < 14.682);
    }

    #[test]
    fn free_zero_modes_and_positivity() {
        let m = Material::new(2.0, 1.0, 2).unwrap();
        let c = disk_spectrum(&m, Bc::Free, 50.0).unwrap();
        assert_eq!(c.entries[0].lambda, 0.0);
        assert_eq!(c.entries[0].multiplicity, 3);
        assert_eq!(c.count(0.0), 0);
        assert_eq!(c.count(1e-6), 3);
        assert!(c.entries[1].lambda > 1e-3);
    }

    #[test]
    fn free_torsional_branch_is_j2() {
        let m = Material::new(2.0, 1.0, 2).unwrap();
        let c = disk_spectrum(&m, Bc::Free, 200.0).unwrap();
        let tors: Vec<f64> =
            c.entries.iter().filter(|e| e.branch.contains("k=0:torsional")).map(|e| e.lambda).collect();
        let zeros = bessel_zeros(2, 3);
        for (x, j) in tors.iter().zip(&zeros) {
            assert!((x - j * j).abs() < 1e-9 * x);
        }
    }

    #[test]
    fn late_branch_start_loses_nothing() {
        let m = Material::new(2.0, 1.0, 2).unwrap();
        let g = gamma_r(m.alpha()).unwrap();
        let opts = ScanOptions::default();
        for bc in [Bc::Dir, Bc::Free] {
            for k in 2..30 {
                let br = DiskBranch::Order(k);
                let (found, _) = scan_branch(&m, bc, br, 60.0, g, &opts);
                // oracle: the same branch scanned from near zero
                let f = |s: f64| branch_value(&m, bc, br, s);
                let full = scan_roots(f, 1e-3, 60.0, 0.01, opts.residual_tol);
                assert_eq!(found.len(), full.roots.len(), "{bc} k={k}");
                for (e, r) in found.iter().zip(&full.roots) {
                    assert!((e.lambda - r.x * r.x).abs() < 1e-9 * e.lambda);
                }
            }
        }
    }

    #[test]
    fn finer_grid_finds_the_same_roots() {
        let m = Material::new(2.0, 1.0, 2).unwrap();
        for bc in [Bc::Dir, Bc::Free] {
            let a = disk_spectrum(&m, bc, 400.0).unwrap();
            let fine = ScanOptions { step_fraction: 0.03, ..ScanOptions::default() };
            let b = disk_spectrum_with(&m, bc, 400.0, &fine).unwrap();
            assert_eq!(a.total(), b.total(), "{bc}");
            for (x, y) in a.entries.iter().zip(&b.entries) {
                assert!((x.lambda - y.lambda).abs() <= 1e-9 * x.lambda.max(1.0));
            }
        }
    }

    #[test]
    fn small_alpha_has_no_spurious_touching_roots() {
        // alpha = 1/22: J_k(a) is tiny on much of each branch
        let m = Material::new(20.0, 1.0, 2).unwrap();
        let c = disk_spectrum(&m, Bc::Dir, 1500.0).unwrap();
        assert!(c.notes.is_empty(), "{:?}", &c.notes[..c.notes.len().min(3)]);
        let fine = ScanOptions { step_fraction: 0.03, ..ScanOptions::default() };
        let d = disk_spectrum_with(&m, Bc::Dir, 1500.0, &fine).unwrap();
        assert_eq!(c.total(), d.total());
    }

    #[test]
    fn rejects_non_planar_material() {
        let m = Material::new(2.0, 1.0, 3).unwrap();
        assert!(disk_spectrum(&m, Bc::Dir, 10.0).is_err());
    }
}
