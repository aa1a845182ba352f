//! Bracketing root finder for real scalar functions on an interval.
//!
//! The interval is sampled on a uniform grid. Every sign change is refined by
//! bisection. Grid points where `|f|` has a local minimum without a sign change
//! are refined locally; a touching minimum that reaches `residual_tol` is
//! reported as a [`RootTag::Suspect`] root rather than dropped.

/// How a root was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootTag {
    /// Bracketed by a sign change.
    Simple,
    /// `|f|` dips to within the residual tolerance without changing sign,
    /// typically an even-order (tangential) root.
    Suspect,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub tag: RootTag,
    /// `|f(x)|` at the reported location.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootScan {
    pub interval: (f64, f64),
    pub step: f64,
    pub roots: Vec<Root>,
}

/// Absolute bisection tolerance in the argument, relaxed to a few ulps for large `|x|`.
pub const X_TOL: f64 = 1e-12;

const SUBDIV: usize = 12;
const MAX_DEPTH: usize = 10;

/// All roots of `f` on `[a, b]` found with grid spacing at most `step`.
pub fn scan_roots<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, step: f64, residual_tol: f64) -> RootScan {
    let mut roots = Vec::new();
    if !(b > a) || !(step > 0.0) {
        return RootScan { interval: (a, b), step, roots };
    }
    let n = ((b - a) / step).ceil().max(1.0) as usize;
    let xs: Vec<f64> = (0..=n).map(|i| if i == n { b } else { a + (b - a) * i as f64 / n as f64 }).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    scan_grid(&mut f, &xs, &fs, residual_tol, 0, &mut roots);
    roots.sort_by(|p, q| p.x.partial_cmp(&q.x).unwrap());
    roots.dedup_by(|p, q| (p.x - q.x).abs() <= 2.0 * tol_at(p.x));
    RootScan { interval: (a, b), step: (b - a) / n as f64, roots }
}

fn tol_at(x: f64) -> f64 {
    X_TOL.max(4.0 * f64::EPSILON * x.abs())
}

fn scan_grid<F: FnMut(f64) -> f64>(f: &mut F, xs: &[f64], fs: &[f64], rtol: f64, depth: usize, out: &mut Vec<Root>) {
    let n = xs.len();
    for i in 0..n {
        if fs[i] == 0.0 {
            out.push(Root { x: xs[i], tag: RootTag::Simple, residual: 0.0 });
        }
    }
    for i in 0..n - 1 {
        let (fa, fb) = (fs[i], fs[i + 1]);
        if fa != 0.0 && fb != 0.0 && (fa < 0.0) != (fb < 0.0) {
            out.push(bisect(f, xs[i], xs[i + 1], fa));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let (l, m, r) = (fs[i - 1], fs[i], fs[i + 1]);
        if l == 0.0 || m == 0.0 || r == 0.0 {
            continue;
        }
        let same = (l < 0.0) == (m < 0.0) && (m < 0.0) == (r < 0.0);
        if same && m.abs() < l.abs() && m.abs() <= r.abs() {
            refine_dip(f, xs[i - 1], xs[i + 1], m, xs[i], rtol, depth, out);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn refine_dip<F: FnMut(f64) -> f64>(
    f: &mut F,
    lo: f64,
    hi: f64,
    fmin: f64,
    xmin: f64,
    rtol: f64,
    depth: usize,
    out: &mut Vec<Root>,
) {
    if depth >= MAX_DEPTH || hi - lo <= 4.0 * tol_at(xmin) {
        if fmin.abs() <= rtol {
            out.push(Root { x: xmin, tag: RootTag::Suspect, residual: fmin.abs() });
        }
        return;
    }
    let xs: Vec<f64> = (0..=SUBDIV).map(|j| lo + (hi - lo) * j as f64 / SUBDIV as f64).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| if x == xmin { fmin } else { f(x) }).collect();
    let n = xs.len();
    let before = out.len();
    for i in 0..n {
        if fs[i] == 0.0 {
            out.push(Root { x: xs[i], tag: RootTag::Simple, residual: 0.0 });
        }
    }
    for i in 0..n - 1 {
        let (fa, fb) = (fs[i], fs[i + 1]);
        if fa != 0.0 && fb != 0.0 && (fa < 0.0) != (fb < 0.0) {
            out.push(bisect(f, xs[i], xs[i + 1], fa));
        }
    }
    if out.len() > before {
        return;
    }
    let mut jb = 0usize;
    for j in 1..n {
        if fs[j].abs() < fs[jb].abs() {
            jb = j;
        }
    }
    if jb > 0 && jb < n - 1 && fs[jb].abs() > rtol {
        // parabola through the best sample and its neighbours: stop when its
        // vertex stays well away from zero on the same side
        let (f0, f1, f2) = (fs[jb - 1], fs[jb], fs[jb + 1]);
        let a = f0 - 2.0 * f1 + f2;
        let b = 0.5 * (f2 - f0);
        if a != 0.0 {
            let vertex = f1 - b * b / (2.0 * a);
            if (vertex < 0.0) == (f1 < 0.0) && vertex.abs() > 0.5 * f1.abs() {
                return;
            }
        }
    }
    let l = xs[jb.saturating_sub(1)];
    let r = xs[(jb + 1).min(n - 1)];
    refine_dip(f, l, r, fs[jb], xs[jb], rtol, depth + 1, out);
}

fn bisect<F: FnMut(f64) -> f64>(f: &mut F, mut lo: f64, mut hi: f64, mut flo: f64) -> Root {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol_at(mid) || mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Root { x: mid, tag: RootTag::Simple, residual: 0.0 };
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    Root { x, tag: RootTag::Simple, residual: f(x).abs() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sine_roots() {
        let s = scan_roots(|x: f64| x.sin(), 0.5, 10.0, 0.1, 1e-12);
        let xs: Vec<f64> = s.roots.iter().map(|r| r.x).collect();
        assert_eq!(xs.len(), 3);
        for (k, x) in xs.iter().enumerate() {
            assert!((x - (k + 1) as f64 * PI).abs() < 1e-11);
        }
        assert!(s.roots.iter().all(|r| r.tag == RootTag::Simple));
    }

    #[test]
    fn tangential_root_is_flagged() {
        let s = scan_roots(|x: f64| (x - 1.234_567).powi(2), 0.0, 3.0, 0.1, 1e-10);
        assert_eq!(s.roots.len(), 1);
        assert_eq!(s.roots[0].tag, RootTag::Suspect);
        assert!((s.roots[0].x - 1.234_567).abs() < 1e-4);
    }

    #[test]
    fn close_pair_inside_one_cell() {
        // two roots 1e-3 apart, grid spacing 0.1
        let f = |x: f64| (x - 2.0) * (x - 2.001) + 1e-9;
        let s = scan_roots(f, 0.0, 5.0, 0.1, 1e-12);
        assert_eq!(s.roots.len(), 2, "{:?}", s.roots);
        assert!(s.roots.iter().all(|r| r.tag == RootTag::Simple));
    }

    #[test]
    fn dip_away_from_zero_is_ignored() {
        let s = scan_roots(|x: f64| 2.0 + x.cos(), 0.0, 20.0, 0.3, 1e-8);
        assert!(s.roots.is_empty());
    }

    #[test]
    fn exact_zero_on_grid_counted_once() {
        let s = scan_roots(|x: f64| x - 1.0, 0.0, 2.0, 0.5, 1e-12);
        assert_eq!(s.roots.len(), 1);
        assert_eq!(s.roots[0].x, 1.0);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn finds_all_roots_of_product(mut r in prop::collection::vec(0.1f64..9.9, 1..6)) {
            r.sort_by(|a, b| a.partial_cmp(b).unwrap());
            r.dedup_by(|a, b| (*a - *b).abs() < 0.05);
            let rr = r.clone();
            let f = move |x: f64| rr.iter().map(|ri| x - ri).product::<f64>();
            let s = scan_roots(f, 0.0, 10.0, 0.01, 1e-14);
            prop_assert_eq!(s.roots.len(), r.len());
            for (a, b) in s.roots.iter().zip(&r) {
                prop_assert!((a.x - b).abs() < 1e-10);
            }
        }
    }
}
