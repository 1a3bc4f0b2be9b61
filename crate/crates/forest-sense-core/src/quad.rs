//! Adaptive quadrature built from fixed-order Gauss–Legendre panels.
//!
//! Each panel is evaluated with a 15-point rule; the error estimate for a
//! panel is the difference between its value and the sum of its two halves.
//! Panels whose estimate exceeds their share of the tolerance are bisected
//! until the budget of subdivisions runs out.

use alloc::vec::Vec;
use core::fmt;

/// Tolerances and subdivision budget for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            rel_tol: 1e-9,
            max_subdivisions: 1 << 16,
        }
    }
}

/// Numeric failure of the adaptive scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadratureError {
    /// The subdivision budget ran out before the error estimate dropped
    /// below tolerance; `residual` is the unresolved error estimate.
    NonConvergence { residual: f64 },
}

impl fmt::Display for QuadratureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadratureError::NonConvergence { residual } => {
                write!(f, "quadrature did not converge; residual error estimate {residual:e}")
            }
        }
    }
}

impl core::error::Error for QuadratureError {}

/// 15-point Gauss–Legendre nodes and weights on [-1, 1].
const GL15: [(f64, f64); 15] = [
    (-9.87992518020485377e-1, 3.07532419961186465e-2),
    (-9.37273392400705951e-1, 7.03660474881080689e-2),
    (-8.48206583410427206e-1, 1.07159220467171773e-1),
    (-7.24417731360170070e-1, 1.39570677926153908e-1),
    (-5.70972172608538830e-1, 1.66269205816993781e-1),
    (-3.94151347077563385e-1, 1.86161000015561878e-1),
    (-2.01194093997434514e-1, 1.98431485327111246e-1),
    (0.0, 2.02578241925560898e-1),
    (2.01194093997434514e-1, 1.98431485327111246e-1),
    (3.94151347077563385e-1, 1.86161000015561878e-1),
    (5.70972172608538830e-1, 1.66269205816993781e-1),
    (7.24417731360170070e-1, 1.39570677926153908e-1),
    (8.48206583410427206e-1, 1.07159220467171773e-1),
    (9.37273392400705951e-1, 7.03660474881080689e-2),
    (9.87992518020485377e-1, 3.07532419961186465e-2),
];

fn gl15_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (node, weight) in GL15 {
        acc += weight * f(center + half * node);
    }
    acc * half
}

/// A panel's bisected estimate and the error inferred from the bisection.
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

fn make_panel<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Panel {
    let single = gl15_panel(f, lo, hi);
    let mid = 0.5 * (lo + hi);
    let value = gl15_panel(f, lo, mid) + gl15_panel(f, mid, hi);
    Panel {
        lo,
        hi,
        value,
        err: (value - single).abs(),
    }
}

/// Integrate `f` over `[a, b]`, splitting the domain at every breakpoint in
/// `(a, b)` so that each adaptive panel sees a smooth piece.
///
/// Globally adaptive: the panel with the largest error estimate is bisected
/// until the summed estimate drops below tolerance. `breakpoints` must be
/// sorted ascending; entries outside `(a, b)` are ignored. Returns
/// [`QuadratureError::NonConvergence`] if the subdivision budget runs out
/// while the total error estimate is still above tolerance.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    spec: &QuadratureSpec,
) -> Result<f64, QuadratureError> {
    if !(b > a) {
        return Ok(0.0);
    }
    let mut edges: Vec<f64> = Vec::with_capacity(breakpoints.len() + 2);
    edges.push(a);
    for &s in breakpoints {
        if s > a && s < b && *edges.last().unwrap() < s {
            edges.push(s);
        }
    }
    edges.push(b);

    let mut panels: Vec<Panel> = edges
        .windows(2)
        .map(|w| make_panel(&f, w[0], w[1]))
        .collect();
    let mut splits_left = spec.max_subdivisions;

    loop {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        let tol = spec.abs_tol.max(spec.rel_tol * total.abs());
        if total_err <= tol {
            return Ok(total);
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.err.partial_cmp(&b.1.err).unwrap_or(core::cmp::Ordering::Equal))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let Panel { lo, hi, .. } = panels[worst];
        let mid = 0.5 * (lo + hi);
        if splits_left == 0 || mid <= lo || mid >= hi {
            return Err(QuadratureError::NonConvergence {
                residual: total_err,
            });
        }
        splits_left -= 1;
        panels[worst] = make_panel(&f, lo, mid);
        panels.push(make_panel(&f, mid, hi));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn defaults_match_contract() {
        let q = QuadratureSpec::default();
        assert_eq!(q.abs_tol, 1e-9);
        assert_eq!(q.rel_tol, 1e-9);
        assert_eq!(q.max_subdivisions, 65536);
    }

    #[test]
    fn integrates_polynomials_exactly() {
        let v = integrate(|x| x * x, 0.0, 1.0, &[], &default_spec()).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-14);
        // GL-15 is exact through degree 29 on a single panel.
        let v = integrate(|x| libm::pow(x, 29.0), 0.0, 1.0, &[], &default_spec()).unwrap();
        assert!((v - 1.0 / 30.0).abs() < 1e-13, "{v}");
    }

    #[test]
    fn integrates_transcendentals() {
        let v = integrate(libm::sin, 0.0, core::f64::consts::PI, &[], &default_spec()).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        let v = integrate(|x| libm::exp(-x), 0.0, 20.0, &[], &default_spec()).unwrap();
        assert!((v - (1.0 - libm::exp(-20.0))).abs() < 1e-12);
    }

    #[test]
    fn breakpoint_isolates_kink() {
        let f = |x: f64| (x - 0.3).abs();
        let exact = 0.3f64.powi(2) / 2.0 + 0.7f64.powi(2) / 2.0;
        let v = integrate(f, 0.0, 1.0, &[0.3], &default_spec()).unwrap();
        assert!((v - exact).abs() < 1e-14, "{v} vs {exact}");
    }

    #[test]
    fn breakpoints_outside_domain_ignored() {
        let v = integrate(|x| x, 0.0, 1.0, &[-1.0, 0.5, 7.0], &default_spec()).unwrap();
        assert!((v - 0.5).abs() < 1e-14);
    }

    #[test]
    fn empty_domain_is_zero() {
        assert_eq!(integrate(|x| x, 1.0, 1.0, &[], &default_spec()).unwrap(), 0.0);
        assert_eq!(integrate(|x| x, 2.0, 1.0, &[], &default_spec()).unwrap(), 0.0);
    }

    #[test]
    fn exhausted_budget_reports_nonconvergence() {
        // A step not aligned with any breakpoint defeats a budget of one split.
        let spec = QuadratureSpec {
            abs_tol: 1e-15,
            rel_tol: 1e-15,
            max_subdivisions: 1,
        };
        let f = |x: f64| if x < 0.337 { 0.0 } else { 1.0 };
        let err = integrate(f, 0.0, 1.0, &[], &spec).unwrap_err();
        let QuadratureError::NonConvergence { residual } = err;
        assert!(residual > 0.0);
    }

    #[test]
    fn converges_on_steep_exponential() {
        // Steep but smooth: needs several subdivisions, then converges.
        let v = integrate(|x| libm::exp(-200.0 * x * x), -1.0, 1.0, &[], &default_spec()).unwrap();
        let exact = libm::sqrt(core::f64::consts::PI / 200.0) * libm::erf(libm::sqrt(200.0));
        assert!((v - exact).abs() < 1e-12, "{v} vs {exact}");
    }
}
